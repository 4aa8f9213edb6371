#pragma once

#include "gysin/rational.hpp"

#include <string>
#include <vector>

namespace gysin {

// Weakly decreasing parts; trailing zeros are stripped on construction, so
// (2,1,0) and (2,1) compare equal.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    // 0-based; parts beyond the length read as 0.
    int part(int i) const;
    int size() const;
    bool empty() const { return parts_.empty(); }
    bool fits_in_box(int rows, int cols) const;

    bool operator==(const Partition&) const = default;
    std::string str() const;

private:
    std::vector<int> parts_;
};

// Strictly decreasing positive parts, largest first.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_.at(static_cast<size_t>(i)); }

    bool operator==(const StrictPartition&) const = default;
    std::string str() const;

private:
    std::vector<int> parts_;
};

// Standard Young tableaux of the given shape, by the hook length formula.
Int syt_count(const Partition& shape);

}  // namespace gysin
