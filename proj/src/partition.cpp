#include "gysin/partition.hpp"

#include "gysin/error.hpp"

#include <numeric>
#include <sstream>

namespace gysin {

namespace {

std::string join_parts(const std::vector<int>& parts) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ",";
        out << parts[i];
    }
    out << ")";
    return out.str();
}

}  // namespace

Partition::Partition(std::vector<int> parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) {
            fail(ErrorCode::input, "partition part " + std::to_string(parts[i]) + " is negative");
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            fail(ErrorCode::input, "partition parts must be weakly decreasing, got " + join_parts(parts));
        }
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    parts_ = std::move(parts);
}

int Partition::part(int i) const {
    if (i < 0) fail(ErrorCode::internal, "negative partition index");
    return i < num_parts() ? parts_[static_cast<size_t>(i)] : 0;
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::fits_in_box(int rows, int cols) const {
    return num_parts() <= rows && (parts_.empty() || parts_[0] <= cols);
}

std::string Partition::str() const {
    return join_parts(parts_);
}

StrictPartition::StrictPartition(std::vector<int> parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) {
            fail(ErrorCode::input, "strict partition parts must be positive, got " + join_parts(parts));
        }
        if (i > 0 && parts[i] >= parts[i - 1]) {
            fail(ErrorCode::input, "strict partition parts must strictly decrease, got " + join_parts(parts));
        }
    }
    parts_ = std::move(parts);
}

std::string StrictPartition::str() const {
    return join_parts(parts_);
}

Int syt_count(const Partition& shape) {
    const auto& rows = shape.parts();
    if (rows.empty()) return 1;
    std::vector<int> conj(static_cast<size_t>(rows[0]), 0);
    for (int r = 0; r < shape.num_parts(); ++r) {
        for (int c = 0; c < rows[static_cast<size_t>(r)]; ++c) {
            conj[static_cast<size_t>(c)]++;
        }
    }
    Int hooks = 1;
    for (int r = 0; r < shape.num_parts(); ++r) {
        for (int c = 0; c < rows[static_cast<size_t>(r)]; ++c) {
            int arm = rows[static_cast<size_t>(r)] - c - 1;
            int leg = conj[static_cast<size_t>(c)] - r - 1;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(shape.size()) / hooks;
}

}  // namespace gysin
