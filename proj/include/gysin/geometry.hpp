#pragma once

#include "gysin/partition.hpp"

#include <string>
#include <vector>

namespace gysin {

// a_flag/c_flag/bd_flag: partial isotropic flag bundles in a bundle E of
// rank n / 2n / 2n or 2n+1. kl_a/kl_c: one-dimension-step flag chains with
// per-step reference bundles E_{mu_i} from a fixed full flag of E.
enum class Family { a_flag, c_flag, bd_flag, kl_a, kl_c };

enum class Twist { formal, zero };
enum class BaseMode { formal, trivial };

const char* family_name(Family f);

class FlagGeometry {
public:
    static FlagGeometry flag_a(int n, std::vector<int> dims,
                               BaseMode base = BaseMode::formal);
    static FlagGeometry flag_c(int n, std::vector<int> dims,
                               Twist twist = Twist::formal,
                               BaseMode base = BaseMode::formal);
    static FlagGeometry flag_bd(int rank, std::vector<int> dims,
                                Twist twist = Twist::formal,
                                BaseMode base = BaseMode::formal);
    static FlagGeometry kl_a(int n, StrictPartition mu,
                             BaseMode base = BaseMode::formal);
    static FlagGeometry kl_c(int n, StrictPartition mu,
                             Twist twist = Twist::formal,
                             BaseMode base = BaseMode::formal);

    Family family() const { return family_; }
    int n() const { return n_; }
    int rank_e() const { return rank_e_; }
    const std::vector<int>& dims() const { return dims_; }
    const StrictPartition& mu() const { return mu_; }
    Twist twist() const { return twist_; }
    BaseMode base() const { return base_; }
    bool is_kl() const { return family_ == Family::kl_a || family_ == Family::kl_c; }
    // Number of t-variables: last dim for flags, number of parts for KL.
    int d() const;

    FlagGeometry with_mu(StrictPartition mu) const;
    std::string str() const;

private:
    FlagGeometry() = default;

    Family family_ = Family::a_flag;
    int n_ = 0;
    int rank_e_ = 0;
    std::vector<int> dims_;
    StrictPartition mu_;
    Twist twist_ = Twist::zero;
    BaseMode base_ = BaseMode::formal;
};

// lambda inside the (rank - d) x d box corresponds to the strictly
// decreasing nu with nu_i = rank + 1 - i - lambda_{d+1-i}; rank is n for
// type A and 2n for type C. The C version also checks nu_i + nu_j != 2n+1.
StrictPartition nu_from_lambda_a(const Partition& lambda, int n, int d);
StrictPartition nu_from_lambda_c(const Partition& lambda, int n, int d);
Partition lambda_from_nu_a(const StrictPartition& nu, int n);
Partition lambda_from_nu_c(const StrictPartition& nu, int n);

// Extraction exponents: for flag families, within the block for d_k the
// exponents are rank_E - 1, ..., rank_E - (d_k - d_{k-1}) placed at
// positions d - d_k + 1 .. d - d_{k-1}; for KL families, e_i = mu_i - 1.
std::vector<int> exponents_for(const FlagGeometry& g);

// Top t-degree of the kernel, computed structurally.
int kernel_t_degree(const FlagGeometry& g);

// Relative dimension: sum of exponents minus the kernel's top t-degree.
int fiber_dim(const FlagGeometry& g);

}  // namespace gysin
