#include "gysin/geometry.hpp"

#include "gysin/error.hpp"

#include <numeric>
#include <sstream>

namespace gysin {

namespace {

void check_dims(const std::vector<int>& dims, int upper, const std::string& what) {
    if (dims.empty()) fail(ErrorCode::geometry, "dims must be nonempty");
    int prev = 0;
    for (int dk : dims) {
        if (dk <= prev) {
            fail(ErrorCode::geometry, "dims must be strictly increasing, got " +
                                          std::to_string(dk) + " after " + std::to_string(prev));
        }
        if (dk > upper) {
            fail(ErrorCode::geometry, "dim " + std::to_string(dk) + " exceeds the bound " +
                                          what + " = " + std::to_string(upper));
        }
        prev = dk;
    }
}

void check_mu_bound(const StrictPartition& mu, int upper, const std::string& what) {
    if (mu.num_parts() == 0) fail(ErrorCode::geometry, "mu must be nonempty");
    if (mu.part(0) > upper) {
        fail(ErrorCode::geometry, "mu_1 = " + std::to_string(mu.part(0)) +
                                      " exceeds the bound " + what + " = " + std::to_string(upper));
    }
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::a_flag: return "A";
        case Family::c_flag: return "C";
        case Family::bd_flag: return "BD";
        case Family::kl_a: return "KL_A";
        case Family::kl_c: return "KL_C";
    }
    return "?";
}

FlagGeometry FlagGeometry::flag_a(int n, std::vector<int> dims, BaseMode base) {
    if (n < 2) fail(ErrorCode::geometry, "type A needs n >= 2");
    check_dims(dims, n - 1, "n - 1");
    FlagGeometry g;
    g.family_ = Family::a_flag;
    g.n_ = n;
    g.rank_e_ = n;
    g.dims_ = std::move(dims);
    g.twist_ = Twist::zero;
    g.base_ = base;
    return g;
}

FlagGeometry FlagGeometry::flag_c(int n, std::vector<int> dims, Twist twist, BaseMode base) {
    if (n < 1) fail(ErrorCode::geometry, "type C needs n >= 1");
    check_dims(dims, n, "n");
    FlagGeometry g;
    g.family_ = Family::c_flag;
    g.n_ = n;
    g.rank_e_ = 2 * n;
    g.dims_ = std::move(dims);
    g.twist_ = twist;
    g.base_ = base;
    return g;
}

FlagGeometry FlagGeometry::flag_bd(int rank, std::vector<int> dims, Twist twist, BaseMode base) {
    if (rank < 2) fail(ErrorCode::geometry, "type B/D needs rank >= 2");
    int n = rank / 2;
    check_dims(dims, n, "floor(rank/2)");
    FlagGeometry g;
    g.family_ = Family::bd_flag;
    g.n_ = n;
    g.rank_e_ = rank;
    g.dims_ = std::move(dims);
    g.twist_ = twist;
    g.base_ = base;
    return g;
}

FlagGeometry FlagGeometry::kl_a(int n, StrictPartition mu, BaseMode base) {
    if (n < 1) fail(ErrorCode::geometry, "KL type A needs n >= 1");
    check_mu_bound(mu, n, "n");
    FlagGeometry g;
    g.family_ = Family::kl_a;
    g.n_ = n;
    g.rank_e_ = n;
    g.mu_ = std::move(mu);
    g.twist_ = Twist::zero;
    g.base_ = base;
    return g;
}

FlagGeometry FlagGeometry::kl_c(int n, StrictPartition mu, Twist twist, BaseMode base) {
    if (n < 1) fail(ErrorCode::geometry, "KL type C needs n >= 1");
    check_mu_bound(mu, 2 * n, "2n");
    for (int i = 0; i < mu.num_parts(); ++i) {
        for (int j = i + 1; j < mu.num_parts(); ++j) {
            if (mu.part(i) + mu.part(j) == 2 * n + 1) {
                fail(ErrorCode::geometry,
                     "mu is inadmissible: mu_" + std::to_string(i + 1) + " + mu_" +
                         std::to_string(j + 1) + " = " + std::to_string(2 * n + 1) +
                         " = 2n + 1");
            }
        }
    }
    FlagGeometry g;
    g.family_ = Family::kl_c;
    g.n_ = n;
    g.rank_e_ = 2 * n;
    g.mu_ = std::move(mu);
    g.twist_ = twist;
    g.base_ = base;
    return g;
}

int FlagGeometry::d() const {
    return is_kl() ? mu_.num_parts() : dims_.back();
}

FlagGeometry FlagGeometry::with_mu(StrictPartition mu) const {
    switch (family_) {
        case Family::kl_a: return kl_a(n_, std::move(mu), base_);
        case Family::kl_c: return kl_c(n_, std::move(mu), twist_, base_);
        default: fail(ErrorCode::geometry, "mu only applies to KL families");
    }
}

std::string FlagGeometry::str() const {
    std::ostringstream out;
    out << family_name(family_) << "(n=" << n_;
    if (family_ == Family::bd_flag) out << ", rank=" << rank_e_;
    if (is_kl()) {
        out << ", mu=" << mu_.str();
    } else {
        out << ", dims=(";
        for (size_t i = 0; i < dims_.size(); ++i) {
            if (i) out << ",";
            out << dims_[i];
        }
        out << ")";
    }
    if (twist_ == Twist::formal) out << ", twisted";
    if (base_ == BaseMode::trivial) out << ", trivial base";
    out << ")";
    return out.str();
}

namespace {

StrictPartition nu_from_lambda(const Partition& lambda, int rank, int d,
                               const char* box_name) {
    if (d < 1) fail(ErrorCode::geometry, "need d >= 1");
    if (!lambda.fits_in_box(d, rank - d)) {
        fail(ErrorCode::geometry, "lambda " + lambda.str() + " does not fit in the " +
                                      std::to_string(d) + " x " + box_name + " box (" +
                                      std::to_string(d) + " x " + std::to_string(rank - d) +
                                      ")");
    }
    std::vector<int> nu(static_cast<size_t>(d));
    for (int i = 1; i <= d; ++i) {
        nu[static_cast<size_t>(i - 1)] = rank + 1 - i - lambda.part(d - i);
    }
    return StrictPartition(std::move(nu));
}

Partition lambda_from_nu(const StrictPartition& nu, int rank) {
    int d = nu.num_parts();
    if (d < 1) fail(ErrorCode::geometry, "need d >= 1");
    std::vector<int> lambda(static_cast<size_t>(d));
    for (int j = 1; j <= d; ++j) {
        int v = rank - d + j - nu.part(d - j);
        lambda[static_cast<size_t>(j - 1)] = v;
        if (v < 0 || v > rank - d) {
            fail(ErrorCode::geometry, "nu " + nu.str() + " is not in range for rank " +
                                          std::to_string(rank));
        }
    }
    return Partition(std::move(lambda));
}

}  // namespace

StrictPartition nu_from_lambda_a(const Partition& lambda, int n, int d) {
    return nu_from_lambda(lambda, n, d, "(n-d)");
}

StrictPartition nu_from_lambda_c(const Partition& lambda, int n, int d) {
    StrictPartition nu = nu_from_lambda(lambda, 2 * n, d, "(2n-d)");
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            if (nu.part(i) + nu.part(j) == 2 * n + 1) {
                fail(ErrorCode::geometry, "lambda " + lambda.str() +
                                              " gives inadmissible nu " + nu.str() +
                                              ": nu_" + std::to_string(i + 1) + " + nu_" +
                                              std::to_string(j + 1) + " = 2n + 1");
            }
        }
    }
    return nu;
}

Partition lambda_from_nu_a(const StrictPartition& nu, int n) {
    return lambda_from_nu(nu, n);
}

Partition lambda_from_nu_c(const StrictPartition& nu, int n) {
    return lambda_from_nu(nu, 2 * n);
}

std::vector<int> exponents_for(const FlagGeometry& g) {
    const int d = g.d();
    std::vector<int> e(static_cast<size_t>(d), 0);
    if (g.is_kl()) {
        for (int i = 0; i < d; ++i) e[static_cast<size_t>(i)] = g.mu().part(i) - 1;
        return e;
    }
    int prev = 0;
    for (int dk : g.dims()) {
        for (int i = 1; i <= dk - prev; ++i) {
            e[static_cast<size_t>(d - dk + i - 1)] = g.rank_e() - i;
        }
        prev = dk;
    }
    return e;
}

int kernel_t_degree(const FlagGeometry& g) {
    const int d = g.d();
    const int pairs = d * (d - 1) / 2;
    switch (g.family()) {
        case Family::a_flag:
        case Family::kl_a:
            return pairs;
        case Family::c_flag:
            return 2 * pairs;
        case Family::bd_flag:
            return 2 * pairs + d;
        case Family::kl_c: {
            int selected = 0;
            for (int i = 0; i < d; ++i) {
                for (int j = i + 1; j < d; ++j) {
                    if (g.mu().part(i) + g.mu().part(j) > 2 * g.n() + 1) selected++;
                }
            }
            return pairs + selected;
        }
    }
    fail(ErrorCode::internal, "unknown family");
}

int fiber_dim(const FlagGeometry& g) {
    std::vector<int> e = exponents_for(g);
    return std::accumulate(e.begin(), e.end(), 0) - kernel_t_degree(g);
}

}  // namespace gysin
