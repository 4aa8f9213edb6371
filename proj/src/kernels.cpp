#include "gysin/kernels.hpp"

namespace gysin {

namespace {

TPoly pair_difference(int d, int i, int j) {
    return TPoly::variable(d, i) - TPoly::variable(d, j);
}

// c_1(L) + t_i + t_j, or t_i + t_j under twist zero.
TPoly pair_sum(int d, int i, int j, Twist twist) {
    TPoly out = TPoly::variable(d, i) + TPoly::variable(d, j);
    if (twist == Twist::formal) {
        out += TPoly::constant(d, ClassPoly(twist_class()));
    }
    return out;
}

}  // namespace

TPoly kernel_a(int d, long long term_ceiling) {
    if (d < 1) fail(ErrorCode::geometry, "kernel needs d >= 1");
    TPoly out = TPoly::constant(d, ClassPoly::one());
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            out = mul(out, pair_difference(d, i, j), term_ceiling);
        }
    }
    return out;
}

TPoly kernel_c(int d, Twist twist, long long term_ceiling) {
    if (d < 1) fail(ErrorCode::geometry, "kernel needs d >= 1");
    TPoly out = TPoly::constant(d, ClassPoly::one());
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            out = mul(out, pair_sum(d, i, j, twist), term_ceiling);
            out = mul(out, pair_difference(d, i, j), term_ceiling);
        }
    }
    return out;
}

TPoly kernel_bd(int d, Twist twist, long long term_ceiling) {
    TPoly out = kernel_c(d, twist, term_ceiling);
    for (int i = 0; i < d; ++i) {
        TPoly factor = TPoly::variable(d, i).scale(ClassPoly(2));
        if (twist == Twist::formal) {
            factor += TPoly::constant(d, ClassPoly(twist_class()));
        }
        out = mul(out, factor, term_ceiling);
    }
    return out;
}

TPoly kernel_klc(const StrictPartition& mu, int n, Twist twist,
                 long long term_ceiling) {
    const int d = mu.num_parts();
    TPoly out = kernel_a(d, term_ceiling);
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            if (mu.part(i) + mu.part(j) > 2 * n + 1) {
                out = mul(out, pair_sum(d, i, j, twist), term_ceiling);
            }
        }
    }
    return out;
}

std::string kl_bundle_name(int k) {
    return "E_" + std::to_string(k);
}

KernelSpec build_kernel_spec(const FlagGeometry& g, long long term_ceiling) {
    const int d = g.d();
    KernelSpec spec;
    spec.exponents = exponents_for(g);
    switch (g.family()) {
        case Family::a_flag:
            spec.kernel = kernel_a(d, term_ceiling);
            spec.assign.assign(static_cast<size_t>(d), "E");
            break;
        case Family::c_flag:
            spec.kernel = kernel_c(d, g.twist(), term_ceiling);
            spec.assign.assign(static_cast<size_t>(d), "E");
            break;
        case Family::bd_flag:
            spec.kernel = kernel_bd(d, g.twist(), term_ceiling);
            spec.assign.assign(static_cast<size_t>(d), "E");
            // Rank 2n with a full isotropic flag hits both components of the
            // isotropic Grassmannian; the honest answer is half.
            spec.halvable = (g.rank_e() == 2 * g.n() && g.dims().back() == g.n());
            break;
        case Family::kl_a:
            spec.kernel = kernel_a(d, term_ceiling);
            for (int i = 0; i < d; ++i) spec.assign.push_back(kl_bundle_name(g.mu().part(i)));
            break;
        case Family::kl_c:
            spec.kernel = kernel_klc(g.mu(), g.n(), g.twist(), term_ceiling);
            for (int i = 0; i < d; ++i) spec.assign.push_back(kl_bundle_name(g.mu().part(i)));
            break;
    }
    return spec;
}

}  // namespace gysin
