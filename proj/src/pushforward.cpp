#include "gysin/pushforward.hpp"

namespace gysin {

PushforwardResult pushforward(const TPoly& f, const FlagGeometry& g, bool halve,
                              const PushforwardOptions& opts) {
    const int d = g.d();
    if (f.num_vars() != d) {
        fail(ErrorCode::arity, "f has " + std::to_string(f.num_vars()) +
                                   " variables but " + g.str() + " needs " +
                                   std::to_string(d));
    }
    KernelSpec spec = build_kernel_spec(g, opts.term_ceiling);
    if (halve && !spec.halvable) {
        fail(ErrorCode::halve, "halving is not defined for " + g.str());
    }

    PushforwardResult res;
    res.fiber_dim = fiber_dim(g);
    res.input_degree = f.homogeneous_total_degree();
    if (f.is_zero()) res.input_degree = 0;

    TPoly product = mul(f, spec.kernel, opts.term_ceiling);
    res.value = extract_with_segre(product, spec.exponents, spec.assign);
    if (halve) {
        res.value = res.value * Rational(1, 2);
        res.halved = true;
    }
    if (g.base() == BaseMode::trivial) {
        res.value = kill_positive_segre(res.value);
    }
    if (opts.cutoff) {
        res.value = res.value.truncate_above(*opts.cutoff);
    }
    return res;
}

PushforwardResult schubert_class_to_base(const Partition& lambda,
                                         const FlagGeometry& g) {
    return schubert_class_to_base(lambda, g,
                                  TPoly::constant(g.d(), ClassPoly::one()));
}

PushforwardResult schubert_class_to_base(const Partition& lambda,
                                         const FlagGeometry& g, const TPoly& f) {
    StrictPartition nu;
    switch (g.family()) {
        case Family::kl_a:
            nu = nu_from_lambda_a(lambda, g.n(), g.d());
            break;
        case Family::kl_c:
            nu = nu_from_lambda_c(lambda, g.n(), g.d());
            break;
        default:
            fail(ErrorCode::unsupported,
                 "schubert_class_to_base needs a KL geometry, got " + g.str());
    }
    return pushforward(f, g.with_mu(std::move(nu)));
}

}  // namespace gysin
