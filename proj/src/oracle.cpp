#include "gysin/oracle.hpp"

#include "gysin/pushforward.hpp"

namespace gysin {

TPoly single_step_pushforward(const TPoly& p, int var, int rank,
                              const QuotientSeries& series) {
    const int d = p.num_vars();
    if (var < 0 || var >= d) {
        fail(ErrorCode::arity, "step variable t" + std::to_string(var + 1) +
                                   " out of range for " + std::to_string(d) +
                                   " variables");
    }
    if (rank < 1) fail(ErrorCode::input, "step rank must be >= 1");
    for (const auto& [j, sign] : series.corrections) {
        if (j < 0 || j >= d || j == var) {
            fail(ErrorCode::input, "correction variable t" + std::to_string(j + 1) +
                                       " invalid for a step in t" + std::to_string(var + 1));
        }
        if (sign != 1 && sign != -1) fail(ErrorCode::input, "correction sign must be +-1");
    }

    const int m = static_cast<int>(series.corrections.size());
    const int e = rank - 1;
    TPoly out(d);
    std::vector<int> exp;
    for (const auto& [a, coeff] : p.terms()) {
        const int av = a[static_cast<size_t>(var)];
        // prod (1 + sign_j t_j / t) expanded over subsets of the corrections.
        for (int mask = 0; mask < (1 << m); ++mask) {
            int k = av - __builtin_popcount(static_cast<unsigned>(mask)) - e;
            if (k < 0) continue;
            exp = a;
            exp[static_cast<size_t>(var)] = 0;
            int sign = 1;
            for (int b = 0; b < m; ++b) {
                if (mask & (1 << b)) {
                    sign *= series.corrections[static_cast<size_t>(b)].second;
                    exp[static_cast<size_t>(series.corrections[static_cast<size_t>(b)].first)]++;
                }
            }
            ClassPoly c = sign == 1 ? coeff : -coeff;
            if (k > 0) c = c * ClassPoly(segre_symbol(series.base_bundle, k));
            out.add_term(exp, c);
        }
    }
    return out;
}

namespace {

ClassPoly constant_term(const TPoly& p) {
    ClassPoly out;
    for (const auto& [e, c] : p.terms()) {
        for (int a : e) {
            if (a != 0) fail(ErrorCode::internal, "tower left a live variable behind");
        }
        out += c;
    }
    return out;
}

std::vector<std::pair<int, int>> later_corrections(int var, int d) {
    std::vector<std::pair<int, int>> corr;
    for (int j = var + 1; j < d; ++j) corr.emplace_back(j, -1);
    return corr;
}

}  // namespace

ClassPoly stepwise_pushforward_a(const TPoly& f, int n,
                                 const std::vector<int>& dims) {
    FlagGeometry g = FlagGeometry::flag_a(n, dims);
    const int d = g.d();
    if (f.num_vars() != d) {
        fail(ErrorCode::arity, "f has " + std::to_string(f.num_vars()) +
                                   " variables but the tower needs " + std::to_string(d));
    }

    // Within the block for d_k the closed bracket wants exponents rank-1 ...
    // rank-r_k, while the full tower integrates every variable against
    // rank-1. The gap is the staircase monomial, one ascent per block.
    std::vector<int> staircase(static_cast<size_t>(d), 0);
    int prev = 0;
    for (int dk : dims) {
        for (int i = 1; i <= dk - prev; ++i) {
            staircase[static_cast<size_t>(d - dk + i - 1)] = i - 1;
        }
        prev = dk;
    }
    TPoly cur = mul(f, TPoly::monomial(staircase, ClassPoly::one()));

    for (int v = 0; v < d; ++v) {
        QuotientSeries series{"E", later_corrections(v, d)};
        cur = single_step_pushforward(cur, v, n - d + v + 1, series);
    }
    return constant_term(cur);
}

ClassPoly stepwise_pushforward_kl_a(const TPoly& f, const StrictPartition& mu,
                                    int n) {
    FlagGeometry g = FlagGeometry::kl_a(n, mu);
    const int d = g.d();
    if (f.num_vars() != d) {
        fail(ErrorCode::arity, "f has " + std::to_string(f.num_vars()) +
                                   " variables but the tower needs " + std::to_string(d));
    }
    TPoly cur = f;
    for (int v = 0; v < d; ++v) {
        // Step v lives on P(E_{mu_{v+1}}/U_{d-v-1}).
        int rank = mu.part(v) - (d - v - 1);
        QuotientSeries series{kl_bundle_name(mu.part(v)), later_corrections(v, d)};
        cur = single_step_pushforward(cur, v, rank, series);
    }
    return constant_term(cur);
}

namespace {

Int integral_degree(const PushforwardResult& res, const char* what) {
    auto value = res.value.constant_value();
    if (!value || denominator(*value) != 1) {
        fail(ErrorCode::internal, std::string(what) + " degree came out non-integral");
    }
    return numerator(*value);
}

TPoly hyperplane_power(int d, int exponent) {
    TPoly sum(d);
    for (int i = 0; i < d; ++i) sum += TPoly::variable(d, i);
    return sum.pow(exponent);
}

}  // namespace

Int grassmannian_degree(int d, int n) {
    if (d < 1 || d >= n) {
        fail(ErrorCode::geometry, "grassmannian degree needs 1 <= d < n");
    }
    FlagGeometry g = FlagGeometry::flag_a(n, {d}, BaseMode::trivial);
    return integral_degree(
        pushforward(hyperplane_power(d, d * (n - d)), g), "grassmannian");
}

Int lg_degree(int n) {
    if (n < 1) fail(ErrorCode::geometry, "LG degree needs n >= 1");
    FlagGeometry g = FlagGeometry::flag_c(n, {n}, Twist::zero, BaseMode::trivial);
    return integral_degree(
        pushforward(hyperplane_power(n, n * (n + 1) / 2), g), "LG");
}

Int quadric_degree(int rank) {
    if (rank < 2) fail(ErrorCode::geometry, "quadric degree needs rank >= 2");
    FlagGeometry g = FlagGeometry::flag_bd(rank, {1}, Twist::zero, BaseMode::trivial);
    return integral_degree(
        pushforward(hyperplane_power(1, rank - 2), g), "quadric");
}

}  // namespace gysin
