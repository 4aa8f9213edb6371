#pragma once

#include "gysin/geometry.hpp"
#include "gysin/tpoly.hpp"

#include <utility>
#include <vector>

namespace gysin {

// Segre series of one projective-bundle step: s_{1/t}(base_bundle) times
// prod (1 + sign * t_j / t) over the corrections. Each correction is the
// Whitney adjustment for a universal line already split off the bundle; its
// variable is still alive, so the factor stays exact and finite.
struct QuotientSeries {
    std::string base_bundle;
    std::vector<std::pair<int, int>> corrections;  // (variable index, sign)
};

// One projective-bundle pushforward in the single variable var:
// [t^{rank-1}] (p * series). The variable is eliminated (its exponent drops
// to zero); correction variables may gain degree. Everything reduces to the
// index shift s_{a - |S| - (rank-1)} over subsets S of the corrections.
TPoly single_step_pushforward(const TPoly& p, int var, int rank,
                              const QuotientSeries& series);

// Iterated single-bundle pushforwards down the full-flag tower on d =
// dims.back() steps. t_1 is the innermost bundle and is pushed first; the
// step for t_i sees corrections from every t_j with j > i. Partial flags are
// handled by multiplying f with the per-block staircase monomial (the point
// class of the fibers of the forgetful map from the full flag). Returns the
// formal value; trivial-base reduction is the caller's business.
ClassPoly stepwise_pushforward_a(const TPoly& f, int n,
                                 const std::vector<int>& dims);

// Same walk down the KL tower: step i lives on P(E_{mu_i}/U_{d-i}), so the
// rank is mu_i - (d - i) and the Segre series is s(E_{mu_i}) corrected by
// the d - i lines already chosen.
ClassPoly stepwise_pushforward_kl_a(const TPoly& f, const StrictPartition& mu,
                                    int n);

// Degree of the Grassmannian of d-planes in n-space: pushforward of
// (t_1 + ... + t_d)^{d(n-d)} over a trivial base.
Int grassmannian_degree(int d, int n);

// Degree of the Lagrangian Grassmannian LG(n): the d = n, twist-zero
// symplectic pushforward of (t_1 + ... + t_n)^{n(n+1)/2}.
Int lg_degree(int n);

// Degree of the smooth quadric of the given rank (dimension rank - 2):
// the d = 1, twist-zero orthogonal pushforward of t^{rank-2}.
Int quadric_degree(int rank);

}  // namespace gysin
