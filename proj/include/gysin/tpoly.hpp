#pragma once

#include "gysin/class_poly.hpp"
#include "gysin/partition.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gysin {

// Guard for eager kernel products; big enough for every supported geometry,
// small enough to fail fast on runaway input.
inline constexpr long long kTermCeiling = 10'000'000;

// Polynomial in t_1..t_d with ClassPoly coefficients. Keys are exponent
// vectors of fixed length d; zero coefficients are never stored.
class TPoly {
public:
    explicit TPoly(int num_vars);

    static TPoly constant(int num_vars, ClassPoly c);
    static TPoly variable(int num_vars, int var);  // t_{var+1}, var 0-based
    static TPoly monomial(std::vector<int> exponents, ClassPoly c);

    int num_vars() const { return num_vars_; }
    const std::map<std::vector<int>, ClassPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long term_count() const { return static_cast<long long>(terms_.size()); }

    void add_term(const std::vector<int>& exponents, const ClassPoly& c);

    TPoly& operator+=(const TPoly& other);
    TPoly& operator-=(const TPoly& other);
    TPoly operator+(const TPoly& other) const;
    TPoly operator-(const TPoly& other) const;
    TPoly operator-() const;
    TPoly operator*(const TPoly& other) const;
    TPoly scale(const ClassPoly& c) const;
    TPoly pow(int k) const;

    bool operator==(const TPoly& other) const = default;

    // Max total exponent; 0 for the zero polynomial.
    int t_degree() const;
    // Total degree counts the coefficient grade: deg(c * t^a) = grade(c) +
    // sum(a). nullopt when terms disagree (or a coefficient is mixed).
    std::optional<int> homogeneous_total_degree() const;

    std::string str() const;

private:
    void check_arity(const TPoly& other) const;

    int num_vars_ = 0;
    std::map<std::vector<int>, ClassPoly> terms_;
};

// Product with an explicit term ceiling; throws ErrorCode::limit when the
// pairwise expansion would exceed it.
TPoly mul(const TPoly& a, const TPoly& b, long long term_ceiling = kTermCeiling);

// [t_1^{e_1} ... t_d^{e_d}] (p * prod_i s_{1/t_i}(B_i)) where B_i =
// assign[i]. Realized as an index shift: the term c * t^a contributes
// c * prod_i s_{a_i - e_i}(B_i), with s_k = 0 for k < 0 and s_0 = 1, so no
// Laurent arithmetic is needed.
ClassPoly extract_with_segre(const TPoly& p, const std::vector<int>& e,
                             const std::vector<std::string>& assign);

// Schur polynomial s_lambda(t_1..t_d) as the content generating function of
// semistandard tableaux with entries <= d. Errors when lambda has more parts
// than variables.
TPoly schur_in_t(const Partition& lambda, int d);

}  // namespace gysin
