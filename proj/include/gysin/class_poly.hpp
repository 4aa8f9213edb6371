#pragma once

#include "gysin/error.hpp"
#include "gysin/rational.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gysin {

enum class SymbolKind { segre, chern };

// One formal characteristic class: s_i(B) for any bundle name B, or a Chern
// class. grade == index. The twist line only ever appears as c_1(L).
struct ClassSymbol {
    std::string bundle;
    SymbolKind kind = SymbolKind::segre;
    int index = 1;

    int grade() const { return index; }
    auto operator<=>(const ClassSymbol&) const = default;

    std::string str() const;
};

ClassSymbol segre_symbol(std::string bundle, int index);
// c_1(L), the only Chern symbol the kernels produce.
ClassSymbol twist_class();

// Multiset of symbols. Factors are kept sorted by (bundle, kind, index) and
// exponents are >= 1.
class ClassMonomial {
public:
    ClassMonomial() = default;
    explicit ClassMonomial(std::vector<std::pair<ClassSymbol, int>> factors);

    const std::vector<std::pair<ClassSymbol, int>>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    int grade() const;

    ClassMonomial operator*(const ClassMonomial& other) const;

    // (grade, lex) order; doubles as the canonical printing order.
    bool operator<(const ClassMonomial& other) const;
    bool operator==(const ClassMonomial& other) const = default;

    std::string str() const;

private:
    std::vector<std::pair<ClassSymbol, int>> factors_;
};

// Polynomial in formal class symbols over exact rationals. The zero
// coefficient is never stored, so map equality is structural equality.
class ClassPoly {
public:
    ClassPoly() = default;
    ClassPoly(int c) : ClassPoly(Rational(c)) {}
    ClassPoly(Rational c);
    ClassPoly(const ClassSymbol& s);
    ClassPoly(const ClassMonomial& m, Rational c = 1);

    static ClassPoly zero() { return ClassPoly(); }
    static ClassPoly one() { return ClassPoly(1); }

    const std::map<ClassMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ClassMonomial& m, const Rational& c);

    ClassPoly& operator+=(const ClassPoly& other);
    ClassPoly& operator-=(const ClassPoly& other);
    ClassPoly operator+(const ClassPoly& other) const;
    ClassPoly operator-(const ClassPoly& other) const;
    ClassPoly operator-() const;
    ClassPoly operator*(const ClassPoly& other) const;
    ClassPoly operator*(const Rational& c) const;
    ClassPoly pow(int k) const;

    bool operator==(const ClassPoly& other) const = default;

    // nullopt for the zero polynomial and for mixed grades.
    std::optional<int> homogeneous_grade() const;
    int max_grade() const;
    ClassPoly grade_component(int k) const;
    ClassPoly truncate_above(int cutoff) const;

    // Constant polynomials expose their rational value.
    std::optional<Rational> constant_value() const;

    std::string str() const;

private:
    std::map<ClassMonomial, Rational> terms_;
};

// Canonical one-term-per-line rendering, in map order.
std::vector<std::string> term_lines(const ClassPoly& p);

// c_i(B) expanded in the Segre classes of B via c_0 = 1,
// c_i = -(s_1 c_{i-1} + ... + s_i c_0). Errors on i < 0.
ClassPoly chern_from_segre(const std::string& bundle, int i);

// Applies rule to every symbol occurrence; symbols the rule declines
// (nullopt) stay as they are.
ClassPoly substitute(
    const ClassPoly& p,
    const std::function<std::optional<ClassPoly>(const ClassSymbol&)>& rule);

// Rewrites Segre classes along a full flag of bundles chain[0] c ... c
// chain[n-1]: s(chain[i]) = s(chain[n-1]) * prod_{j>i} (1 + y[j-1]), where
// y[j-1] is the grade-1 class of the line chain[j]/chain[j-1]. Requires
// y.size() + 1 == chain.size(). Segre symbols of bundles outside the chain
// are rejected; Chern symbols pass through.
ClassPoly substitute_flag_relations(const ClassPoly& p,
                                    const std::vector<std::string>& chain,
                                    const std::vector<ClassPoly>& y);

// Kills every s_{i>=1} of every bundle; c_1(L) survives.
ClassPoly kill_positive_segre(const ClassPoly& p);

ClassPoly rename_bundle(const ClassPoly& p, const std::string& from,
                        const std::string& to);

}  // namespace gysin
