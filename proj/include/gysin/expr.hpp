#pragma once

#include "gysin/partition.hpp"
#include "gysin/tpoly.hpp"

#include <memory>
#include <string>

namespace gysin {

// f expressions: rational literals, variables x1..xd, s[i](B), c[i](B),
// c1(B) sugar, schur[parts](x), +, -, *, nonnegative integer ^, parens.
// ^ binds tighter than unary minus, which binds tighter than *, then +/-.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { number, variable, segre, chern, schur, add, sub, mul, neg, pow };

    Kind kind = Kind::number;
    Rational number;     // number
    int var = -1;        // variable, 0-based
    std::string bundle;  // segre / chern
    int index = 0;       // segre / chern
    Partition lambda;    // schur
    ExprPtr lhs, rhs;    // add/sub/mul both; neg/pow use lhs
    int exponent = 0;    // pow
};

// Errors carry a 1-based column position in the message.
ExprPtr parse_expression(const std::string& text, int num_vars);

// Canonical rendering; parse(print(e)) reproduces e node for node.
std::string print_expression(const ExprPtr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// Evaluation into a t-polynomial. c[i](B) expands through the Segre classes
// of B; the name L is reserved for the twist line, whose only nonzero
// positive Chern class is c1(L).
TPoly lower_expr(const ExprPtr& e, int num_vars);

}  // namespace gysin
