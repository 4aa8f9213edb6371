#include "testutil.hpp"

#include "gysin/expr.hpp"

#include <functional>
#include <random>

using namespace gysin;
using gysin::testing::expect_error;
using gysin::testing::tp;

namespace {

std::string error_message(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    FAIL("expected an Error");
    return {};
}

ExprPtr num(long long n) {
    Expr e;
    e.kind = Expr::Kind::number;
    e.number = Rational(n);
    return std::make_shared<const Expr>(std::move(e));
}

ExprPtr node(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs = nullptr) {
    Expr e;
    e.kind = kind;
    e.lhs = std::move(lhs);
    e.rhs = std::move(rhs);
    return std::make_shared<const Expr>(std::move(e));
}

// Random printable AST. Negative number literals are excluded on purpose:
// the parser never produces them (a leading minus is a neg node), so the
// print/parse roundtrip is only promised without them.
ExprPtr random_expr(std::mt19937& rng, int depth, int d) {
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    static const std::vector<std::string> bundles = {"E", "F", "Q", "E_2", "L"};
    if (depth == 0 || pick(4) == 0) {
        Expr e;
        switch (pick(5)) {
            case 0:
                e.kind = Expr::Kind::number;
                e.number = Rational(pick(12), 1 + pick(4));
                break;
            case 1:
                e.kind = Expr::Kind::variable;
                e.var = pick(d);
                break;
            case 2:
                e.kind = Expr::Kind::segre;
                e.bundle = bundles[static_cast<size_t>(pick(5))];
                e.index = pick(5);
                break;
            case 3:
                e.kind = Expr::Kind::chern;
                e.bundle = bundles[static_cast<size_t>(pick(5))];
                e.index = pick(5);
                break;
            default: {
                int a = 1 + pick(3), b = pick(a + 1);
                e.kind = Expr::Kind::schur;
                e.lambda = Partition(b > 0 ? std::vector<int>{a, b}
                                           : std::vector<int>{a});
                break;
            }
        }
        return std::make_shared<const Expr>(std::move(e));
    }
    Expr e;
    switch (pick(5)) {
        case 0: e.kind = Expr::Kind::add; break;
        case 1: e.kind = Expr::Kind::sub; break;
        case 2: e.kind = Expr::Kind::mul; break;
        case 3: e.kind = Expr::Kind::neg; break;
        default: e.kind = Expr::Kind::pow; break;
    }
    e.lhs = random_expr(rng, depth - 1, d);
    if (e.kind == Expr::Kind::add || e.kind == Expr::Kind::sub ||
        e.kind == Expr::Kind::mul) {
        e.rhs = random_expr(rng, depth - 1, d);
    }
    if (e.kind == Expr::Kind::pow) e.exponent = pick(5);
    return std::make_shared<const Expr>(std::move(e));
}

}  // namespace

TEST_CASE("atoms and literals") {
    CHECK(tp("7", 1) == TPoly::constant(1, ClassPoly(7)));
    CHECK(tp("3/4", 0) == TPoly::constant(0, ClassPoly(Rational(3, 4))));
    CHECK(tp("x2", 3) == TPoly::variable(3, 1));
    CHECK(tp("s[0](E)", 1) == TPoly::constant(1, ClassPoly::one()));
    CHECK(tp("c[0](F)", 1) == TPoly::constant(1, ClassPoly::one()));
    CHECK(tp("c1(L)", 2) == TPoly::constant(2, ClassPoly(twist_class())));
    CHECK(tp("c[1](L)", 2) == tp("c1(L)", 2));
    CHECK(tp("c[2](L)", 2) == TPoly(2));
    CHECK(tp("c[1](E)", 1) == tp("-s[1](E)", 1));
    CHECK(tp("c[2](E)", 1) == tp("s[1](E)^2 - s[2](E)", 1));
    CHECK(tp("c[3](E)", 1) ==
          tp("-s[1](E)^3 + 2*s[1](E)*s[2](E) - s[3](E)", 1));
}

TEST_CASE("precedence and associativity") {
    ExprPtr left = parse_expression("x1 - x2 - x3", 3);
    CHECK(left->kind == Expr::Kind::sub);
    CHECK(left->lhs->kind == Expr::Kind::sub);
    CHECK(left->rhs->kind == Expr::Kind::variable);

    ExprPtr neg_pow = parse_expression("-x1^2", 1);
    CHECK(neg_pow->kind == Expr::Kind::neg);
    CHECK(neg_pow->lhs->kind == Expr::Kind::pow);
    CHECK(neg_pow->lhs->exponent == 2);

    ExprPtr tower = parse_expression("x1^2^3", 1);
    CHECK(tower->kind == Expr::Kind::pow);
    CHECK(tower->exponent == 8);

    CHECK(tp("2*-3", 0) == TPoly::constant(0, ClassPoly(-6)));
    CHECK(tp("x1^0", 1) == TPoly::constant(1, ClassPoly::one()));
    CHECK(tp("2 + 3*4", 0) == TPoly::constant(0, ClassPoly(14)));
    CHECK(tp("(2 + 3)*4", 0) == TPoly::constant(0, ClassPoly(20)));
    CHECK(tp("(x1+x2)^4", 2) ==
          tp("(x1+x2)*(x1+x2)*(x1+x2)*(x1+x2)", 2));
}

TEST_CASE("parse errors") {
    CHECK(error_message([] { parse_expression("(x1+x2", 2); }) ==
          "unbalanced parenthesis at column 7");
    expect_error(ErrorCode::parse, [] { parse_expression("(x1+x2", 2); });

    CHECK(error_message([] { parse_expression("x3", 2); }) ==
          "variable x3 out of range at column 1 (d = 2)");
    expect_error(ErrorCode::parse, [] { parse_expression("x0", 2); });
    expect_error(ErrorCode::parse, [] { parse_expression("1/0", 2); });
    expect_error(ErrorCode::parse, [] { parse_expression("foo", 2); });
    expect_error(ErrorCode::parse, [] { parse_expression("x1/2", 2); });
    expect_error(ErrorCode::parse, [] { parse_expression("x1 +", 2); });
    expect_error(ErrorCode::parse, [] { parse_expression("x1^x2", 2); });
    expect_error(ErrorCode::parse, [] { parse_expression("x1^2^999", 2); });
    expect_error(ErrorCode::parse, [] { parse_expression("s[2]", 2); });
    expect_error(ErrorCode::parse, [] { parse_expression("s[-1](E)", 2); });
    expect_error(ErrorCode::parse, [] { parse_expression("schur[1](E)", 2); });
    expect_error(ErrorCode::parse, [] { parse_expression("schur[1,2](x)", 2); });
    expect_error(ErrorCode::parse, [] { parse_expression("x1 $ x2", 2); });
    expect_error(ErrorCode::parse, [] { parse_expression("", 2); });
}

TEST_CASE("print/parse roundtrip on a fixed corpus") {
    const std::vector<std::string> corpus = {
        "x1",
        "3/4",
        "s[2](E)",
        "c[3](F)",
        "c1(L)",
        "schur[2,1](x)",
        "x1 + x2",
        "x1 - x2 - x3",
        "x1*x2*x3",
        "-x1^2",
        "(x1 + x2)^4",
        "2*-3",
        "x1 - -x2",
        "-(x1*x2)",
        "(-x1)^3",
        "s[1](E)*x1^2 + 7/2*x2",
        "schur[3,1](x) - c[2](Q)*x3",
        "((x1))",
        "x1^2^3",
        "1/2*x1 + 1/3*x2 - 1/6*x3",
    };
    for (const auto& text : corpus) {
        CAPTURE(text);
        ExprPtr first = parse_expression(text, 3);
        std::string printed = print_expression(first);
        ExprPtr second = parse_expression(printed, 3);
        CHECK(expr_equal(first, second));
        CHECK(print_expression(second) == printed);
    }
}

TEST_CASE("print/parse roundtrip on random trees") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        ExprPtr e = random_expr(rng, 4, 3);
        std::string printed = print_expression(e);
        CAPTURE(printed);
        ExprPtr back = parse_expression(printed, 3);
        CHECK(expr_equal(e, back));
        CHECK(lower_expr(e, 3) == lower_expr(back, 3));
    }
}

TEST_CASE("lowering") {
    CHECK(tp("x1 + x1", 2) == TPoly::monomial({1, 0}, ClassPoly(2)));
    CHECK(tp("schur[1](x)", 2) == tp("x1 + x2", 2));
    CHECK(tp("schur[1,1](x)", 2) == tp("x1*x2", 2));
    CHECK(tp("schur[2](x)", 2) == tp("x1^2 + x1*x2 + x2^2", 2));
    CHECK(tp("schur[2,1](x)", 2) == tp("x1*x2*(x1 + x2)", 2));
    CHECK(tp("s[2](E)*x1", 1) ==
          TPoly::monomial({1}, ClassPoly(segre_symbol("E", 2))));
    CHECK(tp("x1^2 - x1^2", 1) == TPoly(1));
    // lowering a programmatic tree agrees with lowering its printed form
    ExprPtr prog = node(Expr::Kind::mul, num(2),
                        node(Expr::Kind::pow, num(3)));
    // pow exponent lives outside lhs/rhs; fix it up
    Expr fixed = *prog->rhs;
    fixed.exponent = 2;
    prog = node(Expr::Kind::mul, num(2),
                std::make_shared<const Expr>(std::move(fixed)));
    CHECK(lower_expr(prog, 0) == TPoly::constant(0, ClassPoly(18)));
    CHECK(lower_expr(parse_expression(print_expression(prog), 0), 0) ==
          lower_expr(prog, 0));
}

TEST_CASE("lowering arity errors") {
    expect_error(ErrorCode::input, [] { parse_expression("x1", -1); });
}
