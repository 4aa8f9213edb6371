#include "gysin/expr.hpp"

#include "gysin/error.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace gysin {

namespace {

constexpr int kMaxExponent = 1000;

enum class Tok { integer, ident, lparen, rparen, lbrack, rbrack, comma, plus, minus, star, caret, slash, end };

struct Token {
    Tok kind;
    std::string text;
    Int value;  // integer tokens
    int column; // 1-based
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            std::string digits = text.substr(i, j - i);
            out.push_back({Tok::integer, digits, Int(digits), col});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            out.push_back({Tok::ident, text.substr(i, j - i), 0, col});
            i = j;
            continue;
        }
        Tok kind;
        switch (ch) {
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            case '[': kind = Tok::lbrack; break;
            case ']': kind = Tok::rbrack; break;
            case ',': kind = Tok::comma; break;
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '^': kind = Tok::caret; break;
            case '/': kind = Tok::slash; break;
            default:
                fail(ErrorCode::parse, std::string("unexpected character '") + ch +
                                           "' at column " + std::to_string(col));
        }
        out.push_back({kind, std::string(1, ch), 0, col});
        ++i;
    }
    out.push_back({Tok::end, "", 0, static_cast<int>(text.size()) + 1});
    return out;
}

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr make_binary(Expr::Kind kind, ExprPtr l, ExprPtr r) {
    Expr e;
    e.kind = kind;
    e.lhs = std::move(l);
    e.rhs = std::move(r);
    return make(std::move(e));
}

class Parser {
public:
    Parser(const std::string& text, int num_vars)
        : tokens_(lex(text)), num_vars_(num_vars) {}

    ExprPtr run() {
        ExprPtr e = parse_sum();
        if (peek().kind != Tok::end) {
            fail(ErrorCode::parse, "unexpected token '" + peek().text + "' at column " +
                                       std::to_string(peek().column));
        }
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    bool match(Tok kind) {
        if (peek().kind == kind) {
            ++pos_;
            return true;
        }
        return false;
    }

    const Token& expect(Tok kind, const char* what) {
        if (peek().kind != kind) {
            if (kind == Tok::rparen && peek().kind == Tok::end && open_parens_ > 0) {
                fail(ErrorCode::parse, "unbalanced parenthesis at column " +
                                           std::to_string(peek().column));
            }
            fail(ErrorCode::parse, std::string("expected ") + what + " at column " +
                                       std::to_string(peek().column) + ", got '" +
                                       (peek().kind == Tok::end ? "end of input" : peek().text) +
                                       "'");
        }
        return advance();
    }

    int expect_small_int(const char* what, int max) {
        const Token& t = expect(Tok::integer, what);
        if (t.value > max) {
            fail(ErrorCode::parse, std::string(what) + " " + t.text + " too large at column " +
                                       std::to_string(t.column));
        }
        return static_cast<int>(t.value);
    }

    ExprPtr parse_sum() {
        ExprPtr e = parse_product();
        while (true) {
            if (match(Tok::plus)) {
                e = make_binary(Expr::Kind::add, e, parse_product());
            } else if (match(Tok::minus)) {
                e = make_binary(Expr::Kind::sub, e, parse_product());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_product() {
        ExprPtr e = parse_unary();
        while (match(Tok::star)) {
            e = make_binary(Expr::Kind::mul, e, parse_unary());
        }
        return e;
    }

    ExprPtr parse_unary() {
        if (match(Tok::minus)) {
            Expr e;
            e.kind = Expr::Kind::neg;
            e.lhs = parse_unary();
            return make(std::move(e));
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (!match(Tok::caret)) return base;
        // Exponents are integer literals; a chain folds right to left, so
        // a^2^3 means a^(2^3).
        std::vector<int> chain;
        chain.push_back(expect_small_int("exponent", kMaxExponent));
        while (match(Tok::caret)) {
            chain.push_back(expect_small_int("exponent", kMaxExponent));
        }
        long long exp = chain.back();
        for (size_t i = chain.size() - 1; i-- > 0;) {
            long long folded = 1;
            for (long long k = 0; k < exp; ++k) {
                folded *= chain[i];
                if (folded > kMaxExponent) {
                    fail(ErrorCode::parse, "exponent tower exceeds " +
                                               std::to_string(kMaxExponent));
                }
            }
            exp = folded;
        }
        Expr e;
        e.kind = Expr::Kind::pow;
        e.lhs = std::move(base);
        e.exponent = static_cast<int>(exp);
        return make(std::move(e));
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::integer: {
                advance();
                Rational value(t.value);
                if (match(Tok::slash)) {
                    const Token& den = expect(Tok::integer, "denominator");
                    if (den.value == 0) {
                        fail(ErrorCode::parse, "zero denominator at column " +
                                                   std::to_string(den.column));
                    }
                    value /= Rational(den.value);
                }
                Expr e;
                e.kind = Expr::Kind::number;
                e.number = value;
                return make(std::move(e));
            }
            case Tok::lparen: {
                advance();
                ++open_parens_;
                ExprPtr inner = parse_sum();
                expect(Tok::rparen, "')'");
                --open_parens_;
                return inner;
            }
            case Tok::ident:
                return parse_ident();
            default:
                fail(ErrorCode::parse, "expected a value at column " +
                                           std::to_string(t.column) + ", got '" +
                                           (t.kind == Tok::end ? "end of input" : t.text) + "'");
        }
    }

    ExprPtr parse_ident() {
        const Token& t = advance();
        const std::string& name = t.text;
        if (name.size() > 1 && name[0] == 'x' &&
            name.find_first_not_of("0123456789", 1) == std::string::npos) {
            int idx = 0;
            for (size_t i = 1; i < name.size(); ++i) {
                idx = idx * 10 + (name[i] - '0');
                if (idx > 1000) break;
            }
            if (idx < 1 || idx > num_vars_) {
                fail(ErrorCode::parse, "variable " + name + " out of range at column " +
                                           std::to_string(t.column) + " (d = " +
                                           std::to_string(num_vars_) + ")");
            }
            Expr e;
            e.kind = Expr::Kind::variable;
            e.var = idx - 1;
            return make(std::move(e));
        }
        if (name == "s" || name == "c") {
            expect(Tok::lbrack, "'['");
            int index = expect_small_int("class index", 10000);
            expect(Tok::rbrack, "']'");
            expect(Tok::lparen, "'('");
            const Token& bundle = expect(Tok::ident, "bundle name");
            expect(Tok::rparen, "')'");
            Expr e;
            e.kind = name == "s" ? Expr::Kind::segre : Expr::Kind::chern;
            e.bundle = bundle.text;
            e.index = index;
            return make(std::move(e));
        }
        if (name == "c1") {
            expect(Tok::lparen, "'('");
            const Token& bundle = expect(Tok::ident, "bundle name");
            expect(Tok::rparen, "')'");
            Expr e;
            e.kind = Expr::Kind::chern;
            e.bundle = bundle.text;
            e.index = 1;
            return make(std::move(e));
        }
        if (name == "schur") {
            expect(Tok::lbrack, "'['");
            std::vector<int> parts;
            parts.push_back(expect_small_int("partition part", 10000));
            while (match(Tok::comma)) {
                parts.push_back(expect_small_int("partition part", 10000));
            }
            expect(Tok::rbrack, "']'");
            expect(Tok::lparen, "'('");
            const Token& arg = expect(Tok::ident, "'x'");
            if (arg.text != "x") {
                fail(ErrorCode::parse, "schur takes the variable alphabet x, got '" +
                                           arg.text + "' at column " +
                                           std::to_string(arg.column));
            }
            expect(Tok::rparen, "')'");
            Expr e;
            e.kind = Expr::Kind::schur;
            try {
                e.lambda = Partition(std::move(parts));
            } catch (const Error& err) {
                fail(ErrorCode::parse, std::string(err.what()) + " at column " +
                                           std::to_string(t.column));
            }
            return make(std::move(e));
        }
        fail(ErrorCode::parse, "unknown name '" + name + "' at column " +
                                   std::to_string(t.column));
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
    int num_vars_ = 0;
    int open_parens_ = 0;
};

// atom 5, pow 4, neg 3, mul 2, add/sub 1
int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::add:
        case Expr::Kind::sub: return 1;
        case Expr::Kind::mul: return 2;
        case Expr::Kind::neg: return 3;
        case Expr::Kind::pow: return 4;
        case Expr::Kind::number:
            return e.number < 0 ? 3 : 5;
        default: return 5;
    }
}

void print_into(const ExprPtr& e, int parent_prec, std::ostringstream& out) {
    bool parens = precedence(*e) < parent_prec;
    if (parens) out << "(";
    switch (e->kind) {
        case Expr::Kind::number:
            out << to_string(e->number);
            break;
        case Expr::Kind::variable:
            out << "x" << e->var + 1;
            break;
        case Expr::Kind::segre:
            out << "s[" << e->index << "](" << e->bundle << ")";
            break;
        case Expr::Kind::chern:
            out << "c[" << e->index << "](" << e->bundle << ")";
            break;
        case Expr::Kind::schur: {
            out << "schur[";
            const auto& parts = e->lambda.parts();
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i) out << ",";
                out << parts[i];
            }
            out << "](x)";
            break;
        }
        case Expr::Kind::add:
            print_into(e->lhs, 1, out);
            out << " + ";
            print_into(e->rhs, 2, out);
            break;
        case Expr::Kind::sub:
            print_into(e->lhs, 1, out);
            out << " - ";
            print_into(e->rhs, 2, out);
            break;
        case Expr::Kind::mul:
            print_into(e->lhs, 2, out);
            out << "*";
            print_into(e->rhs, 3, out);
            break;
        case Expr::Kind::neg:
            out << "-";
            print_into(e->lhs, 4, out);
            break;
        case Expr::Kind::pow:
            print_into(e->lhs, 5, out);
            out << "^" << e->exponent;
            break;
    }
    if (parens) out << ")";
}

}  // namespace

ExprPtr parse_expression(const std::string& text, int num_vars) {
    if (num_vars < 0) fail(ErrorCode::input, "negative variable count");
    return Parser(text, num_vars).run();
}

std::string print_expression(const ExprPtr& e) {
    if (!e) fail(ErrorCode::internal, "null expression");
    std::ostringstream out;
    print_into(e, 0, out);
    return out.str();
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Expr::Kind::number: return a->number == b->number;
        case Expr::Kind::variable: return a->var == b->var;
        case Expr::Kind::segre:
        case Expr::Kind::chern:
            return a->bundle == b->bundle && a->index == b->index;
        case Expr::Kind::schur: return a->lambda == b->lambda;
        case Expr::Kind::add:
        case Expr::Kind::sub:
        case Expr::Kind::mul:
            return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
        case Expr::Kind::neg: return expr_equal(a->lhs, b->lhs);
        case Expr::Kind::pow:
            return a->exponent == b->exponent && expr_equal(a->lhs, b->lhs);
    }
    return false;
}

TPoly lower_expr(const ExprPtr& e, int num_vars) {
    if (!e) fail(ErrorCode::internal, "null expression");
    const int d = num_vars;
    switch (e->kind) {
        case Expr::Kind::number:
            return TPoly::constant(d, ClassPoly(e->number));
        case Expr::Kind::variable:
            if (e->var < 0 || e->var >= d) {
                fail(ErrorCode::arity, "variable x" + std::to_string(e->var + 1) +
                                           " out of range (d = " + std::to_string(d) + ")");
            }
            return TPoly::variable(d, e->var);
        case Expr::Kind::segre:
            if (e->index == 0) return TPoly::constant(d, ClassPoly::one());
            return TPoly::constant(d, ClassPoly(segre_symbol(e->bundle, e->index)));
        case Expr::Kind::chern:
            if (e->bundle == "L") {
                // L is the twist line: c0 = 1, c1 is the symbol, the rest vanish.
                if (e->index == 0) return TPoly::constant(d, ClassPoly::one());
                if (e->index == 1) return TPoly::constant(d, ClassPoly(twist_class()));
                return TPoly(d);
            }
            return TPoly::constant(d, chern_from_segre(e->bundle, e->index));
        case Expr::Kind::schur:
            return schur_in_t(e->lambda, d);
        case Expr::Kind::add:
            return lower_expr(e->lhs, d) + lower_expr(e->rhs, d);
        case Expr::Kind::sub:
            return lower_expr(e->lhs, d) - lower_expr(e->rhs, d);
        case Expr::Kind::mul:
            return lower_expr(e->lhs, d) * lower_expr(e->rhs, d);
        case Expr::Kind::neg:
            return -lower_expr(e->lhs, d);
        case Expr::Kind::pow:
            return lower_expr(e->lhs, d).pow(e->exponent);
    }
    fail(ErrorCode::internal, "unknown expression node");
}

}  // namespace gysin
