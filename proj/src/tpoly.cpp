#include "gysin/tpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gysin {

TPoly::TPoly(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) fail(ErrorCode::internal, "negative variable count");
}

TPoly TPoly::constant(int num_vars, ClassPoly c) {
    TPoly out(num_vars);
    out.add_term(std::vector<int>(static_cast<size_t>(num_vars), 0), c);
    return out;
}

TPoly TPoly::variable(int num_vars, int var) {
    if (var < 0 || var >= num_vars) {
        fail(ErrorCode::arity, "variable index " + std::to_string(var + 1) +
                                   " out of range for " + std::to_string(num_vars) +
                                   " variables");
    }
    std::vector<int> exp(static_cast<size_t>(num_vars), 0);
    exp[static_cast<size_t>(var)] = 1;
    return monomial(std::move(exp), ClassPoly::one());
}

TPoly TPoly::monomial(std::vector<int> exponents, ClassPoly c) {
    TPoly out(static_cast<int>(exponents.size()));
    out.add_term(exponents, c);
    return out;
}

void TPoly::add_term(const std::vector<int>& exponents, const ClassPoly& c) {
    if (static_cast<int>(exponents.size()) != num_vars_) {
        fail(ErrorCode::arity, "exponent vector of length " +
                                   std::to_string(exponents.size()) + " in a " +
                                   std::to_string(num_vars_) + "-variable polynomial");
    }
    for (int a : exponents) {
        if (a < 0) fail(ErrorCode::internal, "negative t-exponent");
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TPoly::check_arity(const TPoly& other) const {
    if (num_vars_ != other.num_vars_) {
        fail(ErrorCode::arity, "mixed variable counts: " + std::to_string(num_vars_) +
                                   " vs " + std::to_string(other.num_vars_));
    }
}

TPoly& TPoly::operator+=(const TPoly& other) {
    check_arity(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& other) {
    check_arity(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

TPoly TPoly::operator+(const TPoly& other) const {
    TPoly out = *this;
    out += other;
    return out;
}

TPoly TPoly::operator-(const TPoly& other) const {
    TPoly out = *this;
    out -= other;
    return out;
}

TPoly TPoly::operator-() const {
    TPoly out(num_vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

TPoly TPoly::operator*(const TPoly& other) const {
    return mul(*this, other);
}

TPoly TPoly::scale(const ClassPoly& c) const {
    TPoly out(num_vars_);
    if (c.is_zero()) return out;
    for (const auto& [e, coeff] : terms_) out.add_term(e, coeff * c);
    return out;
}

TPoly TPoly::pow(int k) const {
    if (k < 0) fail(ErrorCode::input, "negative power of a t-polynomial");
    TPoly out = constant(num_vars_, ClassPoly::one());
    for (int i = 0; i < k; ++i) out = mul(out, *this);
    return out;
}

int TPoly::t_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_) {
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    }
    return deg;
}

std::optional<int> TPoly::homogeneous_total_degree() const {
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
        auto g = c.homogeneous_grade();
        if (!g) return std::nullopt;
        int total = *g + std::accumulate(e.begin(), e.end(), 0);
        if (!deg) {
            deg = total;
        } else if (*deg != total) {
            return std::nullopt;
        }
    }
    return deg;
}

std::string TPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        std::string coeff = c.str();
        bool needs_parens = c.terms().size() > 1;
        std::string vars;
        for (int i = 0; i < num_vars_; ++i) {
            int a = e[static_cast<size_t>(i)];
            if (a == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "t" + std::to_string(i + 1);
            if (a > 1) vars += "^" + std::to_string(a);
        }
        if (vars.empty()) {
            out << (needs_parens ? "(" + coeff + ")" : coeff);
        } else if (coeff == "1") {
            out << vars;
        } else {
            out << (needs_parens ? "(" + coeff + ")" : coeff) << "*" << vars;
        }
    }
    return out.str();
}

TPoly mul(const TPoly& a, const TPoly& b, long long term_ceiling) {
    if (a.num_vars() != b.num_vars()) {
        fail(ErrorCode::arity, "mixed variable counts: " + std::to_string(a.num_vars()) +
                                   " vs " + std::to_string(b.num_vars()));
    }
    if (a.term_count() * b.term_count() > term_ceiling) {
        fail(ErrorCode::limit,
             "product expansion of " + std::to_string(a.term_count()) + " x " +
                 std::to_string(b.term_count()) + " terms exceeds the ceiling of " +
                 std::to_string(term_ceiling));
    }
    TPoly out(a.num_vars());
    std::vector<int> e(static_cast<size_t>(a.num_vars()), 0);
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

ClassPoly extract_with_segre(const TPoly& p, const std::vector<int>& e,
                             const std::vector<std::string>& assign) {
    const size_t d = static_cast<size_t>(p.num_vars());
    if (e.size() != d || assign.size() != d) {
        fail(ErrorCode::arity, "extraction needs " + std::to_string(d) +
                                   " exponents and bundle names, got " +
                                   std::to_string(e.size()) + " and " +
                                   std::to_string(assign.size()));
    }
    ClassPoly out;
    for (const auto& [a, coeff] : p.terms()) {
        std::vector<std::pair<ClassSymbol, int>> factors;
        bool dead = false;
        for (size_t i = 0; i < d; ++i) {
            int k = a[i] - e[i];
            if (k < 0) {
                dead = true;
                break;
            }
            if (k > 0) factors.emplace_back(segre_symbol(assign[i], k), 1);
        }
        if (dead) continue;
        ClassMonomial m(std::move(factors));
        for (const auto& [cm, cc] : coeff.terms()) {
            out.add_term(cm * m, cc);
        }
    }
    return out;
}

namespace {

// Row-major semistandard filling: rows weakly increase, columns strictly
// increase, entries in 1..d.
void fill_tableau(const std::vector<int>& rows, int d, int r, int c,
                  std::vector<std::vector<int>>& tab, std::vector<int>& content,
                  TPoly& out) {
    if (r == static_cast<int>(rows.size())) {
        out.add_term(content, ClassPoly::one());
        return;
    }
    int next_r = r, next_c = c + 1;
    if (next_c == rows[static_cast<size_t>(r)]) {
        next_r = r + 1;
        next_c = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
    if (r > 0 && c < rows[static_cast<size_t>(r - 1)]) {
        lo = std::max(lo, tab[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
    }
    for (int v = lo; v <= d; ++v) {
        tab[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
        content[static_cast<size_t>(v - 1)]++;
        fill_tableau(rows, d, next_r, next_c, tab, content, out);
        content[static_cast<size_t>(v - 1)]--;
    }
}

}  // namespace

TPoly schur_in_t(const Partition& lambda, int d) {
    if (d < 0) fail(ErrorCode::input, "schur polynomial needs d >= 0");
    if (lambda.num_parts() > d) {
        fail(ErrorCode::input, "schur shape " + lambda.str() + " has more parts than the " +
                                   std::to_string(d) + " available variables");
    }
    TPoly out(d);
    if (lambda.empty()) {
        return TPoly::constant(d, ClassPoly::one());
    }
    std::vector<std::vector<int>> tab;
    for (int r = 0; r < lambda.num_parts(); ++r) {
        tab.emplace_back(static_cast<size_t>(lambda.part(r)), 0);
    }
    std::vector<int> content(static_cast<size_t>(d), 0);
    fill_tableau(lambda.parts(), d, 0, 0, tab, content, out);
    return out;
}

}  // namespace gysin
