#include "gysin/class_poly.hpp"

#include <algorithm>
#include <sstream>

namespace gysin {

std::string ClassSymbol::str() const {
    std::ostringstream out;
    if (kind == SymbolKind::segre) {
        out << "s[" << index << "](" << bundle << ")";
    } else if (bundle == "L" && index == 1) {
        out << "c1(L)";
    } else {
        out << "c[" << index << "](" << bundle << ")";
    }
    return out.str();
}

ClassSymbol segre_symbol(std::string bundle, int index) {
    if (index < 1) fail(ErrorCode::internal, "segre symbol needs index >= 1");
    return ClassSymbol{std::move(bundle), SymbolKind::segre, index};
}

ClassSymbol twist_class() {
    return ClassSymbol{"L", SymbolKind::chern, 1};
}

ClassMonomial::ClassMonomial(std::vector<std::pair<ClassSymbol, int>> factors) {
    std::sort(factors.begin(), factors.end());
    for (auto& [sym, exp] : factors) {
        if (exp < 0) fail(ErrorCode::internal, "negative symbol exponent");
        if (exp == 0) continue;
        if (sym.index < 1) fail(ErrorCode::internal, "symbol index must be >= 1");
        if (!factors_.empty() && factors_.back().first == sym) {
            factors_.back().second += exp;
        } else {
            factors_.emplace_back(sym, exp);
        }
    }
}

int ClassMonomial::grade() const {
    int g = 0;
    for (const auto& [sym, exp] : factors_) g += sym.grade() * exp;
    return g;
}

ClassMonomial ClassMonomial::operator*(const ClassMonomial& other) const {
    std::vector<std::pair<ClassSymbol, int>> merged = factors_;
    merged.insert(merged.end(), other.factors_.begin(), other.factors_.end());
    return ClassMonomial(std::move(merged));
}

bool ClassMonomial::operator<(const ClassMonomial& other) const {
    int ga = grade(), gb = other.grade();
    if (ga != gb) return ga < gb;
    return factors_ < other.factors_;
}

std::string ClassMonomial::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [sym, exp] : factors_) {
        if (!first) out << "*";
        first = false;
        out << sym.str();
        if (exp > 1) out << "^" << exp;
    }
    return out.str();
}

ClassPoly::ClassPoly(Rational c) {
    add_term(ClassMonomial{}, c);
}

ClassPoly::ClassPoly(const ClassSymbol& s) {
    add_term(ClassMonomial({{s, 1}}), 1);
}

ClassPoly::ClassPoly(const ClassMonomial& m, Rational c) {
    add_term(m, c);
}

void ClassPoly::add_term(const ClassMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ClassPoly& ClassPoly::operator+=(const ClassPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

ClassPoly& ClassPoly::operator-=(const ClassPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

ClassPoly ClassPoly::operator+(const ClassPoly& other) const {
    ClassPoly out = *this;
    out += other;
    return out;
}

ClassPoly ClassPoly::operator-(const ClassPoly& other) const {
    ClassPoly out = *this;
    out -= other;
    return out;
}

ClassPoly ClassPoly::operator-() const {
    ClassPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

ClassPoly ClassPoly::operator*(const ClassPoly& other) const {
    ClassPoly out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

ClassPoly ClassPoly::operator*(const Rational& c) const {
    ClassPoly out;
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

ClassPoly ClassPoly::pow(int k) const {
    if (k < 0) fail(ErrorCode::input, "negative power of a class polynomial");
    ClassPoly out = one();
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

std::optional<int> ClassPoly::homogeneous_grade() const {
    if (terms_.empty()) return std::nullopt;
    int g = terms_.begin()->first.grade();
    for (const auto& [m, c] : terms_) {
        if (m.grade() != g) return std::nullopt;
    }
    return g;
}

int ClassPoly::max_grade() const {
    int g = 0;
    for (const auto& [m, c] : terms_) g = std::max(g, m.grade());
    return g;
}

ClassPoly ClassPoly::grade_component(int k) const {
    ClassPoly out;
    for (const auto& [m, c] : terms_) {
        if (m.grade() == k) out.terms_.emplace(m, c);
    }
    return out;
}

ClassPoly ClassPoly::truncate_above(int cutoff) const {
    ClassPoly out;
    for (const auto& [m, c] : terms_) {
        if (m.grade() <= cutoff) out.terms_.emplace(m, c);
    }
    return out;
}

std::optional<Rational> ClassPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first.empty()) {
        return terms_.begin()->second;
    }
    return std::nullopt;
}

namespace {

// Renders |c| * monomial, eliding unit coefficients; sign handled by caller.
std::string term_body(const ClassMonomial& m, const Rational& abs_coeff) {
    if (m.empty()) return to_string(abs_coeff);
    if (abs_coeff == 1) return m.str();
    return to_string(abs_coeff) + " * " + m.str();
}

}  // namespace

std::string ClassPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        out << term_body(m, neg ? Rational(-c) : c);
        first = false;
    }
    return out.str();
}

std::vector<std::string> term_lines(const ClassPoly& p) {
    std::vector<std::string> lines;
    if (p.is_zero()) {
        lines.push_back("0");
        return lines;
    }
    for (const auto& [m, c] : p.terms()) {
        std::string body = term_body(m, c < 0 ? Rational(-c) : c);
        lines.push_back(c < 0 ? "-" + body : body);
    }
    return lines;
}

ClassPoly chern_from_segre(const std::string& bundle, int i) {
    if (i < 0) fail(ErrorCode::input, "chern_from_segre: negative index");
    std::vector<ClassPoly> c(static_cast<size_t>(i) + 1);
    c[0] = ClassPoly::one();
    for (int k = 1; k <= i; ++k) {
        ClassPoly acc;
        for (int m = 1; m <= k; ++m) {
            acc += ClassPoly(segre_symbol(bundle, m)) * c[k - m];
        }
        c[k] = -acc;
    }
    return c[i];
}

ClassPoly substitute(
    const ClassPoly& p,
    const std::function<std::optional<ClassPoly>(const ClassSymbol&)>& rule) {
    ClassPoly out;
    for (const auto& [m, c] : p.terms()) {
        ClassPoly acc{c};
        std::vector<std::pair<ClassSymbol, int>> kept;
        for (const auto& [sym, exp] : m.factors()) {
            if (auto image = rule(sym)) {
                acc = acc * image->pow(exp);
            } else {
                kept.emplace_back(sym, exp);
            }
        }
        if (!kept.empty()) {
            acc = acc * ClassPoly(ClassMonomial(std::move(kept)));
        }
        out += acc;
    }
    return out;
}

ClassPoly substitute_flag_relations(const ClassPoly& p,
                                    const std::vector<std::string>& chain,
                                    const std::vector<ClassPoly>& y) {
    if (chain.empty()) fail(ErrorCode::input, "flag chain is empty");
    if (y.size() + 1 != chain.size()) {
        fail(ErrorCode::input, "flag chain of length " + std::to_string(chain.size()) +
                                   " needs " + std::to_string(chain.size() - 1) +
                                   " line classes, got " + std::to_string(y.size()));
    }
    for (const auto& cls : y) {
        if (!cls.is_zero() && cls.homogeneous_grade() != 1) {
            fail(ErrorCode::input, "flag line classes must have grade 1");
        }
    }
    const size_t n = chain.size();
    std::map<std::string, size_t> position;
    for (size_t i = 0; i < n; ++i) position[chain[i]] = i;

    // suffix[i] = prod_{j>i} (1 + y_j); its grade-m part is the elementary
    // symmetric e_m in the line classes above chain[i].
    std::vector<ClassPoly> suffix(n);
    suffix[n - 1] = ClassPoly::one();
    for (size_t i = n - 1; i > 0; --i) {
        suffix[i - 1] = suffix[i] * (ClassPoly::one() + y[i - 1]);
    }

    auto rule = [&](const ClassSymbol& sym) -> std::optional<ClassPoly> {
        if (sym.kind != SymbolKind::segre) return std::nullopt;
        auto it = position.find(sym.bundle);
        if (it == position.end()) {
            fail(ErrorCode::input,
                 "segre class of bundle " + sym.bundle + " is not in the flag chain");
        }
        size_t i = it->second;
        if (i == n - 1) return std::nullopt;
        ClassPoly image;
        for (int m = 0; m <= sym.index; ++m) {
            ClassPoly em = suffix[i].grade_component(m);
            if (em.is_zero()) continue;
            int k = sym.index - m;
            ClassPoly sk = k == 0 ? ClassPoly::one()
                                  : ClassPoly(segre_symbol(chain[n - 1], k));
            image += sk * em;
        }
        return image;
    };
    return substitute(p, rule);
}

ClassPoly kill_positive_segre(const ClassPoly& p) {
    ClassPoly out;
    for (const auto& [m, c] : p.terms()) {
        bool has_segre = false;
        for (const auto& [sym, exp] : m.factors()) {
            if (sym.kind == SymbolKind::segre) {
                has_segre = true;
                break;
            }
        }
        if (!has_segre) out.add_term(m, c);
    }
    return out;
}

ClassPoly rename_bundle(const ClassPoly& p, const std::string& from,
                        const std::string& to) {
    return substitute(p, [&](const ClassSymbol& sym) -> std::optional<ClassPoly> {
        if (sym.bundle != from) return std::nullopt;
        ClassSymbol renamed = sym;
        renamed.bundle = to;
        return ClassPoly(renamed);
    });
}

}  // namespace gysin
