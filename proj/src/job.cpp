#include "gysin/job.hpp"

#include "gysin/error.hpp"
#include "gysin/expr.hpp"
#include "gysin/oracle.hpp"
#include "gysin/pushforward.hpp"

#include <json.hpp>

#include <sstream>

namespace gysin {

namespace {

using nlohmann::json;

int read_int(const json& j, const std::string& key) {
    if (!j.is_number_integer()) {
        fail(ErrorCode::input, "field '" + key + "' must be an integer");
    }
    return j.get<int>();
}

std::string read_string(const json& j, const std::string& key) {
    if (!j.is_string()) {
        fail(ErrorCode::input, "field '" + key + "' must be a string");
    }
    return j.get<std::string>();
}

std::vector<int> read_int_array(const json& j, const std::string& key) {
    if (!j.is_array()) {
        fail(ErrorCode::input, "field '" + key + "' must be an array of integers");
    }
    std::vector<int> out;
    for (const auto& el : j) {
        if (!el.is_number_integer()) {
            fail(ErrorCode::input, "field '" + key + "' must be an array of integers");
        }
        out.push_back(el.get<int>());
    }
    return out;
}

GeometryDraft parse_geometry_object(const json& j) {
    if (!j.is_object()) fail(ErrorCode::input, "field 'geometry' must be an object");
    GeometryDraft g;
    for (const auto& [key, value] : j.items()) {
        if (key == "family") {
            g.family = read_string(value, "geometry.family");
        } else if (key == "n") {
            g.n = read_int(value, "geometry.n");
        } else if (key == "rank") {
            g.rank = read_int(value, "geometry.rank");
        } else if (key == "dims") {
            g.dims = read_int_array(value, "geometry.dims");
        } else if (key == "mu") {
            g.mu = read_int_array(value, "geometry.mu");
        } else if (key == "twist") {
            g.twist = read_string(value, "geometry.twist");
        } else if (key == "base") {
            g.base = read_string(value, "geometry.base");
        } else {
            fail(ErrorCode::input, "unknown geometry field '" + key + "'");
        }
    }
    return g;
}

}  // namespace

JobDraft parse_job_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::input, std::string("invalid job document: ") + e.what());
    }
    if (!j.is_object()) fail(ErrorCode::input, "job document must be an object");
    JobDraft d;
    for (const auto& [key, value] : j.items()) {
        if (key == "geometry") {
            d.geometry = parse_geometry_object(value);
        } else if (key == "f") {
            d.f = read_string(value, "f");
        } else if (key == "halve") {
            if (!value.is_boolean()) fail(ErrorCode::input, "field 'halve' must be a boolean");
            d.halve = value.get<bool>();
        } else if (key == "cutoff") {
            if (value.is_null()) continue;  // explicit null means no cutoff
            d.cutoff = read_int(value, "cutoff");
        } else if (key == "format") {
            d.format = read_string(value, "format");
        } else {
            fail(ErrorCode::input, "unknown field '" + key + "'");
        }
    }
    return d;
}

JobDraft merge_drafts(const JobDraft& low, const JobDraft& high) {
    JobDraft out = low;
    const GeometryDraft& hg = high.geometry;
    if (hg.family) out.geometry.family = hg.family;
    if (hg.n) out.geometry.n = hg.n;
    if (hg.rank) out.geometry.rank = hg.rank;
    if (hg.dims) out.geometry.dims = hg.dims;
    if (hg.mu) out.geometry.mu = hg.mu;
    if (hg.twist) out.geometry.twist = hg.twist;
    if (hg.base) out.geometry.base = hg.base;
    if (high.f) out.f = high.f;
    if (high.halve) out.halve = high.halve;
    if (high.cutoff) out.cutoff = high.cutoff;
    if (high.format) out.format = high.format;
    return out;
}

namespace {

Twist parse_twist(const std::optional<std::string>& s) {
    if (!s) return Twist::formal;
    if (*s == "formal") return Twist::formal;
    if (*s == "zero") return Twist::zero;
    fail(ErrorCode::input, "twist must be \"formal\" or \"zero\", got \"" + *s + "\"");
}

BaseMode parse_base(const std::optional<std::string>& s) {
    if (!s) return BaseMode::formal;
    if (*s == "formal") return BaseMode::formal;
    if (*s == "trivial") return BaseMode::trivial;
    fail(ErrorCode::input, "base must be \"formal\" or \"trivial\", got \"" + *s + "\"");
}

void require(bool present, const char* field, const std::string& family) {
    if (!present) {
        fail(ErrorCode::input,
             std::string("geometry.") + field + " is required for family " + family);
    }
}

void forbid(bool present, const char* field, const std::string& family) {
    if (present) {
        fail(ErrorCode::input,
             std::string("geometry.") + field + " is not a parameter of family " + family);
    }
}

StrictPartition mu_from_ints(const std::vector<int>& parts) {
    return StrictPartition(parts);
}

}  // namespace

FlagGeometry build_geometry(const GeometryDraft& g) {
    if (!g.family) fail(ErrorCode::input, "geometry.family is required");
    const std::string& fam = *g.family;
    BaseMode base = parse_base(g.base);

    if (fam == "A") {
        require(g.n.has_value(), "n", fam);
        require(g.dims.has_value(), "dims", fam);
        forbid(g.rank.has_value(), "rank", fam);
        forbid(g.mu.has_value(), "mu", fam);
        forbid(g.twist.has_value(), "twist", fam);
        return FlagGeometry::flag_a(*g.n, *g.dims, base);
    }
    if (fam == "C") {
        require(g.n.has_value(), "n", fam);
        require(g.dims.has_value(), "dims", fam);
        forbid(g.rank.has_value(), "rank", fam);
        forbid(g.mu.has_value(), "mu", fam);
        return FlagGeometry::flag_c(*g.n, *g.dims, parse_twist(g.twist), base);
    }
    if (fam == "BD") {
        require(g.rank.has_value(), "rank", fam);
        require(g.dims.has_value(), "dims", fam);
        forbid(g.n.has_value(), "n", fam);
        forbid(g.mu.has_value(), "mu", fam);
        return FlagGeometry::flag_bd(*g.rank, *g.dims, parse_twist(g.twist), base);
    }
    if (fam == "KL_A") {
        require(g.n.has_value(), "n", fam);
        require(g.mu.has_value(), "mu", fam);
        forbid(g.rank.has_value(), "rank", fam);
        forbid(g.dims.has_value(), "dims", fam);
        forbid(g.twist.has_value(), "twist", fam);
        return FlagGeometry::kl_a(*g.n, mu_from_ints(*g.mu), base);
    }
    if (fam == "KL_C") {
        require(g.n.has_value(), "n", fam);
        require(g.mu.has_value(), "mu", fam);
        forbid(g.rank.has_value(), "rank", fam);
        forbid(g.dims.has_value(), "dims", fam);
        return FlagGeometry::kl_c(*g.n, mu_from_ints(*g.mu), parse_twist(g.twist), base);
    }
    fail(ErrorCode::input,
         "unknown family \"" + fam + "\" (expected A, C, BD, KL_A or KL_C)");
}

namespace {

OutputFormat parse_format(const std::optional<std::string>& s) {
    if (!s) return OutputFormat::text;
    if (*s == "text") return OutputFormat::text;
    if (*s == "structured") return OutputFormat::structured;
    fail(ErrorCode::input, "format must be \"text\" or \"structured\", got \"" + *s + "\"");
}

void append_value_lines(std::ostringstream& out, const ClassPoly& p) {
    if (p.is_zero()) {
        out << "  0\n";
        return;
    }
    for (const std::string& line : term_lines(p)) out << "  " << line << "\n";
}

json value_to_json(const ClassPoly& p) {
    json terms = json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        json factors = json::array();
        for (const auto& [sym, power] : mono.factors()) {
            for (int k = 0; k < power; ++k) {
                factors.push_back({{"bundle", sym.bundle},
                                   {"kind", sym.kind == SymbolKind::segre ? "segre" : "chern"},
                                   {"index", sym.index}});
            }
        }
        terms.push_back({{"coeff", to_string(coeff)}, {"monomial", factors}});
    }
    return terms;
}

JobOutput format_result(OutputFormat format, const char* value_key,
                        const PushforwardResult& res) {
    if (format == OutputFormat::structured) {
        json out;
        out["value"] = value_to_json(res.value);
        out["fiber_dim"] = res.fiber_dim;
        out["degree"] = res.input_degree ? json(*res.input_degree) : json(nullptr);
        out["halved"] = res.halved;
        (void)value_key;
        return {out.dump(2) + "\n", 0};
    }
    std::ostringstream out;
    out << value_key << ":\n";
    append_value_lines(out, res.value);
    out << "fiber_dim: " << res.fiber_dim << "\n";
    if (res.input_degree) {
        out << "degree: " << *res.input_degree << "\n";
    } else {
        out << "degree: inhomogeneous\n";
    }
    out << "halved: " << (res.halved ? "true" : "false") << "\n";
    return {out.str(), 0};
}

// The stepwise tower wrapped in the same result shape as the closed form:
// formal value, then trivial-base reduction and cutoff like pushforward does.
PushforwardResult run_oracle(const TPoly& f, const FlagGeometry& g, bool halve,
                             const std::optional<int>& cutoff) {
    if (g.family() != Family::a_flag && g.family() != Family::kl_a) {
        fail(ErrorCode::unsupported,
             "the stepwise oracle is only defined for families A and KL_A, not " +
                 std::string(family_name(g.family())));
    }
    if (halve) fail(ErrorCode::halve, "halving is not defined for " + g.str());
    PushforwardResult res;
    res.value = g.family() == Family::a_flag
                    ? stepwise_pushforward_a(f, g.n(), g.dims())
                    : stepwise_pushforward_kl_a(f, g.mu(), g.n());
    if (g.base() == BaseMode::trivial) res.value = kill_positive_segre(res.value);
    if (cutoff) res.value = res.value.truncate_above(*cutoff);
    res.fiber_dim = fiber_dim(g);
    res.input_degree = f.is_zero() ? std::optional<int>(0) : f.homogeneous_total_degree();
    res.halved = false;
    return res;
}

}  // namespace

JobOutput run_job(Verb verb, const JobDraft& draft) {
    FlagGeometry g = build_geometry(draft.geometry);
    OutputFormat format = parse_format(draft.format);
    bool halve = draft.halve.value_or(false);

    if (!draft.f) fail(ErrorCode::input, "field 'f' is required");
    TPoly f = lower_expr(parse_expression(*draft.f, g.d()), g.d());

    PushforwardOptions opts;
    opts.cutoff = draft.cutoff;

    switch (verb) {
        case Verb::compute:
            return format_result(format, "value", pushforward(f, g, halve, opts));
        case Verb::oracle:
            return format_result(format, "value", run_oracle(f, g, halve, draft.cutoff));
        case Verb::check: {
            PushforwardResult closed = pushforward(f, g, halve, opts);
            PushforwardResult stepwise = run_oracle(f, g, halve, draft.cutoff);
            bool ok = closed.value == stepwise.value;
            if (format == OutputFormat::structured) {
                json out;
                out["check"] = ok ? "OK" : "MISMATCH";
                out["closed"] = value_to_json(closed.value);
                out["oracle"] = value_to_json(stepwise.value);
                out["fiber_dim"] = closed.fiber_dim;
                return {out.dump(2) + "\n", ok ? 0 : 1};
            }
            std::ostringstream out;
            out << "check: " << (ok ? "OK" : "MISMATCH") << "\n";
            out << "closed:\n";
            append_value_lines(out, closed.value);
            out << "oracle:\n";
            append_value_lines(out, stepwise.value);
            out << "fiber_dim: " << closed.fiber_dim << "\n";
            return {out.str(), ok ? 0 : 1};
        }
    }
    fail(ErrorCode::internal, "unknown verb");
}

}  // namespace gysin
