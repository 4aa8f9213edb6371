#pragma once

#include "gysin/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gysin {

enum class OutputFormat { text, structured };
enum class Verb { compute, oracle, check };

// Raw job fields before validation. Everything is optional so CLI flags can
// override file values member by member; required-field checks happen in
// build_geometry / run_job on the merged draft.
struct GeometryDraft {
    std::optional<std::string> family;
    std::optional<int> n;
    std::optional<int> rank;
    std::optional<std::vector<int>> dims;
    std::optional<std::vector<int>> mu;
    std::optional<std::string> twist;
    std::optional<std::string> base;
};

struct JobDraft {
    GeometryDraft geometry;
    std::optional<std::string> f;
    std::optional<bool> halve;
    // set means the document carried an integer; an explicit null stays unset.
    std::optional<int> cutoff;
    std::optional<std::string> format;
};

// Parses the JSON job document. Unknown keys and wrong value types are
// rejected, so a typo never silently falls back to a default.
JobDraft parse_job_document(const std::string& text);

// Field-by-field override; set fields of high win.
JobDraft merge_drafts(const JobDraft& low, const JobDraft& high);

// Validates the family/field combination and dispatches to the right
// geometry factory. n is the parameter for every family except BD, which
// takes rank instead.
FlagGeometry build_geometry(const GeometryDraft& g);

struct JobOutput {
    std::string text;  // ends with a newline
    int exit_code = 0; // 0, or 1 when check found a mismatch
};

// Runs one job end to end: geometry, expression, pushforward (compute),
// stepwise tower (oracle), or both with a diff (check). Output is
// deterministic: terms in canonical order, one per line in text mode.
JobOutput run_job(Verb verb, const JobDraft& draft);

}  // namespace gysin
