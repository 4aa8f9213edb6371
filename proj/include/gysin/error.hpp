#pragma once

#include <stdexcept>
#include <string>

namespace gysin {

// Stable failure classes. The CLI maps each to its own exit code, so scripts
// can tell a malformed expression from an invalid geometry without grepping
// message text.
enum class ErrorCode {
    parse = 2,        // expression syntax
    geometry = 3,     // invalid flag data (dims, mu, rank, lambda out of box)
    arity = 4,        // variable-count mismatch between f, exponents, assignment
    halve = 5,        // halving requested on a geometry that is not halvable
    unsupported = 6,  // operation not defined for the family (stepwise C/BD)
    limit = 7,        // term-count ceiling exceeded
    input = 8,        // malformed job document or bad operation argument
    internal = 9,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace gysin
