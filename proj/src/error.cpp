#include "gysin/error.hpp"

namespace gysin {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::parse: return "parse";
        case ErrorCode::geometry: return "geometry";
        case ErrorCode::arity: return "arity";
        case ErrorCode::halve: return "halve";
        case ErrorCode::unsupported: return "unsupported";
        case ErrorCode::limit: return "limit";
        case ErrorCode::input: return "input";
        case ErrorCode::internal: return "internal";
    }
    return "internal";
}

void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace gysin
