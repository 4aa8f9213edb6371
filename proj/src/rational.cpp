#include "gysin/rational.hpp"

#include "gysin/error.hpp"

namespace gysin {

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/" + denominator(r).str();
    }
    return s;
}

Int factorial(int n) {
    if (n < 0) fail(ErrorCode::input, "factorial of negative argument");
    Int acc = 1;
    for (int k = 2; k <= n; ++k) acc *= k;
    return acc;
}

}  // namespace gysin
