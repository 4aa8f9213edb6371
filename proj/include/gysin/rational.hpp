#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gysin {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with q > 0; the "/q" is omitted when q == 1.
std::string to_string(const Rational& r);

Int factorial(int n);

}  // namespace gysin
