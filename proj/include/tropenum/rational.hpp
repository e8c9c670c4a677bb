#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tropenum {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" (optional leading '-', q > 0). Throws SyntaxError.
Rational parse_rational(std::string_view text);

/// Natural log of a positive big integer, valid far beyond double range.
double log_big(const BigInt& n);

}  // namespace tropenum
