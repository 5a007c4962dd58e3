#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace chromascope {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "a/b" or an integer; requires b > 0.
Rational parse_fraction(std::string_view text);

/// Parses a plain decimal such as "0.35" or "1" exactly.
Rational parse_decimal(std::string_view text);

/// Exact "num/den" text (den omitted when 1).
std::string to_string(const Rational& r);

/// Decimal expansion of r, rounded half away from zero to `digits` places.
std::string to_decimal(const Rational& r, int digits);

}  // namespace chromascope
