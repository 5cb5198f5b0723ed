#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace ellone {

/// Exact rational scalar, always kept in lowest terms with positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p", "-p", "p/q" (q != 0). Whitespace is not accepted.
Rational parse_rational(std::string_view text);

/// Canonical exact rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Display-only decimal rendering with the given number of fractional digits
/// (rounded toward zero).
std::string to_decimal(const Rational& value, int digits = 12);

}  // namespace ellone
