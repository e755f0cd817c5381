#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rsc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k) with the convention C(n, k) = 0 for k > n or k < 0.
Int binomial(long long n, long long k);

Rational rational_pow(const Rational& base, unsigned exp);

/// Parses "98", "-3/4", "0.02", "1e-3", "2.5e2" to an exact rational.
Rational parse_rational(const std::string& text);

/// Decimal rendering with the given number of fractional digits (round half
/// away from zero), without a trailing dot ("98", "850.64").
std::string decimal_string(const Rational& value, unsigned digits = 12);

double to_double(const Rational& value);

} // namespace rsc
