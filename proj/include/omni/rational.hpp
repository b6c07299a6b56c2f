#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace omni {

// Exact rational scalar. Always normalized, denominator positive.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

// Parses "p/q", "-7", "6.5", "-0.125". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Fixed-point rendering with `digits` fractional digits, rounded half away
// from zero.
std::string to_decimal(const Rational& value, int digits = 6);

}  // namespace omni
