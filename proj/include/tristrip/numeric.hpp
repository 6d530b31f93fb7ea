#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tristrip {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

// Accepts "p/q", signed decimals such as "-3.9942", and plain integers.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Exact decimal rendering rounded half away from zero to `digits` places.
std::string to_decimal(const Rational& value, int digits);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// 2^exponent for any sign of exponent.
Rational power_of_two(long exponent);

Integer ipow(const Integer& base, unsigned long exponent);
Rational ipow(const Rational& base, unsigned long exponent);

}  // namespace tristrip
