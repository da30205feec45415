#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hodgesig {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational. GMP keeps it canonical: gcd(num, den) = 1,
/// den > 0, zero is 0/1.
using Rational = mpq_class;

Integer ipow(const Integer& base, unsigned long exponent);
Rational rpow(const Rational& base, long exponent);

/// Parses "a", "-a", or "a/b". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Returns a rational r with r >= sqrt(x) and r - sqrt(x) <= 2^-bits * (1 + sqrt(x)).
/// x must be nonnegative.
Rational sqrt_upper(const Rational& x, unsigned bits);

/// Rounds x to the nearest multiple of 2^-bits (ties away from zero).
Rational round_dyadic(const Rational& x, unsigned bits);

bool is_perfect_square(const Integer& x);

inline bool fits_int64(const Integer& x) {
  return x.fits_slong_p();
}

}  // namespace hodgesig
