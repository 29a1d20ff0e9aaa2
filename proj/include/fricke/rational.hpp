#pragma once

// Exact arbitrary-precision rational coefficients, backed by GMP.
// mpq_class keeps every value canonical (gcd(num, den) = 1, den >= 1),
// which is exactly the representation the series layer relies on.

#include <gmpxx.h>

#include <string>

namespace fricke {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "a" or "a/b" with optional leading '-'. The denominator must be a
// positive integer. Throws std::invalid_argument on anything else (including
// embedded whitespace and b = 0).
Rational parse_rational(const std::string& text);

// Formats canonically: "a" when the denominator is 1, else "a/b".
std::string to_string(const Rational& x);

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

// Exact p^k for k of either sign (k < 0 gives 1/p^k).
Rational pow_rational(long base, long exp);

}  // namespace fricke
