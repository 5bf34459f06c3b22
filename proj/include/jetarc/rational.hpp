#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jetarc {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a" or "a/b" (optional leading sign). Throws ValidationError on a
/// malformed string or a zero denominator.
Rational parse_rational(std::string_view text);

/// num/den in lowest terms. Throws ValidationError when den = 0.
Rational fraction(long num, long den);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

Rational power(const Rational& base, unsigned exponent);
Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace jetarc
