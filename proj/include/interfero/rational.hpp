#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace interfero {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n", "n/d", decimal "0.36" and scientific "1.5e-3" notation exactly.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den" with den > 0, e.g. "1/1", "-17/18".
std::string to_string(const Rational& q);

/// Nearest double (round-to-nearest when numerator and denominator fit in
/// 53 bits, GMP truncation otherwise).
double to_double(const Rational& q);

/// Exact square root when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

/// p^e for any integer exponent.
Rational rational_pow(unsigned long p, long e);

}  // namespace interfero
