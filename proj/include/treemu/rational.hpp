#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace treemu {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator (GMP's mpq canonical form).
using Rational = mpq_class;

/// Parses `[+-]?digits(/digits)?`. The denominator must be positive.
/// Throws Error(MalformedInput) on anything else.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Bit length of the (positive) denominator.
std::size_t denominator_bits(const Rational& q);

/// Best rational approximation of x with denominator at most max_denominator,
/// computed from the continued-fraction expansion (convergents and
/// semiconvergents).
Rational nearest_rational(double x, std::int64_t max_denominator);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace treemu
