#include "treemu/rational.hpp"

#include <cctype>
#include <cmath>

#include "treemu/error.hpp"

namespace treemu {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ArityExceeded: return "ArityExceeded";
    case ErrorCode::NonPositiveValue: return "NonPositiveValue";
    case ErrorCode::ZeroChildValue: return "ZeroChildValue";
    case ErrorCode::NotReciprocal: return "NotReciprocal";
    case ErrorCode::BaseWithAlphaNot2: return "BaseWithAlphaNot2";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::NotEigenvalue: return "NotEigenvalue";
    case ErrorCode::NotDivisor: return "NotDivisor";
    case ErrorCode::DivisorTooLarge: return "DivisorTooLarge";
    case ErrorCode::BTooSmall: return "BTooSmall";
    case ErrorCode::NoGapTree: return "NoGapTree";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::MalformedInput, "not a rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::MalformedInput, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_str(10);
}

std::size_t denominator_bits(const Rational& q) {
  return mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

Rational nearest_rational(double x, std::int64_t max_denominator) {
  if (max_denominator < 1) {
    throw Error(ErrorCode::InvalidArgument, "max_denominator must be positive");
  }
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::InvalidArgument, "cannot approximate a non-finite value");
  }
  // Exact binary value of x, then the continued-fraction walk in exact
  // integers so large partial quotients do not lose precision.
  Rational target(x);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational rest = target;
  const mpz_class cap = max_denominator;
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    const mpz_class q2 = q0 + a * q1;
    if (q2 > cap) {
      // Largest admissible semiconvergent versus the last convergent.
      const mpz_class k = (cap - q0) / q1;
      Rational semi(mpz_class(p0 + k * p1), mpz_class(q0 + k * q1));
      semi.canonicalize();
      Rational conv(p1, q1);
      conv.canonicalize();
      return abs(semi - target) < abs(conv - target) ? semi : conv;
    }
    const mpz_class p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rational frac = rest - Rational(a);
    if (frac == 0) {
      Rational conv(p1, q1);
      conv.canonicalize();
      return conv;
    }
    rest = 1 / frac;
  }
}

}  // namespace treemu
