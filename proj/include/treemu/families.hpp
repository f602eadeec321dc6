#pragma once

#include <cstddef>
#include <variant>

#include "treemu/construct.hpp"
#include "treemu/lset.hpp"
#include "treemu/tree.hpp"

namespace treemu {

/// K_{1,n}, center at vertex 0; mu = n + 1.
Tree star(std::size_t n);

/// Witness for alpha = n + 1 and r = n - t + 1 when t divides n and
/// t^2 <= n: n - t + 1 copies of a node with (t-1)n/t Base children (value
/// (n-t+1)/t), or Base copies when t = 1. The built tree has a center of
/// degree n - t + 1 whose neighbors have degree n - n/t + 1.
/// Throws Error(NotDivisor) or Error(DivisorTooLarge); n < 2 or t < 1 is
/// Error(InvalidArgument).
Witness divisor_witness(std::size_t n, std::size_t t);

/// Witness for alpha = 2B + 2 with r <= 2B, B >= 2 (Error(BTooSmall)
/// otherwise). Three chains depending on B mod 3:
///   B = 3k     (k >= 1): r = 6k,     4k+1 copies of b, b -> 3k a, a -> 6k-1 Base
///   B = 3k + 1 (k >= 1): r = 6k + 1, 4k+3 copies of a, a -> 6k Base
///   B = 3k + 2 (k >= 0): r = 6k + 4, 2k+1 copies of c and 2 of a1,
///                        c -> 3k+2 b, b -> 4k+3 a2, a2 -> 6k+2 Base, a1 -> 6k+3 Base
/// The chain values are checked against their closed forms before return.
Witness prime_witness(std::size_t B);

struct AutoStrategy {};
struct DivisorStrategy {
  std::size_t t = 2;
};
struct PrimeStrategy {};
using GapStrategy = std::variant<AutoStrategy, DivisorStrategy, PrimeStrategy>;

struct GapRequest {
  std::size_t n = 4;
  GapStrategy strategy = AutoStrategy{};
};

/// Largest divisor t of n with t * t <= n.
std::size_t largest_small_divisor(std::size_t n);

/// Tree with mu = n + 1 and maximum degree below n. Auto uses the divisor
/// family with the largest t <= sqrt(n) for composite n and the prime family
/// with B = (n-1)/2 otherwise. Throws Error(NoGapTree) for n <= 3,
/// Error(InvalidArgument) for Divisor(1) or Prime with even n, plus the
/// family errors.
BuiltTree star_gap_tree(const GapRequest& request);

inline BuiltTree star_gap_tree(std::size_t n) { return star_gap_tree(GapRequest{n, AutoStrategy{}}); }

}  // namespace treemu
