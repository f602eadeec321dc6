#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treemu/certificate.hpp"
#include "treemu/rational.hpp"

namespace treemu {

/// Bounds for exploring L_r(alpha), which is infinite in general. Anything
/// not found within a budget is "not found", never "absent".
struct SearchBudget {
  /// Candidate derivations examined (and subset-sum steps in find_witness).
  std::size_t max_certificates = 100'000;
  std::size_t max_nodes_per_certificate = 200;
  /// Derivations whose value has a wider denominator are discarded.
  std::size_t max_denominator_bits = 512;
  std::size_t max_values = 10'000;
};

/// Throws Error(InvalidArgument) unless every field is positive.
void validate(const SearchBudget& budget);

std::string to_string(const SearchBudget& budget);

struct LsetEntry {
  Rational value;
  Certificate certificate;
};

struct LsetEnumeration {
  /// Distinct values in order of smallest certificate size; each carries its
  /// smallest certificate (ties broken by structural order).
  std::vector<LsetEntry> entries;
  /// Set when any budget limit cut the search short.
  bool truncated = false;
  SearchBudget budget;

  const LsetEntry* find(const Rational& value) const;
};

/// Breadth-first over certificate size. Sound (every value belongs to
/// L_r(alpha)) and complete up to the budget. Requires alpha > 1 and r >= 1.
LsetEnumeration enumerate_lset(const Rational& alpha, std::size_t r, const SearchBudget& budget = {});

struct WitnessEntry {
  Rational value;
  Certificate certificate;
  std::size_t multiplicity = 1;
};

/// Multiset {q_1..q_s} of L_r(alpha) with sum 1/q_i = alpha - s, 1 <= s <= r.
/// Entries are sorted by (value, certificate) with equal certificates merged.
struct Witness {
  Rational alpha;
  std::size_t r = 1;
  std::vector<WitnessEntry> entries;

  /// s, counting multiplicities.
  std::size_t size() const;
  /// Certificates with multiplicities expanded, in entry order.
  std::vector<Certificate> roots() const;
};

/// Evaluates and groups the certificates, then checks the witness invariant
/// exactly. Throws Error(InvalidWitness) on any failure.
Witness make_witness(const Rational& alpha, std::size_t r, std::span<const Certificate> roots);

/// Re-evaluates every certificate and re-checks sum 1/q_i = alpha - s and
/// 1 <= s <= r. Throws Error(InvalidWitness).
void validate(const Witness& w);

enum class WitnessStrategy { EqualCopies, ReciprocalPair, SubsetSum };

struct WitnessSearchResult {
  std::optional<Witness> witness;
  std::optional<WitnessStrategy> strategy;
  std::size_t values_examined = 0;
  bool enumeration_truncated = false;
};

/// Looks for a witness among enumerated values, trying in turn: k equal
/// copies with k/q = alpha - k, a reciprocal pair a*b = 1 (converted by
/// witness_from_pair), and a bounded multiset subset-sum. An empty result
/// means "not found within budget". Requires alpha >= 2.
WitnessSearchResult search_witness(const Rational& alpha, std::size_t r, const SearchBudget& budget = {});

inline std::optional<Witness> find_witness(const Rational& alpha, std::size_t r, const SearchBudget& budget = {}) {
  return search_witness(alpha, r, budget).witness;
}

/// Turns a, b with value(a) * value(b) == 1 into a witness: either {1} when
/// alpha = 2 and a is Base, or the children of the derived one plus the
/// other. Throws Error(BaseWithAlphaNot2) for two Base certificates with
/// alpha != 2, Error(NotReciprocal) when the product differs from 1, and
/// CertificateError when either certificate is invalid.
Witness witness_from_pair(const Certificate& a, const Certificate& b, const Rational& alpha, std::size_t r);

/// Witness file:
///   alpha <p/q>
///   r <int>
///   s <int>
///   <certificate>   (s lines)
std::string to_witness_text(const Witness& w);

/// Throws Error(MalformedInput) on syntax, Error(ArityExceeded) for nodes
/// with more than r-1 children, Error(InvalidWitness) when the invariant
/// fails.
Witness parse_witness(std::string_view text);

}  // namespace treemu
