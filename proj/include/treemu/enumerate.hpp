#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "treemu/tree.hpp"

namespace treemu {

inline constexpr std::size_t kDefaultEnumerationCap = 12;

/// Canonical level sequence of `t` rooted at `root`: children subtrees are
/// ordered by decreasing level sequence, which makes the result the
/// lexicographically largest preorder depth sequence of the rooted tree.
std::vector<int> canonical_rooted_levels(const Tree& t, VertexId root);

/// Vertices minimizing the largest component left after their removal (one
/// or two of them).
std::vector<VertexId> centroids(const Tree& t);

/// Isomorphism-invariant form: the largest canonical rooted sequence over
/// the centroids.
std::vector<int> canonical_free_levels(const Tree& t);

/// Single-pass stream over all free trees of orders 2..n_max, one per
/// isomorphism class, orders ascending.
///
/// Rooted trees are generated as canonical level sequences by successor
/// steps; a rooted sequence is emitted only when its root is the centroid
/// whose rooting is canonical for the underlying free tree.
class FreeTreeEnumerator {
 public:
  /// Throws Error(CapExceeded) when n_max > cap and Error(InvalidArgument)
  /// when n_max < 1.
  explicit FreeTreeEnumerator(std::size_t n_max, std::size_t cap = kDefaultEnumerationCap);

  std::optional<Tree> next();

 private:
  bool advance_levels();

  std::size_t n_max_;
  std::size_t order_ = 1;
  std::vector<int> levels_;
  bool exhausted_order_ = true;
};

std::vector<Tree> enumerate_free_trees(std::size_t n_max, std::size_t cap = kDefaultEnumerationCap);

}  // namespace treemu
