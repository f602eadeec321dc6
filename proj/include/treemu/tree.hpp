#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace treemu {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Undirected edge stored with `first < second`.
using Edge = std::pair<VertexId, VertexId>;

/// Undirected labeled tree on vertices 0..n-1.
///
/// Edges are kept in canonical order (each pair normalized, list sorted) and
/// neighbor lists are sorted ascending, so two trees built from the same edge
/// set compare and serialize identically.
class Tree {
 public:
  /// Validates and builds. Throws Error(NotATree) on self-loops, duplicate
  /// edges, a wrong edge count, cycles or disconnection, and
  /// Error(MalformedInput) on out-of-range endpoints.
  static Tree from_edges(std::size_t order, std::vector<Edge> edges);

  /// The one-vertex tree.
  static Tree singleton() { return from_edges(1, {}); }

  std::size_t order() const noexcept { return order_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool contains(VertexId v) const noexcept { return v < order_; }

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
};

/// A tree oriented away from a distinguished source. Children of each vertex
/// are listed in ascending id order; `postorder()` visits children (in order)
/// before their parent and ends at the root.
class RootedTree {
 public:
  const Tree& tree() const noexcept { return tree_; }
  VertexId root() const noexcept { return root_; }
  std::size_t order() const noexcept { return tree_.order(); }

  /// kNoVertex at the root.
  VertexId parent(VertexId v) const { return parent_[v]; }
  std::span<const VertexId> children(VertexId v) const {
    return {child_list_.data() + child_offsets_[v], child_list_.data() + child_offsets_[v + 1]};
  }
  std::size_t out_degree(VertexId v) const { return child_offsets_[v + 1] - child_offsets_[v]; }
  std::size_t in_degree(VertexId v) const { return v == root_ ? 0 : 1; }
  std::span<const VertexId> preorder() const noexcept { return preorder_; }
  std::span<const VertexId> postorder() const noexcept { return postorder_; }

 private:
  friend RootedTree orient_from_root(const Tree& t, VertexId u);

  Tree tree_;
  VertexId root_ = 0;
  std::vector<VertexId> parent_;
  std::vector<std::size_t> child_offsets_;
  std::vector<VertexId> child_list_;
  std::vector<VertexId> preorder_;
  std::vector<VertexId> postorder_;
};

enum class TreeFormat { EdgeList, LevelSeq };

/// Throws Error(MalformedInput) on syntax errors and Error(NotATree) on
/// structural ones.
Tree parse_tree(std::string_view text, TreeFormat format);

/// Edge list: "n\n" then one "u v\n" per edge in canonical order.
std::string to_edgelist(const Tree& t);

/// Preorder depths from vertex 0, children visited in ascending id order.
std::string to_levelseq(const Tree& t);

/// Undirected DOT graph with sorted edges.
std::string to_dot(const Tree& t, std::string_view name = "T");

/// Builds a tree from a preorder depth sequence; vertex i is the i-th entry.
Tree tree_from_levels(std::span<const int> levels);

/// Unique orientation with `u` as its sole source.
RootedTree orient_from_root(const Tree& t, VertexId u);

struct DegreeProfile {
  std::size_t max_degree = 0;
  std::vector<std::size_t> degrees;
};

DegreeProfile degree_profile(const Tree& t);

/// Path on n vertices 0-1-...-(n-1).
Tree path(std::size_t n);

}  // namespace treemu
