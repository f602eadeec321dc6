#include "treemu/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "treemu/error.hpp"

namespace treemu {

std::vector<int> canonical_rooted_levels(const Tree& t, VertexId root) {
  const RootedTree rt = orient_from_root(t, root);
  std::vector<std::vector<int>> seq(t.order());
  for (VertexId v : rt.postorder()) {
    std::vector<std::vector<int>*> kids;
    for (VertexId w : rt.children(v)) kids.push_back(&seq[w]);
    std::sort(kids.begin(), kids.end(), [](const auto* a, const auto* b) { return *a > *b; });
    std::vector<int> mine{0};
    for (const auto* k : kids) {
      for (int d : *k) mine.push_back(d + 1);
    }
    for (VertexId w : rt.children(v)) std::vector<int>().swap(seq[w]);
    seq[v] = std::move(mine);
  }
  return std::move(seq[root]);
}

std::vector<VertexId> centroids(const Tree& t) {
  const std::size_t n = t.order();
  const RootedTree rt = orient_from_root(t, 0);
  std::vector<std::size_t> size(n, 1);
  for (VertexId v : rt.postorder()) {
    if (rt.parent(v) != kNoVertex) size[rt.parent(v)] += size[v];
  }
  std::vector<std::size_t> worst(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t w = n - size[v];
    for (VertexId c : rt.children(static_cast<VertexId>(v))) w = std::max(w, size[c]);
    worst[v] = w;
  }
  const std::size_t best = *std::min_element(worst.begin(), worst.end());
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (worst[v] == best) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::vector<int> canonical_free_levels(const Tree& t) {
  std::vector<int> best;
  for (VertexId c : centroids(t)) best = std::max(best, canonical_rooted_levels(t, c));
  return best;
}

FreeTreeEnumerator::FreeTreeEnumerator(std::size_t n_max, std::size_t cap) : n_max_(n_max) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be at least 1");
  if (n_max > cap) {
    throw Error(ErrorCode::CapExceeded,
                "n_max " + std::to_string(n_max) + " exceeds the enumeration cap " + std::to_string(cap));
  }
}

bool FreeTreeEnumerator::advance_levels() {
  if (exhausted_order_) {
    if (order_ >= n_max_) return false;
    ++order_;
    levels_.resize(order_);
    std::iota(levels_.begin(), levels_.end(), 0);
    exhausted_order_ = false;
    return true;
  }
  // Successor of a canonical rooted level sequence.
  std::size_t p = levels_.size();
  while (p > 0 && levels_[p - 1] <= 1) --p;
  if (p == 0) {
    exhausted_order_ = true;
    return advance_levels();
  }
  --p;
  std::size_t q = p;
  while (levels_[q] != levels_[p] - 1) --q;
  const std::size_t shift = p - q;
  for (std::size_t i = p; i < levels_.size(); ++i) levels_[i] = levels_[i - shift];
  return true;
}

std::optional<Tree> FreeTreeEnumerator::next() {
  while (advance_levels()) {
    Tree t = tree_from_levels(levels_);
    if (canonical_free_levels(t) == levels_) return t;
  }
  return std::nullopt;
}

std::vector<Tree> enumerate_free_trees(std::size_t n_max, std::size_t cap) {
  FreeTreeEnumerator stream(n_max, cap);
  std::vector<Tree> out;
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

}  // namespace treemu
