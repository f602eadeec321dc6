#include "treemu/tree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "treemu/error.hpp"

namespace treemu {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string_view::npos) {
    lines.pop_back();
  }
  return lines;
}

std::vector<std::uint64_t> parse_integers(std::string_view line) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    const std::size_t used = static_cast<std::size_t>(ptr - (line.data() + i));
    if (ec != std::errc() || used == 0) {
      throw Error(ErrorCode::MalformedInput, "expected a non-negative integer in '" + std::string(line) + "'");
    }
    i += used;
    if (i < line.size() && line[i] != ' ' && line[i] != '\t') {
      throw Error(ErrorCode::MalformedInput, "unexpected character in '" + std::string(line) + "'");
    }
    out.push_back(value);
  }
  return out;
}

Tree parse_edgelist(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw Error(ErrorCode::MalformedInput, "empty edge list");
  const auto header = parse_integers(lines[0]);
  if (header.size() != 1 || header[0] == 0) {
    throw Error(ErrorCode::MalformedInput, "first line must be a positive vertex count");
  }
  const std::uint64_t n = header[0];
  if (n > std::numeric_limits<VertexId>::max() / 2) throw Error(ErrorCode::MalformedInput, "vertex count too large");
  if (lines.size() != n) {
    throw Error(ErrorCode::MalformedInput,
                "expected " + std::to_string(n - 1) + " edge lines, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto uv = parse_integers(lines[i]);
    if (uv.size() != 2) throw Error(ErrorCode::MalformedInput, "edge line must hold two vertex ids");
    if (uv[0] >= n || uv[1] >= n) throw Error(ErrorCode::MalformedInput, "vertex id out of range");
    edges.emplace_back(static_cast<VertexId>(uv[0]), static_cast<VertexId>(uv[1]));
  }
  return Tree::from_edges(n, std::move(edges));
}

Tree parse_levelseq(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() != 1) throw Error(ErrorCode::MalformedInput, "level sequence must be a single line");
  const auto raw = parse_integers(lines[0]);
  std::vector<int> levels;
  levels.reserve(raw.size());
  for (auto v : raw) {
    if (v > raw.size()) throw Error(ErrorCode::MalformedInput, "depth exceeds sequence length");
    levels.push_back(static_cast<int>(v));
  }
  return tree_from_levels(levels);
}

void preorder_walk(const Tree& t, VertexId root, std::vector<VertexId>& order, std::vector<VertexId>& parent) {
  order.clear();
  order.reserve(t.order());
  parent.assign(t.order(), kNoVertex);
  std::vector<VertexId> stack{root};
  std::vector<bool> seen(t.order(), false);
  seen[root] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto nbrs = t.neighbors(v);
    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
      if (!seen[*it]) {
        seen[*it] = true;
        parent[*it] = v;
        stack.push_back(*it);
      }
    }
  }
}

}  // namespace

Tree Tree::from_edges(std::size_t order, std::vector<Edge> edges) {
  if (order == 0) throw Error(ErrorCode::NotATree, "a tree has at least one vertex");
  if (edges.size() != order - 1) {
    throw Error(ErrorCode::NotATree,
                "a tree on " + std::to_string(order) + " vertices has " + std::to_string(order - 1) + " edges, got " +
                    std::to_string(edges.size()));
  }
  for (auto& e : edges) {
    if (e.first >= order || e.second >= order) throw Error(ErrorCode::MalformedInput, "vertex id out of range");
    if (e.first == e.second) throw Error(ErrorCode::NotATree, "self-loop at " + std::to_string(e.first));
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorCode::NotATree, "duplicate edge");
  }
  DisjointSets sets(order);
  for (const auto& [u, v] : edges) {
    if (!sets.unite(u, v)) throw Error(ErrorCode::NotATree, "cycle through edge " + std::to_string(u) + "-" + std::to_string(v));
  }

  Tree t;
  t.order_ = order;
  t.edges_ = std::move(edges);
  t.offsets_.assign(order + 1, 0);
  for (const auto& [u, v] : t.edges_) {
    ++t.offsets_[u + 1];
    ++t.offsets_[v + 1];
  }
  std::partial_sum(t.offsets_.begin(), t.offsets_.end(), t.offsets_.begin());
  t.adjacency_.resize(2 * t.edges_.size());
  std::vector<std::size_t> fill(t.offsets_.begin(), t.offsets_.end() - 1);
  for (const auto& [u, v] : t.edges_) {
    t.adjacency_[fill[u]++] = v;
    t.adjacency_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < order; ++v) {
    std::sort(t.adjacency_.begin() + t.offsets_[v], t.adjacency_.begin() + t.offsets_[v + 1]);
  }
  return t;
}

Tree parse_tree(std::string_view text, TreeFormat format) {
  return format == TreeFormat::EdgeList ? parse_edgelist(text) : parse_levelseq(text);
}

std::string to_edgelist(const Tree& t) {
  std::ostringstream out;
  out << t.order() << '\n';
  for (const auto& [u, v] : t.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_levelseq(const Tree& t) {
  std::vector<VertexId> order, parent;
  preorder_walk(t, 0, order, parent);
  std::vector<int> depth(t.order(), 0);
  std::ostringstream out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId v = order[i];
    if (parent[v] != kNoVertex) depth[v] = depth[parent[v]] + 1;
    if (i) out << ' ';
    out << depth[v];
  }
  out << '\n';
  return out.str();
}

std::string to_dot(const Tree& t, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t v = 0; v < t.order(); ++v) out << "  " << v << " [label=\"" << v << "\"];\n";
  for (const auto& [u, v] : t.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

Tree tree_from_levels(std::span<const int> levels) {
  if (levels.empty()) throw Error(ErrorCode::MalformedInput, "empty level sequence");
  if (levels[0] != 0) throw Error(ErrorCode::MalformedInput, "level sequence must start at depth 0");
  std::vector<Edge> edges;
  edges.reserve(levels.size() - 1);
  // last[d] = most recent vertex at depth d
  std::vector<VertexId> last{0};
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const int d = levels[i];
    if (d < 1 || static_cast<std::size_t>(d) > last.size()) {
      throw Error(ErrorCode::MalformedInput, "depth " + std::to_string(d) + " at position " + std::to_string(i) +
                                                 " is not reachable from the previous vertex");
    }
    edges.emplace_back(last[d - 1], static_cast<VertexId>(i));
    last.resize(d);
    last.push_back(static_cast<VertexId>(i));
  }
  return Tree::from_edges(levels.size(), std::move(edges));
}

RootedTree orient_from_root(const Tree& t, VertexId u) {
  if (!t.contains(u)) throw Error(ErrorCode::InvalidArgument, "root " + std::to_string(u) + " is not a vertex");
  RootedTree rt;
  rt.tree_ = t;
  rt.root_ = u;
  preorder_walk(t, u, rt.preorder_, rt.parent_);

  const std::size_t n = t.order();
  rt.child_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (rt.parent_[v] != kNoVertex) ++rt.child_offsets_[rt.parent_[v] + 1];
  }
  std::partial_sum(rt.child_offsets_.begin(), rt.child_offsets_.end(), rt.child_offsets_.begin());
  rt.child_list_.resize(n - 1);
  std::vector<std::size_t> fill(rt.child_offsets_.begin(), rt.child_offsets_.end() - 1);
  for (std::size_t v = 0; v < n; ++v) {
    for (VertexId w : t.neighbors(static_cast<VertexId>(v))) {
      if (rt.parent_[w] == v) rt.child_list_[fill[v]++] = w;
    }
  }

  // Iterative postorder honoring child order.
  rt.postorder_.reserve(n);
  std::vector<std::pair<VertexId, std::size_t>> stack{{u, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto kids = rt.children(v);
    if (next < kids.size()) {
      const VertexId w = kids[next++];
      stack.emplace_back(w, 0);
    } else {
      rt.postorder_.push_back(v);
      stack.pop_back();
    }
  }
  return rt;
}

DegreeProfile degree_profile(const Tree& t) {
  DegreeProfile p;
  p.degrees.resize(t.order());
  for (std::size_t v = 0; v < t.order(); ++v) {
    p.degrees[v] = t.degree(static_cast<VertexId>(v));
    p.max_degree = std::max(p.max_degree, p.degrees[v]);
  }
  return p;
}

Tree path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(static_cast<VertexId>(i - 1), static_cast<VertexId>(i));
  return Tree::from_edges(n, std::move(edges));
}

}  // namespace treemu
