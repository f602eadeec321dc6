#include <doctest.h>

#include <random>

#include "treemu/enumerate.hpp"
#include "treemu/error.hpp"
#include "treemu/tree.hpp"

using namespace treemu;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

// Center 0; middles 1, 4, 7 with two leaves each.
Tree three_cherries() {
  return Tree::from_edges(10, {{0, 1}, {1, 2}, {1, 3}, {0, 4}, {4, 5}, {4, 6}, {0, 7}, {7, 8}, {7, 9}});
}

}  // namespace

TEST_CASE("parse_tree: edge lists") {
  const Tree k2 = parse_tree("2\n0 1\n", TreeFormat::EdgeList);
  CHECK(k2.order() == 2);
  CHECK(k2.edges().size() == 1);

  const Tree k13 = parse_tree("4\n0 1\n0 2\n0 3", TreeFormat::EdgeList);
  CHECK(k13.degree(0) == 3);
  for (VertexId v = 1; v < 4; ++v) CHECK(k13.degree(v) == 1);

  CHECK(parse_tree("1\n", TreeFormat::EdgeList).order() == 1);
}

TEST_CASE("parse_tree: structural and syntax errors") {
  CHECK(code_of([] { parse_tree("4\n0 1\n1 2\n2 0", TreeFormat::EdgeList); }) == ErrorCode::NotATree);
  CHECK(code_of([] { parse_tree("3\n0 1\n0 1", TreeFormat::EdgeList); }) == ErrorCode::NotATree);
  CHECK(code_of([] { parse_tree("3\n0 0\n1 2", TreeFormat::EdgeList); }) == ErrorCode::NotATree);
  CHECK(code_of([] { parse_tree("3\n0 1", TreeFormat::EdgeList); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_tree("3\n0 1\n1 x", TreeFormat::EdgeList); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_tree("3\n0 1\n1 3", TreeFormat::EdgeList); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_tree("", TreeFormat::EdgeList); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_tree("0\n", TreeFormat::EdgeList); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_tree("0 2 1", TreeFormat::LevelSeq); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_tree("1 2", TreeFormat::LevelSeq); }) == ErrorCode::MalformedInput);
}

TEST_CASE("parse_tree: level sequences") {
  const Tree p3 = parse_tree("0 1 2\n", TreeFormat::LevelSeq);
  CHECK(p3 == path(3));
  const Tree k13 = parse_tree("0 1 1 1", TreeFormat::LevelSeq);
  CHECK(k13.degree(0) == 3);
  CHECK(to_levelseq(k13) == "0 1 1 1\n");
}

TEST_CASE("serialization: canonical edge order and DOT") {
  const Tree t = Tree::from_edges(4, {{3, 0}, {2, 0}, {1, 0}});
  CHECK(to_edgelist(t) == "4\n0 1\n0 2\n0 3\n");
  CHECK(to_dot(path(3)) == "graph T {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  2 [label=\"2\"];\n  0 -- 1;\n  1 -- 2;\n}\n");
}

TEST_CASE("serialization round-trips on random labeled trees") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) edges.emplace_back(static_cast<VertexId>(rng() % v), static_cast<VertexId>(v));
    std::shuffle(edges.begin(), edges.end(), rng);
    const Tree t = Tree::from_edges(n, edges);
    CHECK(parse_tree(to_edgelist(t), TreeFormat::EdgeList) == t);
    // Level sequences relabel vertices but keep the isomorphism class.
    CHECK(canonical_free_levels(parse_tree(to_levelseq(t), TreeFormat::LevelSeq)) == canonical_free_levels(t));
  }
}

TEST_CASE("orient_from_root") {
  SUBCASE("K_{1,3} from a leaf gives out-degrees 1, 2, 0, 0") {
    const RootedTree rt = orient_from_root(parse_tree("4\n0 1\n0 2\n0 3\n", TreeFormat::EdgeList), 1);
    CHECK(rt.root() == 1);
    CHECK(rt.out_degree(1) == 1);
    CHECK(rt.out_degree(0) == 2);
    CHECK(rt.out_degree(2) == 0);
    CHECK(rt.out_degree(3) == 0);
    CHECK(rt.parent(1) == kNoVertex);
    CHECK(rt.parent(0) == 1);
    CHECK(rt.postorder().back() == 1);
  }
  SUBCASE("K_2 from either end") {
    for (VertexId u : {0u, 1u}) {
      const RootedTree rt = orient_from_root(path(2), u);
      CHECK(rt.out_degree(u) == 1);
      CHECK(rt.out_degree(1 - u) == 0);
    }
  }
  SUBCASE("P_3 from the center") {
    const RootedTree rt = orient_from_root(path(3), 1);
    CHECK(rt.children(1).size() == 2);
    CHECK(rt.out_degree(0) == 0);
    CHECK(rt.out_degree(2) == 0);
  }
  SUBCASE("in-degree 0 at the root and 1 elsewhere for every root of every small tree") {
    for (const Tree& t : enumerate_free_trees(8)) {
      for (VertexId u = 0; u < t.order(); ++u) {
        const RootedTree rt = orient_from_root(t, u);
        std::vector<int> in(t.order(), 0);
        for (VertexId v = 0; v < t.order(); ++v) {
          for (VertexId w : rt.children(v)) ++in[w];
        }
        for (VertexId v = 0; v < t.order(); ++v) CHECK(in[v] == (v == u ? 0 : 1));
        CHECK(rt.postorder().size() == t.order());
        CHECK(rt.preorder().front() == u);
      }
    }
  }
  CHECK(code_of([] { orient_from_root(path(2), 5); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("degree_profile") {
  const auto star_profile = degree_profile(parse_tree("4\n0 1\n0 2\n0 3\n", TreeFormat::EdgeList));
  CHECK(star_profile.max_degree == 3);
  CHECK(star_profile.degrees == std::vector<std::size_t>{3, 1, 1, 1});
  CHECK(degree_profile(path(4)).max_degree == 2);

  const auto fig = degree_profile(three_cherries());
  CHECK(fig.max_degree == 3);
  CHECK(fig.degrees[0] == 3);
  CHECK(fig.degrees[1] == 3);
  CHECK(fig.degrees[4] == 3);
  CHECK(fig.degrees[7] == 3);
  std::size_t sum = 0;
  for (auto d : fig.degrees) sum += d;
  CHECK(sum == 2 * (10 - 1));
}
