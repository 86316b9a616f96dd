#include <random>

#include "doctest.h"
#include "xpg/digraph.hpp"

using namespace xpg;

namespace {

Digraph random_digraph(std::mt19937& rng, int max_vertices) {
  std::uniform_int_distribution<int> nv(0, max_vertices);
  int n = nv(rng);
  std::vector<std::pair<int, int>> edges;
  if (n >= 2) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> ne(0, 2 * n);
    for (int i = ne(rng); i > 0; --i) {
      int u = pick(rng), v = pick(rng);
      if (u != v) edges.emplace_back(u, v);
    }
  }
  return Digraph(n, std::move(edges));
}

VertexPartition singletons(int n) {
  VertexPartition p;
  for (int v = 0; v < n; ++v) p.cells.push_back({v});
  return p;
}

}  // namespace

TEST_CASE("digraph construction") {
  Digraph g(3, {{0, 1}, {1, 2}, {0, 1}});
  CHECK(g.edges().size() == 2);  // duplicates collapse
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(1, 0));
  CHECK(g.out_neighbors(0) == std::vector<int>{1});
  CHECK(g.in_neighbors(2) == std::vector<int>{1});
  CHECK_THROWS_AS(Digraph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("labeled digraph") {
  LabeledDigraph g(3, {{0, 1, 2}, {1, 2, 4}});
  CHECK(g.label(0, 1) == 2);
  CHECK(g.label(1, 2) == 4);
  CHECK_THROWS_AS(g.label(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(LabeledDigraph(2, {{0, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(LabeledDigraph(2, {{0, 1, 2}, {0, 1, 3}}), std::invalid_argument);
}

TEST_CASE("undirect") {
  CHECK(undirect(Digraph(2, {{0, 1}})) == Digraph(2, {{0, 1}, {1, 0}}));
  Digraph sym(2, {{0, 1}, {1, 0}});
  CHECK(undirect(sym) == sym);
  CHECK(undirect(Digraph(3)) == Digraph(3));
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto g = random_digraph(rng, 8);
    auto u = undirect(g);
    CHECK(is_symmetric(u));
    CHECK(undirect(u) == u);
  }
}

TEST_CASE("weak components") {
  auto p = weak_components(Digraph(4));
  CHECK(p.cells == std::vector<std::vector<int>>{{0}, {1}, {2}, {3}});
  auto q = weak_components(Digraph(5, {{1, 0}, {3, 4}}));
  CHECK(q.cells == std::vector<std::vector<int>>{{0, 1}, {2}, {3, 4}});
}

TEST_CASE("directed clique union detection") {
  CHECK(is_directed_clique_union(Digraph(4)));
  CHECK(is_directed_clique_union(Digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}})));
  CHECK_FALSE(is_directed_clique_union(Digraph(2, {{0, 1}})));
}

TEST_CASE("clique union detection requires symmetric input") {
  CHECK_THROWS_AS(is_clique_union(Digraph(2, {{0, 1}})), std::invalid_argument);
  CHECK(is_clique_union(Digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}})));
  CHECK_FALSE(is_clique_union(Digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}})));
}

TEST_CASE("equitable partitions") {
  Digraph path(3, {{0, 1}, {1, 2}});
  CHECK(is_equitable(path, singletons(3)));
  VertexPartition ends_mid{{{0, 2}, {1}}};
  CHECK_FALSE(is_equitable(path, ends_mid));  // 0 has an out-neighbor in {1}, 2 has none
  VertexPartition bad{{{0, 1}}};
  CHECK_THROWS_AS(is_equitable(path, bad), std::invalid_argument);
}

TEST_CASE("quotient") {
  Digraph g(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(quotient(g, singletons(4)) == g);
  VertexPartition one{{{0, 1, 2, 3}}};
  CHECK(quotient(g, one) == Digraph(1));
  VertexPartition halves{{{0, 1}, {2, 3}}};
  CHECK(quotient(g, halves) == Digraph(2, {{0, 1}}));
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    auto h = random_digraph(rng, 8);
    CHECK(quotient(h, singletons(h.vertex_count())) == h);
  }
}

TEST_CASE("induced subgraph and disjoint union") {
  Digraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(induced_subgraph(g, {0, 1, 2}) == Digraph(3, {{0, 1}, {1, 2}}));
  CHECK(disjoint_union(Digraph(1), Digraph(2, {{0, 1}})) == Digraph(3, {{1, 2}}));
}

TEST_CASE("isomorphism basics") {
  Digraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
  Digraph path(3, {{0, 1}, {1, 2}});
  CHECK(isomorphic(tri, tri));
  CHECK_FALSE(isomorphic(tri, path));
  Digraph tri2(3, {{1, 0}, {0, 2}, {2, 1}});
  CHECK(isomorphic(tri, tri2));
  CHECK(isomorphic(Digraph(0), Digraph(0)));
  CHECK_FALSE(isomorphic(Digraph(1), Digraph(2)));
}

TEST_CASE("labeled isomorphism distinguishes labels") {
  LabeledDigraph a(2, {{0, 1, 2}});
  LabeledDigraph b(2, {{0, 1, 3}});
  CHECK_FALSE(isomorphic(a, b));
  IsoOptions ignore;
  ignore.respect_labels = false;
  CHECK(isomorphic(a, b, ignore));
  CHECK(isomorphic(a, LabeledDigraph(2, {{1, 0, 2}})));
}

TEST_CASE("isomorphism budget exhaustion") {
  std::vector<std::pair<int, int>> k5;
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v)
      if (u != v) k5.emplace_back(u, v);
  Digraph g(5, k5);
  IsoOptions tiny;
  tiny.budget = 3;
  CHECK_THROWS_AS(isomorphic(g, g, tiny), resource_exhausted);
}

TEST_CASE("disjoint copies") {
  Digraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
  auto two = disjoint_union(tri, tri);
  CHECK(disjoint_copies_of(two, tri) == 2);
  CHECK(disjoint_copies_of(tri, tri) == 1);
  CHECK_FALSE(disjoint_copies_of(two, Digraph(3, {{0, 1}, {1, 2}})).has_value());
  CHECK_FALSE(disjoint_copies_of(Digraph(4), tri).has_value());
  // disconnected pattern falls back to a whole-graph test
  CHECK(disjoint_copies_of(Digraph(4), Digraph(2)) == 2);
  CHECK_FALSE(disjoint_copies_of(Digraph(3), Digraph(2)).has_value());
}
