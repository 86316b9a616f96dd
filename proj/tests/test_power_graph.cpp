#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "test_helpers.hpp"
#include "xpg/catalog.hpp"
#include "xpg/power_graph.hpp"

using namespace xpg;

namespace {

std::vector<std::vector<int>> canonical(std::vector<std::vector<int>> cells) {
  for (auto& c : cells) std::sort(c.begin(), c.end());
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace

TEST_CASE("directed power graph by the divisor criterion") {
  auto z6 = make_cyclic(6);
  auto g = directed_power_graph(z6, ExclusionSet{2});
  CHECK(g.out_neighbors(1) == std::vector<int>{3, 5});
  CHECK(g.out_neighbors(3).empty());
  CHECK_FALSE(is_directed_clique_union(g));  // 1 -> 3 with no return edge

  auto full = directed_power_graph(z6, ExclusionSet{});
  CHECK(full.out_neighbors(0).empty());

  auto a5 = make_alternating(5);
  int c5 = a5.element_by_name("(abcde)").value();
  auto a5x2 = directed_power_graph(a5, ExclusionSet{2});
  CHECK(a5x2.has_edge(c5, power(a5, c5, 2)));  // realized by the exponent 7 = 2 + 5
  CHECK(a5x2.has_edge(c5, power(a5, c5, 3)));
  CHECK(a5x2.has_edge(c5, power(a5, c5, 4)));
}

TEST_CASE("undirected power graphs") {
  auto pi = undirected_power_graph(make_cyclic(6), ExclusionSet{2});
  CHECK(canonical(weak_components(pi).cells) ==
        std::vector<std::vector<int>>{{0, 2, 4}, {1, 3, 5}});
  CHECK(is_clique_union(pi));

  // the undirected power graph of a cyclic group of prime power order is complete
  for (int n : {8, 9, 5, 25}) {
    auto g = undirected_power_graph(make_cyclic(n), ExclusionSet{});
    CHECK(static_cast<int>(g.edges().size()) == n * (n - 1));
  }

  // reflections are isolated when 2 is excluded: nine singletons plus the
  // component of rotations
  auto d18 = make_dihedral(9);
  auto iso2 = undirected_power_graph(d18, ExclusionSet{2});
  std::map<std::size_t, int> comp_sizes;
  for (const auto& cell : weak_components(iso2).cells) ++comp_sizes[cell.size()];
  CHECK(comp_sizes[1] == 9);
  CHECK(comp_sizes[9] == 1);
  CHECK(is_clique_union(iso2));

  auto star = undirected_power_graph(d18, ExclusionSet{3});
  std::vector<int> reflections;
  for (int g = 0; g < 18; ++g)
    if (element_order(d18, g) == 2) reflections.push_back(g);
  REQUIRE(reflections.size() == 9);
  for (int r : reflections) {
    CHECK(star.has_edge(d18.identity(), r));
    CHECK(star.has_edge(r, d18.identity()));
    for (int r2 : reflections)
      if (r2 != r) CHECK_FALSE(star.has_edge(r, r2));
  }
}

TEST_CASE("weak components of an excluded power graph of a semidirect product") {
  auto sp = make_semidirect(make_cyclic(7), make_cyclic(3), mult_action(7, 2, 3));
  auto g = directed_power_graph(sp.group, ExclusionSet{3});
  auto comps = weak_components(g);
  std::vector<int> pair = {sp.pair_index(1, 1), sp.pair_index(3, 2)};
  std::sort(pair.begin(), pair.end());
  bool found = false;
  for (const auto& cell : comps.cells)
    if (cell == pair) found = true;
  CHECK(found);
}

TEST_CASE("generator partition") {
  auto cells = generator_partition(make_cyclic(12)).cells;
  CHECK(cells == std::vector<std::vector<int>>{
                     {0}, {6}, {4, 8}, {3, 9}, {2, 10}, {1, 5, 7, 11}});
  auto a5_cells = generator_partition(make_alternating(5)).cells;
  REQUIRE(a5_cells.size() == 32);
  std::map<std::size_t, int> size_count;
  for (const auto& c : a5_cells) ++size_count[c.size()];
  CHECK(size_count[1] == 16);  // identity and the 15 involutions
  CHECK(size_count[2] == 10);
  CHECK(size_count[4] == 6);
  CHECK(generator_partition(make_cyclic(1)).cells ==
        std::vector<std::vector<int>>{{0}});
}

TEST_CASE("quotient power graph of Z4") {
  auto q = quotient_power_graph(make_cyclic(4));
  // vertices in subgroup order: <0>, <2>, <1>
  REQUIRE(q.vertex_count() == 3);
  CHECK(q.label(2, 1) == 2);
  CHECK(q.label(2, 0) == 4);
  CHECK(q.label(1, 0) == 2);
  CHECK(q.unlabeled().edges().size() == 3);
  CHECK(quotient_power_graph(make_cyclic(1)).vertex_count() == 1);
  CHECK(quotient_power_graph(make_cyclic(1)).unlabeled().edges().empty());
}

TEST_CASE("quotient power graph of Z12") {
  auto q = quotient_power_graph(make_cyclic(12));
  REQUIRE(q.vertex_count() == 6);  // <0>, <6>, <4>, <3>, <2>, <1>
  std::multiset<int> labels_from_top;
  for (auto [u, v] : q.unlabeled().edges())
    if (u == 5) labels_from_top.insert(q.label(u, v));
  CHECK(labels_from_top == std::multiset<int>{2, 3, 4, 6, 12});
}

TEST_CASE("excluded quotient of Z12 matches the two-panel picture") {
  auto q = quotient_power_graph(make_cyclic(12));
  auto q3 = excluded_quotient(q, ExclusionSet{3});
  CHECK(q3.vertex_count() == 6);  // isolated vertices persist
  CHECK(canonical(weak_components(q3.unlabeled()).cells) ==
        std::vector<std::vector<int>>{{0, 1, 3}, {2, 4, 5}});

  auto q2 = excluded_quotient(q, ExclusionSet{2});
  CHECK(q2.unlabeled().edges() ==
        std::vector<std::pair<int, int>>{{2, 0}, {4, 1}, {5, 3}});
  for (int l : q2.labels()) CHECK(l == 3);

  CHECK(excluded_quotient(q, ExclusionSet{}) == q);
}

TEST_CASE("the excluded quotient of Z12 is made of copies of smaller quotients") {
  auto q12 = quotient_power_graph(make_cyclic(12));
  auto q4 = quotient_power_graph(make_cyclic(4));
  auto q3 = quotient_power_graph(make_cyclic(3));
  CHECK(disjoint_copies_of(excluded_quotient(q12, ExclusionSet{3}).unlabeled(),
                           q4.unlabeled()) == 2);
  CHECK(disjoint_copies_of(excluded_quotient(q12, ExclusionSet{2}).unlabeled(),
                           q3.unlabeled()) == 3);
  // the same copies exist label-for-label
  CHECK(disjoint_copies_of(excluded_quotient(q12, ExclusionSet{3}), q4) == 2);
  auto two_q4 = disjoint_union(q4.unlabeled(), q4.unlabeled());
  CHECK(isomorphic(excluded_quotient(q12, ExclusionSet{3}).unlabeled(), two_q4));
}

TEST_CASE("properties across the catalog") {
  auto subsets = testing::subsets_of({2, 3});
  for (const auto& entry : make_catalog({24})) {
    const auto& g = entry.group;
    auto genpart = generator_partition(g);
    auto quotient_labeled = quotient_power_graph(g);
    auto full = directed_power_graph(g, ExclusionSet{});

    // the full graph joins each element to its distinct powers
    for (int a = 0; a < g.order(); ++a) {
      std::set<int> powers;
      int o = element_order(g, a);
      for (int k = 2; k <= o; ++k) {
        int h = power(g, a, k);
        if (h != a) powers.insert(h);
      }
      auto outs = full.out_neighbors(a);
      CHECK(std::set<int>(outs.begin(), outs.end()) == powers);
    }

    for (const auto& x : subsets) {
      auto dx = directed_power_graph(g, x);

      // oracle equivalence for the divisor criterion
      CHECK(dx == testing::naive_power_graph(g, x));

      // generator cells are directed cliques
      for (const auto& cell : genpart.cells)
        for (int u : cell)
          for (int v : cell)
            if (u != v) CHECK(dx.has_edge(u, v));

      // the generator partition is equitable
      CHECK(is_equitable(dx, genpart));

      // graph quotient agrees with label deletion
      CHECK(quotient(dx, genpart) == excluded_quotient(quotient_labeled, x).unlabeled());

      // restriction to a cyclic subgroup is intrinsic
      for (const auto& sub : all_cyclic_subgroups(g)) {
        auto elems = sub.elements;
        std::sort(elems.begin(), elems.end());
        CHECK(induced_subgraph(dx, elems) ==
              directed_power_graph(induced_subgroup(g, elems), x));
      }

      // exclusion by a union intersects edge sets
      for (const auto& y : subsets) {
        auto dy = directed_power_graph(g, y);
        auto dxy = directed_power_graph(g, x.union_with(y));
        std::vector<std::pair<int, int>> meet;
        std::set_intersection(dx.edges().begin(), dx.edges().end(), dy.edges().begin(),
                              dy.edges().end(), std::back_inserter(meet));
        CHECK(dxy.edges() == meet);
      }
    }
  }
}

TEST_CASE("quotient graph vertices carry subgroup names") {
  auto names = subgroup_names(make_cyclic(12));
  CHECK(names == std::vector<std::string>{"<0>", "<6>", "<4>", "<3>", "<2>", "<1>"});
}
