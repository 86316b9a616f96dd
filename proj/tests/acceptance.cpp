// Acceptance suite: every check is an exact combinatorial fact, verified
// end to end against independent computation paths. One line per criterion.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_helpers.hpp"
#include "xpg/emit.hpp"
#include "xpg/expr.hpp"
#include "xpg/power_graph.hpp"
#include "xpg/verify.hpp"

using namespace xpg;

namespace {

const std::string kData = XPG_TEST_DATA_DIR;

struct Checker {
  std::string detail;
  bool ok = true;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<std::vector<int>> canonical(std::vector<std::vector<int>> cells) {
  for (auto& c : cells) std::sort(c.begin(), c.end());
  std::sort(cells.begin(), cells.end());
  return cells;
}

// 1. Element-order census of A5, its generator partition, and a surviving
//    even-exponent edge in the 2-excluded graph.
void criterion_a5_structure(Checker& c) {
  auto a5 = make_alternating(5);
  std::map<int, int> census;
  for (int g = 0; g < a5.order(); ++g) ++census[element_order(a5, g)];
  c.require(census[2] == 15 && census[3] == 20 && census[5] == 24,
            "element order census is off");
  std::map<std::size_t, int> cell_sizes;
  for (const auto& cell : generator_partition(a5).cells) ++cell_sizes[cell.size()];
  c.require(cell_sizes[2] == 10 && cell_sizes[4] == 6, "generator cells are off");
  int five_cycle = a5.element_by_name("(abcde)").value();
  auto graph = directed_power_graph(a5, ExclusionSet{2});
  c.require(graph.has_edge(five_cycle, power(a5, five_cycle, 2)),
            "missing edge (abcde) -> (abcde)^2");
}

// 2. The divisor test agrees with the arithmetic-progression scan.
void criterion_progression_oracle(Checker& c) {
  auto subsets = testing::subsets_of({2, 3, 5, 7});
  for (int n = 1; n <= 100; ++n)
    for (int m = 1; m <= n; ++m)
      for (const auto& x : subsets)
        c.require(admissible(m, n, x) == testing::admissible_scan(m, n, x),
                  "admissible(" + std::to_string(m) + ", " + std::to_string(n) + ", " +
                      x.to_string() + ") disagrees with the scan");
}

// 3. The gcd edge criterion agrees with the naive exponent scan on the
//    whole catalog.
void criterion_edge_oracle(Checker& c) {
  auto subsets = testing::subsets_of({2, 3, 5});
  for (const auto& entry : make_catalog({60}))
    for (const auto& x : subsets)
      c.require(directed_power_graph(entry.group, x) ==
                    testing::naive_power_graph(entry.group, x),
                "edge sets disagree for " + entry.description + " with X=" + x.to_string());
}

// 4. Exclusion laws: no-divisor identity, all-primes collapse, and the
//    intersection rule; the fully excluded A5 graph has exactly 92 edges.
void criterion_exclusion_laws(Checker& c) {
  auto subsets = testing::subsets_of({2, 3, 5});
  int applicable_identity = 0, applicable_collapse = 0;
  for (const auto& entry : make_catalog({60})) {
    for (const auto& x : subsets) {
      auto no_div = check_no_divisor(entry.description, entry.group, x);
      if (no_div.verdict == Verdict::kPass) ++applicable_identity;
      c.require(no_div.verdict != Verdict::kCounterexample,
                "no-divisor identity fails: " + to_line(no_div));
      auto collapse = check_all_primes(entry.description, entry.group, x);
      if (collapse.verdict == Verdict::kPass) ++applicable_collapse;
      c.require(collapse.verdict != Verdict::kCounterexample,
                "all-primes collapse fails: " + to_line(collapse));
      for (const auto& y : subsets) {
        auto meet = check_intersection(entry.description, entry.group, x, y);
        c.require(meet.verdict == Verdict::kPass,
                  "intersection law fails: " + to_line(meet));
      }
    }
  }
  c.require(applicable_identity > 0 && applicable_collapse > 0,
            "exclusion law sweeps never applied");
  auto a5 = make_alternating(5);
  auto fully = directed_power_graph(a5, ExclusionSet{2, 3, 5});
  c.require(fully.edges().size() == 92,  // 10 * 2 + 6 * 12
            "fully excluded A5 has " + std::to_string(fully.edges().size()) + " edges");
}

// 5. The excluded quotients of Z12 decompose into copies of the quotients
//    of Z4 and Z3.
void criterion_z12_copies(Checker& c) {
  auto q12 = quotient_power_graph(make_cyclic(12));
  auto copies4 = disjoint_copies_of(excluded_quotient(q12, ExclusionSet{3}).unlabeled(),
                                    quotient_power_graph(make_cyclic(4)).unlabeled());
  auto copies3 = disjoint_copies_of(excluded_quotient(q12, ExclusionSet{2}).unlabeled(),
                                    quotient_power_graph(make_cyclic(3)).unlabeled());
  c.require(copies4 == 2, "Z12 with 3 excluded is not two copies of the Z4 quotient");
  c.require(copies3 == 3, "Z12 with 2 excluded is not three copies of the Z3 quotient");
}

// 6. Copy counts for every coprime catalog pair.
void criterion_coprime_sweep(Checker& c) {
  auto catalog = make_catalog({60});
  int applicable = 0;
  for (const auto& he : catalog)
    for (const auto& ke : catalog) {
      long long prod = static_cast<long long>(he.group.order()) * ke.group.order();
      if (prod > 60 || std::gcd(he.group.order(), ke.group.order()) != 1) continue;
      auto r = check_direct_product_quotient(he.description, he.group, ke.description,
                                             ke.group);
      if (r.verdict == Verdict::kPass) ++applicable;
      c.require(r.verdict == Verdict::kPass, "copy count fails: " + to_line(r));
    }
  c.require(applicable > 100, "coprime sweep unexpectedly small");
}

// 7. Out-neighbor formulas in the generalized dihedral group of order 18,
//    and its excluded quotient against the frozen picture.
void criterion_inversion_product(Checker& c) {
  auto ast = parse_group("sdp(Z3 x Z3, Z2, inv)");
  auto e9 = make_direct_product(make_cyclic(3), make_cyclic(3));
  auto sp = make_semidirect(e9, make_cyclic(2), inversion_action(e9, 2));
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 2; ++b) {
      auto r = check_inversion_sdp("sdp(Z3 x Z3, Z2, inv)", sp, a, b);
      c.require(r.verdict == Verdict::kPass, "out-neighbor formula fails: " + to_line(r));
    }
  auto q = excluded_quotient(quotient_power_graph(sp.group), ExclusionSet{3});
  int isolated = 0;
  for (int v = 0; v < q.vertex_count(); ++v)
    if (q.unlabeled().out_neighbors(v).empty() && q.unlabeled().in_neighbors(v).empty())
      ++isolated;
  c.require(isolated == 4, "quotient should isolate the four rotation subgroups");
  c.require(q.unlabeled().in_neighbors(0).size() == 9,
            "quotient should send all nine involution subgroups to the trivial one");
  auto dot = to_dot(q, subgroup_names(sp.group), render(ast) + " | quotient | exclude {3}");
  std::ifstream golden(kData + "/golden/z3z3_inv_quotient_exclude3.dot");
  std::stringstream buf;
  buf << golden.rdbuf();
  c.require(golden.good() && dot == buf.str(), "emitted quotient differs from the golden file");
}

// 8. Weak components of the 3-excluded graph of Z7 by Z3 with multiplier 2:
//    seven mutual pairs {(a,1),(3a,2)} plus the copy of Z7.
void criterion_frobenius_components(Checker& c) {
  auto sp = make_semidirect(make_cyclic(7), make_cyclic(3), mult_action(7, 2, 3));
  auto graph = directed_power_graph(sp.group, ExclusionSet{3});
  std::vector<std::vector<int>> expected;
  std::vector<int> base;
  for (int a = 0; a < 7; ++a) base.push_back(sp.pair_index(a, 0));
  expected.push_back(base);
  for (int a = 0; a < 7; ++a) {
    std::vector<int> cell = {sp.pair_index(a, 1), sp.pair_index(3 * a % 7, 2)};
    expected.push_back(cell);
  }
  c.require(canonical(weak_components(graph).cells) == canonical(expected),
            "component set differs from the seven pairs plus the base copy");
  auto r = check_sdp_components("sdp(Z7, Z3, mult=2)", sp);
  c.require(r.verdict == Verdict::kPass, "component checker fails: " + to_line(r));
}

// 9. Clique-union classifications across the catalog, with the dihedral,
//    quaternion and elementary-abelian anchors.
void criterion_classifications(Checker& c) {
  RunOptions opt;  // defaults: order 60, primes {2, 3, 5}
  auto result = run_catalog(opt);
  c.require(result.summary.counterexample == 0,
            std::to_string(result.summary.counterexample) + " counterexamples in the catalog run");
  c.require(result.summary.resource_exhausted == 0, "isomorphism budget exhausted");

  auto anchored = [&](const std::string& desc, const std::string& claim,
                      const std::string& params, bool left, bool right) {
    for (const auto& r : result.reports)
      if (r.group_description == desc && r.claim_id == claim && r.parameters == params)
        return r.verdict == Verdict::kPass && r.hypothesis_holds == left &&
               r.conclusion_holds == right;
    return false;
  };
  c.require(anchored("D18", "undirected-clique-classification", "p=2", true, true),
            "D18 at p=2 should be a clique union");
  c.require(anchored("D18", "undirected-clique-classification", "p=3", false, false),
            "D18 at p=3 should fail on both sides");
  c.require(anchored("Q8", "undirected-clique-classification", "p=2", true, true),
            "Q8 at p=2 should be a clique union");
  c.require(anchored("Z3 x Z3", "undirected-clique-classification", "p=2", false, false),
            "Z3 x Z3 at p=2 should fail on both sides");
  c.require(anchored("Q8", "directed-clique-classification", "p=2", true, true),
            "Q8 at p=2 should be a directed clique union");
}

// 10. Structural properties on every catalog group: generator cliques, the
//     equitable generator partition, quotient coherence, and subgroup
//     restriction.
void criterion_structural_properties(Checker& c) {
  auto subsets = testing::subsets_of({2, 3, 5});
  for (const auto& entry : make_catalog({60})) {
    const auto& g = entry.group;
    auto genpart = generator_partition(g);
    auto labeled = quotient_power_graph(g);
    auto subs = all_cyclic_subgroups(g);
    for (const auto& x : subsets) {
      auto dx = directed_power_graph(g, x);
      for (const auto& cell : genpart.cells)
        for (int u : cell)
          for (int v : cell)
            if (u != v)
              c.require(dx.has_edge(u, v), "generator cell is not a clique in " +
                                               entry.description + " X=" + x.to_string());
      c.require(is_equitable(dx, genpart), "generator partition not equitable for " +
                                               entry.description + " X=" + x.to_string());
      c.require(quotient(dx, genpart) == excluded_quotient(labeled, x).unlabeled(),
                "quotient coherence fails for " + entry.description + " X=" + x.to_string());
      for (const auto& sub : subs) {
        auto elems = sub.elements;
        std::sort(elems.begin(), elems.end());
        c.require(induced_subgraph(dx, elems) ==
                      directed_power_graph(induced_subgroup(g, elems), x),
                  "subgroup restriction fails for " + entry.description +
                      " X=" + x.to_string());
      }
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    void (*fn)(Checker&);
  };
  const std::vector<Criterion> criteria = {
      {"A5 structure and the even-exponent edge", criterion_a5_structure},
      {"progression-scan oracle equivalence", criterion_progression_oracle},
      {"exponent-scan edge oracle equivalence", criterion_edge_oracle},
      {"exclusion laws and the 92-edge count", criterion_exclusion_laws},
      {"Z12 quotient copy counts", criterion_z12_copies},
      {"coprime product copy-count sweep", criterion_coprime_sweep},
      {"inversion product out-neighbors and frozen quotient", criterion_inversion_product},
      {"multiplier-2 component decomposition", criterion_frobenius_components},
      {"clique-union classifications over the catalog", criterion_classifications},
      {"structural property sweeps", criterion_structural_properties},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    try {
      criteria[i].fn(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].name;
    if (!c.ok) {
      std::cout << " -- " << c.detail;
      ++failed;
    }
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
