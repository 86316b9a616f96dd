#include "xpg/power_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace xpg {

Digraph directed_power_graph(const FiniteGroup& g, const ExclusionSet& x) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < g.order(); ++a) {
    const int o = element_order(g, a);
    int pw = a;  // a^k, starting at k = 1
    for (int k = 1; k <= o; ++k) {
      if (pw != a && !x.divides_any(std::gcd(k, o))) edges.emplace_back(a, pw);
      pw = g.mul(pw, a);
    }
  }
  return Digraph(g.order(), std::move(edges));
}

Digraph undirected_power_graph(const FiniteGroup& g, const ExclusionSet& x) {
  return undirect(directed_power_graph(g, x));
}

VertexPartition generator_partition(const FiniteGroup& g) {
  VertexPartition p;
  for (const auto& sub : all_cyclic_subgroups(g)) p.cells.push_back(sub.generator_set);
  return p;
}

LabeledDigraph quotient_power_graph(const FiniteGroup& g) {
  auto subs = all_cyclic_subgroups(g);
  std::map<std::vector<int>, int> index_of;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    auto key = subs[i].elements;
    std::sort(key.begin(), key.end());
    index_of[std::move(key)] = static_cast<int>(i);
  }
  std::vector<std::tuple<int, int, int>> edges;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (int d : divisors(subs[i].order)) {
      if (d < 2) continue;
      std::set<int> powers;
      for (int h : subs[i].elements) powers.insert(power(g, h, d));
      std::vector<int> key(powers.begin(), powers.end());
      edges.emplace_back(static_cast<int>(i), index_of.at(key), d);
    }
  }
  return LabeledDigraph(static_cast<int>(subs.size()), std::move(edges));
}

LabeledDigraph excluded_quotient(const LabeledDigraph& q, const ExclusionSet& x) {
  std::vector<std::tuple<int, int, int>> kept;
  const auto& es = q.unlabeled().edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    if (!x.divides_any(q.labels()[i]))
      kept.emplace_back(es[i].first, es[i].second, q.labels()[i]);
  return LabeledDigraph(q.vertex_count(), std::move(kept));
}

std::vector<std::string> subgroup_names(const FiniteGroup& g) {
  std::vector<std::string> names;
  for (const auto& sub : all_cyclic_subgroups(g))
    names.push_back("<" + g.name(sub.generator_set.front()) + ">");
  return names;
}

}  // namespace xpg
