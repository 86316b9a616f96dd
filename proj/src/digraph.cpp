#include "xpg/digraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace xpg {

Digraph::Digraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

Digraph::Digraph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
  for (auto [u, v] : edges_) {
    if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Digraph::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<int> Digraph::out_neighbors(int u) const {
  std::vector<int> out;
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, 0));
  for (; it != edges_.end() && it->first == u; ++it) out.push_back(it->second);
  return out;
}

std::vector<int> Digraph::in_neighbors(int v) const {
  std::vector<int> in;
  for (auto [a, b] : edges_)
    if (b == v) in.push_back(a);
  return in;
}

LabeledDigraph::LabeledDigraph(int vertex_count,
                               std::vector<std::tuple<int, int, int>> labeled_edges) {
  std::sort(labeled_edges.begin(), labeled_edges.end());
  labeled_edges.erase(std::unique(labeled_edges.begin(), labeled_edges.end()),
                      labeled_edges.end());
  std::vector<std::pair<int, int>> edges;
  edges.reserve(labeled_edges.size());
  labels_.reserve(labeled_edges.size());
  for (auto [u, v, l] : labeled_edges) {
    if (l < 2) throw std::invalid_argument("edge labels must be integers >= 2");
    if (!edges.empty() && edges.back() == std::make_pair(u, v))
      throw std::invalid_argument("conflicting labels on one edge");
    edges.emplace_back(u, v);
    labels_.push_back(l);
  }
  graph_ = Digraph(vertex_count, std::move(edges));
}

int LabeledDigraph::label(int u, int v) const {
  const auto& es = graph_.edges();
  auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(u, v));
  if (it == es.end() || *it != std::make_pair(u, v))
    throw std::invalid_argument("label: no such edge");
  return labels_[static_cast<std::size_t>(it - es.begin())];
}

bool is_partition_of(const VertexPartition& p, int vertex_count) {
  std::vector<int> hits(vertex_count, 0);
  for (const auto& cell : p.cells) {
    if (cell.empty()) return false;
    for (int v : cell) {
      if (v < 0 || v >= vertex_count) return false;
      if (++hits[v] > 1) return false;
    }
  }
  for (int h : hits)
    if (h != 1) return false;
  return true;
}

Digraph undirect(const Digraph& g) {
  auto edges = g.edges();
  edges.reserve(edges.size() * 2);
  for (auto [u, v] : g.edges()) edges.emplace_back(v, u);
  return Digraph(g.vertex_count(), std::move(edges));
}

bool is_symmetric(const Digraph& g) {
  for (auto [u, v] : g.edges())
    if (!g.has_edge(v, u)) return false;
  return true;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

VertexPartition weak_components(const Digraph& g) {
  Dsu dsu(g.vertex_count());
  for (auto [u, v] : g.edges()) dsu.unite(u, v);
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < g.vertex_count(); ++v) by_root[dsu.find(v)].push_back(v);
  VertexPartition p;
  for (auto& [root, cell] : by_root) p.cells.push_back(std::move(cell));
  std::sort(p.cells.begin(), p.cells.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return p;
}

bool is_directed_clique_union(const Digraph& g) {
  for (const auto& cell : weak_components(g).cells)
    for (int u : cell)
      for (int v : cell)
        if (u != v && !g.has_edge(u, v)) return false;
  return true;
}

bool is_clique_union(const Digraph& g) {
  if (!is_symmetric(g))
    throw std::invalid_argument("is_clique_union: input graph must be symmetric");
  return is_directed_clique_union(g);
}

bool is_equitable(const Digraph& g, const VertexPartition& p) {
  if (!is_partition_of(p, g.vertex_count()))
    throw std::invalid_argument("is_equitable: cells do not partition the vertices");
  const int n = g.vertex_count();
  const int c = static_cast<int>(p.cells.size());
  std::vector<int> cell_of(n);
  for (int i = 0; i < c; ++i)
    for (int v : p.cells[i]) cell_of[v] = i;
  std::vector<std::vector<int>> outc(n, std::vector<int>(c, 0));
  std::vector<std::vector<int>> inc(n, std::vector<int>(c, 0));
  for (auto [u, v] : g.edges()) {
    ++outc[u][cell_of[v]];
    ++inc[v][cell_of[u]];
  }
  for (const auto& cell : p.cells)
    for (int v : cell)
      if (outc[v] != outc[cell.front()] || inc[v] != inc[cell.front()]) return false;
  return true;
}

Digraph quotient(const Digraph& g, const VertexPartition& p) {
  if (!is_partition_of(p, g.vertex_count()))
    throw std::invalid_argument("quotient: cells do not partition the vertices");
  std::vector<int> cell_of(g.vertex_count());
  for (std::size_t i = 0; i < p.cells.size(); ++i)
    for (int v : p.cells[i]) cell_of[v] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (cell_of[u] != cell_of[v]) edges.emplace_back(cell_of[u], cell_of[v]);
  return Digraph(static_cast<int>(p.cells.size()), std::move(edges));
}

namespace {

int position_of(const std::vector<int>& sorted, int v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it == sorted.end() || *it != v) return -1;
  return static_cast<int>(it - sorted.begin());
}

std::vector<int> checked_vertex_subset(const Digraph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (int v : vertices)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
  return vertices;
}

}  // namespace

Digraph induced_subgraph(const Digraph& g, const std::vector<int>& vertices) {
  auto verts = checked_vertex_subset(g, vertices);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    int iu = position_of(verts, u), iv = position_of(verts, v);
    if (iu >= 0 && iv >= 0) edges.emplace_back(iu, iv);
  }
  return Digraph(static_cast<int>(verts.size()), std::move(edges));
}

LabeledDigraph induced_subgraph(const LabeledDigraph& g, const std::vector<int>& vertices) {
  auto verts = checked_vertex_subset(g.unlabeled(), vertices);
  std::vector<std::tuple<int, int, int>> edges;
  const auto& es = g.unlabeled().edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    int iu = position_of(verts, es[i].first), iv = position_of(verts, es[i].second);
    if (iu >= 0 && iv >= 0) edges.emplace_back(iu, iv, g.labels()[i]);
  }
  return LabeledDigraph(static_cast<int>(verts.size()), std::move(edges));
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  auto edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
  return Digraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

LabeledDigraph disjoint_union(const LabeledDigraph& a, const LabeledDigraph& b) {
  std::vector<std::tuple<int, int, int>> edges;
  const auto& ae = a.unlabeled().edges();
  for (std::size_t i = 0; i < ae.size(); ++i)
    edges.emplace_back(ae[i].first, ae[i].second, a.labels()[i]);
  const auto& be = b.unlabeled().edges();
  for (std::size_t i = 0; i < be.size(); ++i)
    edges.emplace_back(be[i].first + a.vertex_count(), be[i].second + a.vertex_count(),
                       b.labels()[i]);
  return LabeledDigraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

namespace {

// One weak component as a dense label matrix (0 = no edge, 1 = unlabeled edge).
struct Component {
  int n = 0;
  std::vector<int> adj;
  std::vector<std::vector<int>> vertex_sig;

  int& at(int i, int j) { return adj[i * n + j]; }
  int at(int i, int j) const { return adj[i * n + j]; }
};

// (size, edge count, sorted multiset of vertex signatures)
using Fingerprint = std::tuple<int, int, std::vector<std::vector<int>>>;

std::vector<int> signature_of(const Component& c, int v) {
  std::vector<int> outs, ins;
  for (int j = 0; j < c.n; ++j) {
    if (c.at(v, j)) outs.push_back(c.at(v, j));
    if (c.at(j, v)) ins.push_back(c.at(j, v));
  }
  std::sort(outs.begin(), outs.end());
  std::sort(ins.begin(), ins.end());
  std::vector<int> sig;
  sig.push_back(static_cast<int>(outs.size()));
  sig.insert(sig.end(), outs.begin(), outs.end());
  sig.push_back(static_cast<int>(ins.size()));
  sig.insert(sig.end(), ins.begin(), ins.end());
  return sig;
}

Fingerprint fingerprint_of(const Component& c) {
  int edges = 0;
  for (int v : c.adj)
    if (v) ++edges;
  auto sigs = c.vertex_sig;
  std::sort(sigs.begin(), sigs.end());
  return {c.n, edges, std::move(sigs)};
}

std::vector<Component> split_components(const Digraph& g, const std::vector<int>* labels) {
  const auto& edges = g.edges();
  std::vector<Component> out;
  for (const auto& cell : weak_components(g).cells) {
    Component c;
    c.n = static_cast<int>(cell.size());
    c.adj.assign(static_cast<std::size_t>(c.n) * c.n, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      int iu = position_of(cell, edges[i].first), iv = position_of(cell, edges[i].second);
      if (iu >= 0 && iv >= 0) c.at(iu, iv) = labels ? (*labels)[i] : 1;
    }
    c.vertex_sig.reserve(c.n);
    for (int v = 0; v < c.n; ++v) c.vertex_sig.push_back(signature_of(c, v));
    out.push_back(std::move(c));
  }
  return out;
}

// BFS order over the undirected view; components are weakly connected, so
// every vertex after the first touches an earlier one.
std::vector<int> search_order(const Component& c) {
  std::vector<int> order;
  std::vector<bool> seen(c.n, false);
  order.push_back(0);
  seen[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int j = 0; j < c.n; ++j)
      if (!seen[j] && (c.at(v, j) || c.at(j, v))) {
        seen[j] = true;
        order.push_back(j);
      }
  }
  return order;
}

bool component_isomorphic(const Component& a, const Component& b, long long& budget) {
  if (a.n != b.n) return false;
  auto order = search_order(a);
  std::vector<int> image(a.n, -1);
  std::vector<bool> used(b.n, false);

  // candidate lists per position, filtered by vertex signature
  std::vector<std::vector<int>> cands(a.n);
  for (int pos = 0; pos < a.n; ++pos) {
    int v = order[pos];
    for (int u = 0; u < b.n; ++u)
      if (a.vertex_sig[v] == b.vertex_sig[u]) cands[pos].push_back(u);
    if (cands[pos].empty()) return false;
  }

  std::vector<int> choice(a.n, 0);
  int pos = 0;
  while (pos >= 0) {
    if (pos == a.n) return true;
    int v = order[pos];
    bool advanced = false;
    while (choice[pos] < static_cast<int>(cands[pos].size())) {
      int u = cands[pos][choice[pos]++];
      if (used[u]) continue;
      if (--budget < 0)
        throw resource_exhausted("isomorphism search exceeded its work budget");
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q) {
        int w = order[q], x = image[w];
        ok = a.at(v, w) == b.at(u, x) && a.at(w, v) == b.at(x, u);
      }
      if (ok) {
        image[v] = u;
        used[u] = true;
        ++pos;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      choice[pos] = 0;
      --pos;
      if (pos >= 0) {
        used[image[order[pos]]] = false;
        image[order[pos]] = -1;
      }
    }
  }
  return false;
}

bool isomorphic_impl(const Digraph& a, const std::vector<int>* alab, const Digraph& b,
                     const std::vector<int>* blab, long long budget) {
  if (a.vertex_count() != b.vertex_count() || a.edges().size() != b.edges().size())
    return false;
  auto ac = split_components(a, alab);
  auto bc = split_components(b, blab);
  if (ac.size() != bc.size()) return false;

  std::map<Fingerprint, std::pair<std::vector<int>, std::vector<int>>> classes;
  for (std::size_t i = 0; i < ac.size(); ++i) classes[fingerprint_of(ac[i])].first.push_back(i);
  for (std::size_t i = 0; i < bc.size(); ++i) classes[fingerprint_of(bc[i])].second.push_back(i);

  for (auto& [fp, group] : classes) {
    auto& [as, bs] = group;
    if (as.size() != bs.size()) return false;
    // iso is an equivalence, so greedy matching inside a fingerprint class works
    std::vector<bool> taken(bs.size(), false);
    for (int ai : as) {
      bool matched = false;
      for (std::size_t j = 0; j < bs.size() && !matched; ++j) {
        if (taken[j]) continue;
        if (component_isomorphic(ac[ai], bc[bs[j]], budget)) {
          taken[j] = true;
          matched = true;
        }
      }
      if (!matched) return false;
    }
  }
  return true;
}

}  // namespace

bool isomorphic(const Digraph& a, const Digraph& b, const IsoOptions& opts) {
  return isomorphic_impl(a, nullptr, b, nullptr, opts.budget);
}

bool isomorphic(const LabeledDigraph& a, const LabeledDigraph& b, const IsoOptions& opts) {
  if (!opts.respect_labels) return isomorphic(a.unlabeled(), b.unlabeled(), opts);
  return isomorphic_impl(a.unlabeled(), &a.labels(), b.unlabeled(), &b.labels(), opts.budget);
}

namespace {

template <typename G>
G induced_on(const G& g, const std::vector<int>& verts) {
  return induced_subgraph(g, verts);
}

template <typename G>
std::optional<int> copies_impl(const G& g, const G& h, const IsoOptions& opts) {
  const Digraph& gu = [&]() -> const Digraph& {
    if constexpr (std::is_same_v<G, Digraph>)
      return g;
    else
      return g.unlabeled();
  }();
  const Digraph& hu = [&]() -> const Digraph& {
    if constexpr (std::is_same_v<G, Digraph>)
      return h;
    else
      return h.unlabeled();
  }();
  if (hu.vertex_count() == 0 || gu.vertex_count() == 0) return std::nullopt;
  auto hcells = weak_components(hu).cells;
  if (hcells.size() == 1) {
    auto cells = weak_components(gu).cells;
    for (const auto& cell : cells) {
      if (static_cast<int>(cell.size()) != hu.vertex_count()) return std::nullopt;
      if (!isomorphic(induced_on(g, cell), h, opts)) return std::nullopt;
    }
    return static_cast<int>(cells.size());
  }
  // disconnected pattern: single whole-graph test at the exact vertex ratio
  if (gu.vertex_count() % hu.vertex_count() != 0) return std::nullopt;
  int k = gu.vertex_count() / hu.vertex_count();
  if (gu.edges().size() != hu.edges().size() * static_cast<std::size_t>(k)) return std::nullopt;
  G pile = h;
  for (int i = 1; i < k; ++i) pile = disjoint_union(pile, h);
  if (!isomorphic(g, pile, opts)) return std::nullopt;
  return k;
}

}  // namespace

std::optional<int> disjoint_copies_of(const Digraph& g, const Digraph& h,
                                      const IsoOptions& opts) {
  return copies_impl(g, h, opts);
}

std::optional<int> disjoint_copies_of(const LabeledDigraph& g, const LabeledDigraph& h,
                                      const IsoOptions& opts) {
  return copies_impl(g, h, opts);
}

}  // namespace xpg
