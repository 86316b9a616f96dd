#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace xpg {

// Thrown when the isomorphism search exceeds its work budget.
class resource_exhausted : public std::runtime_error {
 public:
  explicit resource_exhausted(const std::string& what) : std::runtime_error(what) {}
};

// Loop-free digraph on vertices 0..n-1 with a sorted, duplicate-free edge set.
// A simple graph is represented as a symmetric digraph (see undirect).
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int vertex_count);
  Digraph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  std::vector<int> out_neighbors(int u) const;
  std::vector<int> in_neighbors(int v) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

// Digraph whose every edge carries one integer label >= 2.
class LabeledDigraph {
 public:
  LabeledDigraph() = default;
  LabeledDigraph(int vertex_count, std::vector<std::tuple<int, int, int>> labeled_edges);

  int vertex_count() const { return graph_.vertex_count(); }
  const Digraph& unlabeled() const { return graph_; }
  const std::vector<int>& labels() const { return labels_; }  // aligned with unlabeled().edges()
  int label(int u, int v) const;

  friend bool operator==(const LabeledDigraph&, const LabeledDigraph&) = default;

 private:
  Digraph graph_;
  std::vector<int> labels_;
};

// Disjoint nonempty cells covering 0..n-1.
struct VertexPartition {
  std::vector<std::vector<int>> cells;
};

bool is_partition_of(const VertexPartition& p, int vertex_count);

// Symmetric closure: both directions present whenever either was.
Digraph undirect(const Digraph& g);
bool is_symmetric(const Digraph& g);

// Cells ordered by least vertex, vertices ascending within a cell.
VertexPartition weak_components(const Digraph& g);

// Every weak component is a directed clique.
bool is_directed_clique_union(const Digraph& g);

// Every weak component is complete; requires symmetric input.
bool is_clique_union(const Digraph& g);

// For every ordered cell pair (A, B), all vertices of A have the same number
// of out-neighbors in B and the same number of in-neighbors in B.
bool is_equitable(const Digraph& g, const VertexPartition& p);

// Cell-level digraph; loops dropped.
Digraph quotient(const Digraph& g, const VertexPartition& p);

Digraph induced_subgraph(const Digraph& g, const std::vector<int>& vertices);
LabeledDigraph induced_subgraph(const LabeledDigraph& g, const std::vector<int>& vertices);
Digraph disjoint_union(const Digraph& a, const Digraph& b);
LabeledDigraph disjoint_union(const LabeledDigraph& a, const LabeledDigraph& b);

struct IsoOptions {
  bool respect_labels = true;
  long long budget = 10'000'000;  // backtracking steps before resource_exhausted
};

// Exact backtracking over weak components with degree/label-class pruning.
bool isomorphic(const Digraph& a, const Digraph& b, const IsoOptions& opts = {});
bool isomorphic(const LabeledDigraph& a, const LabeledDigraph& b, const IsoOptions& opts = {});

// k such that g is k disjoint copies of h, when such k exists (k >= 1).
std::optional<int> disjoint_copies_of(const Digraph& g, const Digraph& h,
                                      const IsoOptions& opts = {});
std::optional<int> disjoint_copies_of(const LabeledDigraph& g, const LabeledDigraph& h,
                                      const IsoOptions& opts = {});

}  // namespace xpg
