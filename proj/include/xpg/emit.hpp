#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "xpg/digraph.hpp"
#include "xpg/verify.hpp"

namespace xpg {

// DOT with quoted identifiers; every vertex declared (isolated ones kept);
// mutual edge pairs collapse to one edge with dir=both.
std::string to_dot(const Digraph& g, const std::vector<std::string>& names,
                   const std::string& title);
std::string to_dot(const LabeledDigraph& g, const std::vector<std::string>& names,
                   const std::string& title);

// {"directed": flag, "vertices": [names], "edges": [[u,v]...]}. Undirected
// documents require a symmetric graph and list each pair once with u < v.
nlohmann::json to_json_graph(const Digraph& g, const std::vector<std::string>& names,
                             bool directed);
// Labeled variant: edges are [u, v, label].
nlohmann::json to_json_graph(const LabeledDigraph& g, const std::vector<std::string>& names);

struct GraphDocument {
  bool directed = true;
  std::vector<std::string> vertices;
  Digraph graph;  // symmetric closure when directed == false
  std::vector<std::tuple<int, int, int>> labeled_edges;  // nonempty iff labels present
};

GraphDocument graph_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const VerificationReport& r);

}  // namespace xpg
