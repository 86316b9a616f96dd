#include "xpg/emit.hpp"

#include <sstream>

namespace xpg {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

void check_names(int vertex_count, const std::vector<std::string>& names) {
  if (names.size() != static_cast<std::size_t>(vertex_count))
    throw std::invalid_argument("emit: one name per vertex required");
}

}  // namespace

std::string to_dot(const Digraph& g, const std::vector<std::string>& names,
                   const std::string& title) {
  check_names(g.vertex_count(), names);
  std::ostringstream os;
  os << "digraph " << quoted(title) << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << quoted(names[v]) << ";\n";
  for (auto [u, v] : g.edges()) {
    bool mutual = g.has_edge(v, u);
    if (mutual && u > v) continue;
    os << "  " << quoted(names[u]) << " -> " << quoted(names[v]);
    if (mutual) os << " [dir=both]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const LabeledDigraph& g, const std::vector<std::string>& names,
                   const std::string& title) {
  check_names(g.vertex_count(), names);
  std::ostringstream os;
  os << "digraph " << quoted(title) << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << quoted(names[v]) << ";\n";
  const auto& edges = g.unlabeled().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    int label = g.labels()[i];
    bool merge = g.unlabeled().has_edge(v, u) && g.label(v, u) == label;
    if (merge && u > v) continue;
    os << "  " << quoted(names[u]) << " -> " << quoted(names[v]) << " [";
    if (merge) os << "dir=both, ";
    os << "label=" << label << "];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json to_json_graph(const Digraph& g, const std::vector<std::string>& names,
                             bool directed) {
  check_names(g.vertex_count(), names);
  nlohmann::json doc;
  doc["directed"] = directed;
  doc["vertices"] = names;
  auto edges = nlohmann::json::array();
  if (directed) {
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
  } else {
    if (!is_symmetric(g))
      throw std::invalid_argument("undirected document requires a symmetric graph");
    for (auto [u, v] : g.edges())
      if (u < v) edges.push_back({u, v});
  }
  doc["edges"] = std::move(edges);
  return doc;
}

nlohmann::json to_json_graph(const LabeledDigraph& g, const std::vector<std::string>& names) {
  check_names(g.vertex_count(), names);
  nlohmann::json doc;
  doc["directed"] = true;
  doc["vertices"] = names;
  auto edges = nlohmann::json::array();
  const auto& es = g.unlabeled().edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    edges.push_back({es[i].first, es[i].second, g.labels()[i]});
  doc["edges"] = std::move(edges);
  return doc;
}

GraphDocument graph_from_json(const nlohmann::json& doc) {
  GraphDocument out;
  if (!doc.is_object() || !doc.contains("directed") || !doc.contains("vertices") ||
      !doc.contains("edges"))
    throw std::invalid_argument("graph document needs directed, vertices and edges fields");
  out.directed = doc.at("directed").get<bool>();
  out.vertices = doc.at("vertices").get<std::vector<std::string>>();
  const int n = static_cast<int>(out.vertices.size());
  std::vector<std::pair<int, int>> plain;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3)
      throw std::invalid_argument("graph document edges are [u, v] or [u, v, label]");
    int u = e[0].get<int>();
    int v = e[1].get<int>();
    plain.emplace_back(u, v);
    if (!out.directed) plain.emplace_back(v, u);
    if (e.size() == 3) out.labeled_edges.emplace_back(u, v, e[2].get<int>());
  }
  out.graph = Digraph(n, std::move(plain));
  return out;
}

nlohmann::json to_json(const VerificationReport& r) {
  return nlohmann::json{{"claimId", r.claim_id},
                        {"groupDescription", r.group_description},
                        {"parameters", r.parameters},
                        {"hypothesisHolds", r.hypothesis_holds},
                        {"conclusionHolds", r.conclusion_holds},
                        {"verdict", to_string(r.verdict)},
                        {"witness", r.witness}};
}

}  // namespace xpg
