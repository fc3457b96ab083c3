#include "bassinv/resgraph.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "bassinv/errors.hpp"
#include "bassinv/linalg.hpp"
#include "json.hpp"

namespace bassinv {

ResolutionGraph::ResolutionGraph(std::vector<GraphVertex> vertices,
                                 std::vector<std::pair<std::int64_t, std::int64_t>> edges_by_id)
    : vertices_(std::move(vertices)) {
  std::map<std::int64_t, std::size_t> position;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const GraphVertex& v = vertices_[i];
    if (!position.emplace(v.id, i).second) throw GraphError("duplicate vertex id " + std::to_string(v.id));
    if (v.genus < 0) throw GraphError("vertex " + std::to_string(v.id) + " has negative genus");
    if (v.self_intersection >= 0) {
      throw GraphError("vertex " + std::to_string(v.id) + " has non-negative self-intersection " +
                       std::to_string(v.self_intersection));
    }
  }
  for (const auto& [a, b] : edges_by_id) {
    const auto ia = position.find(a);
    const auto ib = position.find(b);
    if (ia == position.end() || ib == position.end()) {
      throw GraphError("edge [" + std::to_string(a) + "," + std::to_string(b) + "] has a dangling endpoint");
    }
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
    edges_.emplace_back(std::min(ia->second, ib->second), std::max(ia->second, ib->second));
  }
}

ResolutionGraph parse_graph(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw GraphError(std::string("malformed graph document: ") + e.what());
  }
  auto as_int = [](const json& value, const char* what) {
    if (!value.is_number_integer()) throw GraphError(std::string("expected integer for ") + what);
    return value.get<std::int64_t>();
  };
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw GraphError("graph document needs a \"vertices\" array");
  }
  std::vector<GraphVertex> vertices;
  for (const json& v : doc["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v.contains("genus") || !v.contains("self_intersection")) {
      throw GraphError("vertex entries need id, genus and self_intersection");
    }
    vertices.push_back({as_int(v["id"], "id"), as_int(v["genus"], "genus"),
                        as_int(v["self_intersection"], "self_intersection")});
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw GraphError("\"edges\" must be an array");
    for (const json& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) throw GraphError("edges must be [id,id] pairs");
      edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
    }
  }
  return ResolutionGraph(std::move(vertices), std::move(edges));
}

ResolutionGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph(text.str());
}

std::int64_t genus_sum(const ResolutionGraph& graph) {
  std::int64_t total = 0;
  for (const auto& v : graph.vertices()) total += v.genus;
  return total;
}

std::int64_t loop_count(const ResolutionGraph& graph) {
  const std::size_t n = graph.vertices().size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::int64_t components = static_cast<std::int64_t>(n);
  for (const auto& [a, b] : graph.edges()) {
    const std::size_t ra = find(a);
    const std::size_t rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return static_cast<std::int64_t>(graph.edges().size()) - static_cast<std::int64_t>(n) + components;
}

Eigen::MatrixXi intersection_matrix(const ResolutionGraph& graph) {
  const auto n = static_cast<Eigen::Index>(graph.vertices().size());
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = static_cast<int>(graph.vertices()[static_cast<std::size_t>(i)].self_intersection);
  }
  for (const auto& [a, b] : graph.edges()) {
    const auto i = static_cast<Eigen::Index>(a);
    const auto j = static_cast<Eigen::Index>(b);
    ++m(i, j);
    ++m(j, i);
  }
  return m;
}

bool is_negative_definite(const Eigen::MatrixXi& m) {
  if (m.rows() != m.cols()) throw GraphError("intersection matrix must be square");
  if (m != m.transpose()) throw GraphError("intersection matrix must be symmetric");
  const Matrix<Rational> exact = m.cast<Rational>();
  const std::vector<Rational> minors = leading_principal_minors(exact);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    // (-1)^(k+1) det(M_(k+1)) > 0
    const bool odd = (k % 2) == 0;
    if (odd ? minors[k] >= 0 : minors[k] <= 0) return false;
  }
  return true;
}

GraphInvariants graph_invariants(const ResolutionGraph& graph) {
  return {genus_sum(graph), loop_count(graph), is_negative_definite(intersection_matrix(graph))};
}

}  // namespace bassinv
