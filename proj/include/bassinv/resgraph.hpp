#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace bassinv {

struct GraphVertex {
  std::int64_t id = 0;
  std::int64_t genus = 0;
  std::int64_t self_intersection = -1;
};

/// Dual graph of the exceptional divisor of a good resolution. Edges refer
/// to vertex positions and may repeat (two components meeting twice).
class ResolutionGraph {
 public:
  ResolutionGraph() = default;

  /// Validates: distinct ids, genus >= 0, self-intersection < 0, edge
  /// endpoints exist, no self-loops. Throws GraphError.
  ResolutionGraph(std::vector<GraphVertex> vertices, std::vector<std::pair<std::int64_t, std::int64_t>> edges_by_id);

  const std::vector<GraphVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }

 private:
  std::vector<GraphVertex> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Reads the JSON graph document
/// {"vertices":[{"id":..,"genus":..,"self_intersection":..}], "edges":[[id,id],..]}.
/// Unknown top-level keys are ignored.
ResolutionGraph parse_graph(std::string_view json_text);
ResolutionGraph load_graph(const std::filesystem::path& path);

std::int64_t genus_sum(const ResolutionGraph& graph);

/// First Betti number: edges - vertices + connected components.
std::int64_t loop_count(const ResolutionGraph& graph);

Eigen::MatrixXi intersection_matrix(const ResolutionGraph& graph);

/// Leading principal minors alternate in sign starting negative; exact.
/// Throws GraphError for non-square or non-symmetric input.
bool is_negative_definite(const Eigen::MatrixXi& m);

/// The numbers the du Bois table needs from a graph.
struct GraphInvariants {
  std::int64_t g = 0;
  std::int64_t l = 0;
  bool negative_definite = true;
};

GraphInvariants graph_invariants(const ResolutionGraph& graph);

}  // namespace bassinv
