#pragma once

#include <string>

#include "bassinv/invariants.hpp"
#include "bassinv/resgraph.hpp"
#include "bassinv/singularity.hpp"
#include "json.hpp"

namespace bassinv {

// Rows q = 2..-3 and columns p = 0..4 of the rendered table.
inline constexpr int kTableTopRow = 2;
inline constexpr int kTableBottomRow = -3;
inline constexpr int kTableColumns = 5;

/// `·` for forced zeros, `n` exact, `[lo,hi]` interval, `?` unknown.
std::string render_cell(const DuBoisTable& table, int p, int q);

std::string render_profile(const SingularityProfile& profile);
std::string render_graph(const ResolutionGraph& graph);
std::string render_table(const DuBoisTable& table);

nlohmann::json to_json(const Bound& bound);
nlohmann::json to_json(const SingularityProfile& profile);
nlohmann::json to_json(const ResolutionGraph& graph);
nlohmann::json to_json(const DuBoisTable& table);
nlohmann::json to_json(const BassVerdict& verdict);

}  // namespace bassinv
