#include "bassinv/render.hpp"

#include <sstream>

namespace bassinv {

namespace {

std::size_t display_width(const std::string& s) {
  std::size_t width = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0U) != 0x80U) ++width;
  }
  return width;
}

std::string pad_left(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : std::string(width - w, ' ') + s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::string render_cell(const DuBoisTable& table, int p, int q) {
  if (table.is_forced_zero(p, q)) return "·";
  return to_string(table.entry(p, q));
}

std::string render_profile(const SingularityProfile& profile) {
  std::ostringstream out;
  out << "polynomial: " << to_string(profile.f) << '\n';
  if (profile.smooth()) {
    out << "status: smooth (no singular point)\n";
    return out.str();
  }
  out << "status: isolated singularity at the origin\n";
  out << "milnor: " << profile.milnor << (profile.milnor_localized ? " (local length at the origin)" : "") << '\n';
  out << "tjurina: " << profile.tjurina << '\n';
  if (profile.weights) {
    out << "quasi-homogeneous: yes, weights " << to_string(*profile.weights) << '\n';
  } else {
    out << "quasi-homogeneous: no\n";
  }
  if (profile.geometric_genus) {
    out << "geometric genus: " << *profile.geometric_genus << " (standard monomials of weighted degree <= "
        << *profile.genus_cutoff << ")\n";
  } else {
    out << "geometric genus: unknown\n";
  }
  out << "length tors(Omega^2): " << profile.torsion_omega2_length << '\n';
  out << "length Omega^3: " << profile.omega3_length << '\n';
  return out.str();
}

std::string render_graph(const ResolutionGraph& graph) {
  const GraphInvariants inv = graph_invariants(graph);
  const Eigen::MatrixXi m = intersection_matrix(graph);
  std::ostringstream out;
  out << "resolution graph: " << graph.vertices().size() << " vertices, " << graph.edges().size() << " edges\n";
  out << "genus sum g: " << inv.g << '\n';
  out << "loops l: " << inv.l << '\n';
  out << "intersection matrix:\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << ' ';
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << pad_left(std::to_string(m(i, j)), 4);
    out << '\n';
  }
  out << "negative definite: " << yes_no(inv.negative_definite) << '\n';
  return out.str();
}

std::string render_table(const DuBoisTable& table) {
  constexpr std::size_t kWidth = 9;
  std::ostringstream out;
  out << "du Bois invariants b^{p,q} (rows q, columns p):\n";
  out << pad_left("q\\p", 5);
  for (int p = 0; p < kTableColumns; ++p) out << pad_left(std::to_string(p), kWidth);
  out << '\n';
  for (int q = kTableTopRow; q >= kTableBottomRow; --q) {
    out << pad_left(std::to_string(q), 5);
    for (int p = 0; p < kTableColumns; ++p) out << pad_left(render_cell(table, p, q), kWidth);
    out << '\n';
  }
  out << "chi: chi^0=" << to_string(table.chi(0)) << " chi^1=" << to_string(table.chi(1))
      << " chi^2=" << to_string(table.chi(2)) << " chi^p=0 for p>=3\n";
  if (const auto alpha = table.alpha()) out << "alpha = b^{0,1} - b^{1,1} = " << *alpha << '\n';
  return out.str();
}

nlohmann::json to_json(const Bound& bound) {
  const char* kind = bound.kind() == Bound::Kind::Exact      ? "exact"
                     : bound.kind() == Bound::Kind::Interval ? "interval"
                                                             : "unknown";
  return {{"kind", kind}, {"lo", optional_json(bound.lo())}, {"hi", optional_json(bound.hi())}};
}

nlohmann::json to_json(const SingularityProfile& profile) {
  nlohmann::json j;
  j["polynomial"] = to_string(profile.f);
  j["status"] = profile.smooth() ? "smooth" : "isolated";
  j["milnor"] = profile.milnor;
  j["milnor_localized"] = profile.milnor_localized;
  j["tjurina"] = profile.tjurina;
  if (profile.weights) {
    j["weights"] = std::vector<std::int64_t>(profile.weights->weights.data(),
                                             profile.weights->weights.data() + profile.weights->weights.size());
    j["degree"] = profile.weights->degree;
  } else {
    j["weights"] = nullptr;
    j["degree"] = nullptr;
  }
  j["geometric_genus"] = optional_json(profile.geometric_genus);
  j["genus_cutoff"] = optional_json(profile.genus_cutoff);
  j["torsion_omega2_length"] = profile.torsion_omega2_length;
  j["omega3_length"] = profile.omega3_length;
  return j;
}

nlohmann::json to_json(const ResolutionGraph& graph) {
  const GraphInvariants inv = graph_invariants(graph);
  const Eigen::MatrixXi m = intersection_matrix(graph);
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  return {{"vertices", graph.vertices().size()},
          {"edges", graph.edges().size()},
          {"genus_sum", inv.g},
          {"loop_count", inv.l},
          {"intersection_matrix", rows},
          {"negative_definite", inv.negative_definite}};
}

nlohmann::json to_json(const DuBoisTable& table) {
  const TableInputs& in = table.inputs();
  nlohmann::json j;
  j["inputs"] = {{"tau", in.tau}, {"p_g", optional_json(in.p_g)}, {"g", in.g}, {"l", in.l}, {"graded", in.graded}};
  nlohmann::json entries = nlohmann::json::array();
  for (int q = kTableTopRow; q >= kTableBottomRow; --q) {
    for (int p = 0; p < kTableColumns; ++p) {
      nlohmann::json e = to_json(table.entry(p, q));
      e["p"] = p;
      e["q"] = q;
      e["forced_zero"] = table.is_forced_zero(p, q);
      entries.push_back(e);
    }
  }
  j["entries"] = entries;
  nlohmann::json chi = nlohmann::json::array();
  for (int p = 0; p < kTableColumns; ++p) {
    nlohmann::json c = to_json(table.chi(p));
    c["p"] = p;
    chi.push_back(c);
  }
  j["chi"] = chi;
  j["alpha"] = optional_json(table.alpha());
  return j;
}

nlohmann::json to_json(const BassVerdict& verdict) {
  return {{"nk0_vanishes", to_string(verdict.nk0_vanishes)},
          {"nk_minus1_rank", to_json(verdict.nk_minus1_rank)},
          {"answer", to_string(verdict.answer)},
          {"k0_polynomial_ring", verdict.k0_polynomial_ring_description},
          {"summary", verdict.summary}};
}

}  // namespace bassinv
