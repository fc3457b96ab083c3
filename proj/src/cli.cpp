#include "bassinv/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "bassinv/errors.hpp"
#include "bassinv/invariants.hpp"
#include "bassinv/render.hpp"

namespace bassinv::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

// "@path" reads the polynomial from a file, skipping '#' comment lines.
std::string polynomial_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot read " + arg.substr(1));
  std::string line;
  std::string text;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    text += line;
  }
  return text;
}

AnalyzeOptions options_for(const RunConfig& config) {
  AnalyzeOptions options;
  options.order = config.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
  if (const char* env = std::getenv("BASSINV_MAX_STAIRCASE")) {
    try {
      const long long limit = std::stoll(env);
      if (limit <= 0) throw std::invalid_argument(env);
      options.staircase_limit = static_cast<std::size_t>(limit);
    } catch (const std::exception&) {
      throw UsageError(std::string("BASSINV_MAX_STAIRCASE must be a positive integer, got '") + env + "'");
    }
  }
  return options;
}

std::optional<GraphInvariants> graph_for(const RunConfig& config, std::ostream& err,
                                         std::optional<ResolutionGraph>& graph) {
  if (!config.graph_path) return std::nullopt;
  graph = load_graph(*config.graph_path);
  const GraphInvariants inv = graph_invariants(*graph);
  if (!inv.negative_definite) err << "warning: the intersection matrix of the graph is not negative definite\n";
  return inv;
}

void print(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

int cmd_graph(const RunConfig& config, std::ostream& out) {
  const ResolutionGraph graph = load_graph(*config.graph_path);
  if (config.json) {
    print(out, to_json(graph));
  } else {
    out << render_graph(graph);
  }
  return kOk;
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const RationalPolynomial f = parse_polynomial(polynomial_text(config.polynomial));
  std::optional<ResolutionGraph> graph;
  const std::optional<GraphInvariants> inv = graph_for(config, err, graph);
  const SingularityProfile profile = analyze(f, options_for(config));
  std::optional<DuBoisTable> table;
  if (inv && !profile.smooth()) table = table_from_profile(profile, *inv);

  if (config.json) {
    nlohmann::json j{{"profile", to_json(profile)}};
    if (graph) j["graph"] = to_json(*graph);
    if (inv) j["table"] = table ? to_json(*table) : nlohmann::json(nullptr);
    print(out, j);
    return kOk;
  }
  out << render_profile(profile);
  if (graph) out << '\n' << render_graph(*graph);
  if (table) {
    out << '\n' << render_table(*table);
  } else if (inv) {
    out << "\nno du Bois table: the point is smooth\n";
  }
  return kOk;
}

FamilyReport family_report(const RunConfig& config, std::ostream& err, std::optional<ResolutionGraph>& graph) {
  const RationalPolynomial f = parse_polynomial(polynomial_text(config.polynomial), {"x", "y", "z"}, config.parameter);
  if (!f.has_parameter()) throw UsageError("the polynomial does not contain the parameter '" + config.parameter + "'");
  if (config.values.empty()) throw UsageError("--values needs at least one parameter value");
  const std::optional<GraphInvariants> inv = graph_for(config, err, graph);
  FamilyReport report = analyze_family(f, config.values, inv, config.assume_chi_invariant, options_for(config));
  if (inv) report = deduce_family(std::move(report));
  return report;
}

std::string fiber_label(const RunConfig& config, const Fiber& fiber) {
  return config.parameter + "=" + to_string(fiber.value);
}

int cmd_family(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<ResolutionGraph> graph;
  const FamilyReport report = family_report(config, err, graph);
  const Fiber& graded = report.fibers[report.graded_fiber_index];

  if (config.json) {
    nlohmann::json fibers = nlohmann::json::array();
    for (const Fiber& fiber : report.fibers) {
      fibers.push_back({{"value", to_string(fiber.value)},
                        {"profile", to_json(fiber.profile)},
                        {"table", fiber.table ? to_json(*fiber.table) : nlohmann::json(nullptr)}});
    }
    nlohmann::json j{{"family", to_string(report.family)},
                     {"parameter", config.parameter},
                     {"graded_fiber", to_string(graded.value)},
                     {"chi_assumed_invariant", report.chi_assumed_invariant},
                     {"fibers", fibers}};
    if (graph) j["graph"] = to_json(*graph);
    print(out, j);
    return kOk;
  }

  out << "family: " << to_string(report.family) << '\n';
  out << "parameter: " << config.parameter << '\n';
  out << "graded fiber: " << fiber_label(config, graded) << '\n';
  if (graph) {
    out << "chi^p transported from the graded fiber (assumed invariant along the family)\n";
    out << '\n' << render_graph(*graph);
  } else {
    out << "no resolution graph given: du Bois tables not computed\n";
  }
  for (std::size_t k = 0; k < report.fibers.size(); ++k) {
    const Fiber& fiber = report.fibers[k];
    out << "\n== fiber " << fiber_label(config, fiber) << (k == report.graded_fiber_index ? " (graded)" : "")
        << " ==\n";
    out << render_profile(fiber.profile);
    if (fiber.table) out << render_table(*fiber.table);
  }
  return kOk;
}

nlohmann::json verdict_json(const std::string& value, const DuBoisTable& table) {
  return {{"value", value}, {"verdict", to_json(bass_verdict(table))}, {"table", to_json(table)}};
}

int cmd_bass(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.values.empty()) {
    std::optional<ResolutionGraph> graph;
    const FamilyReport report = family_report(config, err, graph);
    const Fiber& graded = report.fibers[report.graded_fiber_index];
    if (config.json) {
      nlohmann::json verdicts = nlohmann::json::array();
      for (const Fiber& fiber : report.fibers) {
        if (fiber.table) verdicts.push_back(verdict_json(to_string(fiber.value), *fiber.table));
      }
      print(out, {{"family", to_string(report.family)},
                  {"parameter", config.parameter},
                  {"graded_fiber", to_string(graded.value)},
                  {"verdicts", verdicts}});
      return kOk;
    }
    out << "family: " << to_string(report.family) << '\n';
    out << "graded fiber: " << fiber_label(config, graded) << '\n';
    for (const Fiber& fiber : report.fibers) {
      out << fiber_label(config, fiber) << ": ";
      if (!fiber.table) {
        out << "smooth fiber, no verdict\n";
        continue;
      }
      const BassVerdict verdict = bass_verdict(*fiber.table);
      out << verdict.summary << '\n';
    }
    return kOk;
  }

  const RationalPolynomial f = parse_polynomial(polynomial_text(config.polynomial));
  std::optional<ResolutionGraph> graph;
  const std::optional<GraphInvariants> inv = graph_for(config, err, graph);
  const SingularityProfile profile = analyze(f, options_for(config));
  if (profile.smooth()) throw UsageError("bass needs a singular point; " + to_string(f) + " is smooth");
  if (!profile.weights) throw UsageError("bass needs a quasi-homogeneous input or a family with --values");
  const DuBoisTable table = table_from_profile(profile, *inv);
  if (config.json) {
    print(out, {{"polynomial", to_string(profile.f)}, {"verdicts", {verdict_json("", table)}}});
    return kOk;
  }
  out << "polynomial: " << to_string(profile.f) << '\n';
  out << bass_verdict(table).summary << '\n';
  return kOk;
}

}  // namespace

std::vector<Rational> parse_values(const std::string& text) {
  std::vector<Rational> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) values.push_back(parse_rational(trim(item)));
  return values;
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if ((config.command == "family" || config.command == "bass") && !config.values.empty() &&
        !config.assume_chi_invariant) {
      throw UsageError("family deduction assumes chi^p is constant along the family; pass --assume-chi-invariant");
    }
    if (config.command == "graph") return cmd_graph(config, out);
    if (config.command == "analyze") return cmd_analyze(config, out, err);
    if (config.command == "family") return cmd_family(config, out, err);
    if (config.command == "bass") return cmd_bass(config, out, err);
    throw UsageError("unknown command '" + config.command + "'");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const NotIsolated& e) {
    err << "not isolated: " << e.what() << '\n';
    return kNotIsolated;
  } catch (const SingularLocusNotAtOrigin& e) {
    err << "singular locus not at the origin: " << e.what() << '\n';
    return kNotAtOrigin;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized du Bois invariants and Bass's NK_0 question for surface singularities", "bassinv"};
  app.require_subcommand(1);
  RunConfig config;
  std::string values;

  auto* analyze_cmd = app.add_subcommand("analyze", "Milnor/Tjurina numbers, weights and p_g of f at the origin");
  analyze_cmd->add_option("polynomial", config.polynomial, "polynomial in x,y,z or @FILE")->required();
  analyze_cmd->add_option("--graph", config.graph_path, "resolution graph JSON; adds the du Bois table");
  analyze_cmd->add_option("--order", config.order, "monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
  analyze_cmd->add_flag("--json", config.json, "JSON output");

  auto* family_cmd = app.add_subcommand("family", "analyze the fibers of a one-parameter family");
  family_cmd->add_option("polynomial", config.polynomial, "polynomial in x,y,z and the parameter, or @FILE")
      ->required();
  family_cmd->add_option("--values", values, "comma-separated parameter values, e.g. 0,1,-3,1/2")->required();
  family_cmd->add_option("--graph", config.graph_path, "resolution graph JSON");
  family_cmd->add_option("--parameter", config.parameter, "parameter symbol")->capture_default_str();
  family_cmd->add_flag("--assume-chi-invariant", config.assume_chi_invariant,
                       "accept that chi^p is constant along the family");
  family_cmd->add_flag("--json", config.json, "JSON output");

  auto* graph_cmd = app.add_subcommand("graph", "invariants of a resolution graph");
  graph_cmd->add_option("file", config.graph_path, "resolution graph JSON")->required();
  graph_cmd->add_flag("--json", config.json, "JSON output");

  auto* bass_cmd = app.add_subcommand("bass", "NK_0 / NK_{-1} verdict for a graded input or a family");
  bass_cmd->add_option("polynomial", config.polynomial, "polynomial or @FILE")->required();
  bass_cmd->add_option("--values", values, "comma-separated parameter values");
  bass_cmd->add_option("--graph", config.graph_path, "resolution graph JSON")->required();
  bass_cmd->add_option("--parameter", config.parameter, "parameter symbol")->capture_default_str();
  bass_cmd->add_flag("--assume-chi-invariant", config.assume_chi_invariant,
                     "accept that chi^p is constant along the family");
  bass_cmd->add_flag("--json", config.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  for (const CLI::App* sub : app.get_subcommands()) config.command = sub->get_name();
  try {
    if (!values.empty()) config.values = parse_values(values);
  } catch (const ParseError& e) {
    err << "parse error: --values: " << e.what() << '\n';
    return kParseError;
  }
  if (config.command == "family" && config.values.empty()) {
    err << "usage error: --values needs at least one parameter value\n";
    return kUsage;
  }
  return execute(config, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"bassinv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace bassinv::cli
