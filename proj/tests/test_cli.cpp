#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bassinv/cli.hpp"
#include "bassinv/render.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bassinv;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kFixtures = BASSINV_FIXTURES_DIR;
const std::string kGraph = kFixtures + "/wahl_resolution.json";
const std::string kFamily = "@" + kFixtures + "/wahl_family.txt";

std::string cell_from_json(const nlohmann::json& e) {
  if (e["forced_zero"].get<bool>()) return "·";
  const std::string kind = e["kind"];
  if (kind == "exact") return std::to_string(e["lo"].get<std::int64_t>());
  if (kind == "unknown") return "?";
  auto end = [](const nlohmann::json& v, const char* inf) {
    return v.is_null() ? std::string(inf) : std::to_string(v.get<std::int64_t>());
  };
  return "[" + end(e["lo"], "-inf") + "," + end(e["hi"], "inf") + "]";
}

// Cells of the text grid, row by row.
std::vector<std::string> grid_cells(const std::string& text) {
  std::vector<std::string> cells;
  std::istringstream in(text.substr(text.find("q\\p")));
  std::string line;
  std::getline(in, line);
  for (int row = 0; row < kTableTopRow - kTableBottomRow + 1 && std::getline(in, line); ++row) {
    std::istringstream fields(line);
    std::string q, cell;
    fields >> q;
    while (fields >> cell) cells.push_back(cell);
  }
  return cells;
}

}  // namespace

TEST_CASE("analyze exit codes") {
  CHECK(run_cli({"analyze", "z^2+y^3+x^10"}).code == cli::kOk);
  CHECK(run_cli({"analyze", "x"}).code == cli::kOk);
  CHECK(run_cli({"analyze", "x*y"}).code == cli::kNotIsolated);
  CHECK(run_cli({"analyze", "x+"}).code == cli::kParseError);
  CHECK(run_cli({"analyze", "t*x"}).code == cli::kParseError);
  CHECK(run_cli({"analyze", "(x-1)^2+y^2+z^2"}).code == cli::kNotAtOrigin);
  CHECK(run_cli({"analyze", "x^2", "--order", "deglex"}).code == cli::kUsage);
  CHECK(run_cli({"analyze"}).code == cli::kUsage);
  CHECK(run_cli({}).code == cli::kUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kUsage);
  CHECK(run_cli({"analyze", "x^2+y^2+z^2", "--graph", "/nonexistent.json"}).code == cli::kFailure);
  CHECK(run_cli({"analyze", "--help"}).code == cli::kOk);
}

TEST_CASE("analyze output") {
  const Result smooth = run_cli({"analyze", "x"});
  CHECK(smooth.out.find("status: smooth") != std::string::npos);
  const Result a1 = run_cli({"analyze", "x^2+y^2+z^2"});
  CHECK(a1.out.find("milnor: 1\n") != std::string::npos);
  CHECK(a1.out.find("tjurina: 1\n") != std::string::npos);
  CHECK(a1.out.find("weights (1,1,1)/2") != std::string::npos);
  const Result lex = run_cli({"analyze", "z^2+y^3+x^10", "--order", "lex"});
  CHECK(lex.out == run_cli({"analyze", "z^2+y^3+x^10"}).out);
}

TEST_CASE("family requires the chi-invariance acknowledgement") {
  const Result r = run_cli({"family", kFamily, "--values", "0,1", "--graph", kGraph});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("--assume-chi-invariant") != std::string::npos);
  CHECK(run_cli({"family", kFamily, "--graph", kGraph, "--assume-chi-invariant"}).code == cli::kUsage);
  CHECK(run_cli({"family", kFamily, "--values", "0,1/0", "--assume-chi-invariant"}).code == cli::kParseError);
  CHECK(run_cli({"family", "x^2+y^2+z^2", "--values", "0", "--assume-chi-invariant"}).code == cli::kUsage);
  CHECK(run_cli({"family", kFamily, "--values", "1,2", "--assume-chi-invariant"}).code == cli::kFailure);
  CHECK(run_cli({"family", "@/nonexistent.txt", "--values", "0", "--assume-chi-invariant"}).code == cli::kUsage);
}

TEST_CASE("family without a graph reports profiles only") {
  const Result r = run_cli({"family", kFamily, "--values", "0,1", "--assume-chi-invariant"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("du Bois tables not computed") != std::string::npos);
  CHECK(r.out.find("tjurina: 16") != std::string::npos);
}

TEST_CASE("every nonzero fiber gets the same deduced table") {
  const Result r =
      run_cli({"family", kFamily, "--values", "0,1,2,1/2", "--graph", kGraph, "--assume-chi-invariant", "--json"});
  REQUIRE(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["graded_fiber"] == "0");
  REQUIRE(j["fibers"].size() == 4);
  const auto& reference = j["fibers"][1]["table"]["entries"];
  for (const auto& fiber : j["fibers"]) {
    if (fiber["value"] == "0") continue;
    CHECK(fiber["profile"]["tjurina"] == 16);
    CHECK(fiber["table"]["entries"] == reference);
  }
}

TEST_CASE("bass verdicts from the command line") {
  const Result family = run_cli({"bass", kFamily, "--values", "0,1", "--graph", kGraph, "--assume-chi-invariant"});
  REQUIRE(family.code == cli::kOk);
  CHECK(family.out.find("t=1: NEGATIVE answer: K_0(R)=K_0(R[t]) but K_0(R[t_1,t_2]) ≅ K_0(R) ⊕ stF[s,t]") !=
        std::string::npos);
  CHECK(family.out.find("t=0: NK_0 ≠ 0 (b^{1,1}=1): criterion not met") != std::string::npos);

  const Result a1 = run_cli({"bass", "x^2+y^2+z^2", "--graph", kFixtures + "/a1_resolution.json"});
  CHECK(a1.code == cli::kOk);
  CHECK(a1.out.find("NK_0 = NK_{−1} = 0: not a counterexample") != std::string::npos);

  CHECK(run_cli({"bass", "z^2+y^3+x^10+x^7*y", "--graph", kGraph}).code == cli::kUsage);
  CHECK(run_cli({"bass", kFamily, "--values", "0,1", "--graph", kGraph}).code == cli::kUsage);
  CHECK(run_cli({"bass", "x^2+y^2+z^2"}).code == cli::kUsage);
}

TEST_CASE("graph command") {
  const Result text = run_cli({"graph", kGraph});
  CHECK(text.code == cli::kOk);
  CHECK(text.out.find("negative definite: yes") != std::string::npos);
  const auto j = nlohmann::json::parse(run_cli({"graph", kGraph, "--json"}).out);
  CHECK(j["genus_sum"] == 0);
  CHECK(j["loop_count"] == 0);
  CHECK(j["negative_definite"] == true);
  CHECK(run_cli({"graph", "/nonexistent.json"}).code == cli::kFailure);
}

TEST_CASE("text and JSON carry the same numbers") {
  for (const std::string poly : {"z^2+y^3+x^10", "x^2+y^2+z^2", "x^3+y^5+z^2"}) {
    CAPTURE(poly);
    const Result text = run_cli({"analyze", poly, "--graph", kGraph});
    const auto j = nlohmann::json::parse(run_cli({"analyze", poly, "--graph", kGraph, "--json"}).out);
    const auto& profile = j["profile"];
    CHECK(text.out.find("milnor: " + std::to_string(profile["milnor"].get<int>())) != std::string::npos);
    CHECK(text.out.find("tjurina: " + std::to_string(profile["tjurina"].get<int>())) != std::string::npos);
    CHECK(text.out.find("geometric genus: " + std::to_string(profile["geometric_genus"].get<int>())) !=
          std::string::npos);
    std::vector<std::string> from_json;
    for (const auto& e : j["table"]["entries"]) from_json.push_back(cell_from_json(e));
    CHECK(grid_cells(text.out) == from_json);
    for (const auto& c : j["table"]["chi"]) {
      if (c["p"].get<int>() > 2) continue;
      CHECK(text.out.find("chi^" + std::to_string(c["p"].get<int>()) + "=" +
                          std::to_string(c["lo"].get<std::int64_t>())) != std::string::npos);
    }
  }
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::vector<std::string>> invocations = {
      {"analyze", "z^2+y^3+x^10", "--graph", kGraph},
      {"family", kFamily, "--values", "2,0,1/2,1,-3", "--graph", kGraph, "--assume-chi-invariant"},
      {"family", kFamily, "--values", "2,0,1/2,1,-3", "--graph", kGraph, "--assume-chi-invariant", "--json"},
      {"bass", kFamily, "--values", "0,1", "--graph", kGraph, "--assume-chi-invariant", "--json"},
      {"analyze", "x*y"},
  };
  for (const auto& args : invocations) {
    const Result first = run_cli(args);
    for (int k = 0; k < 3; ++k) {
      const Result again = run_cli(args);
      CHECK(again.code == first.code);
      CHECK(again.out == first.out);
      CHECK(again.err == first.err);
    }
  }
}

TEST_CASE("staircase cap from the environment") {
  ::setenv("BASSINV_MAX_STAIRCASE", "5", 1);
  const Result capped = run_cli({"analyze", "z^2+y^3+x^10"});
  ::setenv("BASSINV_MAX_STAIRCASE", "many", 1);
  const Result invalid = run_cli({"analyze", "z^2+y^3+x^10"});
  ::unsetenv("BASSINV_MAX_STAIRCASE");
  CHECK(capped.code == cli::kFailure);
  CHECK(capped.err.find("staircase") != std::string::npos);
  CHECK(invalid.code == cli::kUsage);
  CHECK(run_cli({"analyze", "z^2+y^3+x^10"}).code == cli::kOk);
}

TEST_CASE("parse_values") {
  const auto values = cli::parse_values("0, 1,-3,1/2");
  REQUIRE(values.size() == 4);
  CHECK(values[3] == Rational(1) / 2);
  CHECK(values[2] == -3);
  CHECK_THROWS(cli::parse_values("1,,2"));
}
