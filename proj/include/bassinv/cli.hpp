#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bassinv/rational.hpp"

namespace bassinv::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kNotIsolated = 2,
  kParseError = 3,
  kUsage = 4,
  kNotAtOrigin = 5,
};

struct RunConfig {
  std::string command;
  std::string polynomial;
  std::string parameter = "t";
  std::vector<Rational> values;
  std::optional<std::string> graph_path;
  bool assume_chi_invariant = false;
  bool json = false;
  std::string order = "grevlex";
};

/// `argv[0]` is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes an already parsed configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Splits "0,1,-3,1/2" into rationals. Throws ParseError.
std::vector<Rational> parse_values(const std::string& text);

}  // namespace bassinv::cli
