#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace s4cover {

struct VerifyCmd {
  std::string suite = "all";
  std::int64_t samples = -1;  // -1: per-suite default
  std::uint64_t seed = 7;
  double tol = 1e-9;
  std::string output;
};

struct EvalCmd {
  std::string map;
  std::string point;
  std::string output;
};

struct FiberCmd {
  std::string map;
  std::string point;
  double tol = 1e-9;
  std::string output;
};

struct SampleCmd {
  std::string target;
  std::string map;  // for map-graph
  double x = 0.0;   // for c-level
  std::uint64_t count = 100;
  std::uint64_t seed = 7;
  std::string format = "csv";
  std::string output;
};

struct HelpCmd {
  std::string text;
};

using Command = std::variant<VerifyCmd, EvalCmd, FiberCmd, SampleCmd, HelpCmd>;

/// Parses a command line (without the program name). Throws UsageError for
/// anything unrecognized, including unknown flags.
Command parse_args(const std::vector<std::string>& args);

/// Executes a parsed command. Reports and points go to `out`, human-facing
/// summaries to `err`. Returns 0 on success, 1 for verified failures or
/// degenerate fibers, 2 for usage-level errors.
int run_command(const Command& cmd, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace s4cover
