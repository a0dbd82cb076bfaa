#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hyperfn::cli {

enum ExitCode { kOk = 0, kValidationError = 1, kComputationError = 2 };

struct CommandConfig {
  std::string subcommand;

  // Surface sources. X comes from --surface/--x or from a family; Y from
  // --y or from X with the --deform steps applied in order.
  std::string surface_path;
  std::string x_path;
  std::string y_path;
  std::string input_path;  // classifier pair
  std::string out_path;    // stdout when empty
  std::string format = "json";

  std::string family;  // flute | ladder
  int N = 0;
  std::string lengths = "const:1";
  std::string twists = "const:0";
  std::string candidate_lengths;  // classify from expressions
  std::string candidate_twists;
  std::string ends = "boundary";
  std::optional<double> upper_bound;
  std::vector<std::string> deform;  // scale:c | shift:c
  std::vector<std::string> curves;  // curve words
  std::string range;                // "lo:hi", inclusive curve ids

  int k_range = 3;
  int tail_start = 0;  // 0: half the window
  double M = 5.0;
  double eps = 1e-3;
  double K = 2.0;
  int threads = 1;
};

/// Executes one subcommand. Reports go to `out` (or the --out file), errors
/// to `err`. Returns 0, 1 for bad input or options, 2 when a computation
/// fails.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperfn::cli
