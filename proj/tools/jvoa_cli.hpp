#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace jvoa::cli {

struct RunConfig {
  std::string command;
  std::string family = "C";
  int dim = 4;
  std::string r = "symbolic";
  int degree = -1;
  int max_degree = -1;
  int N = -1;
  std::vector<std::string> at;
  int samples = -1;
  std::uint64_t seed = 7;
  std::string format = "json";
  bool allow_dim_2 = false;
  int tmin = -3;
  int tmax = 3;
};

enum ExitCode { kPass = 0, kViolation = 1, kInvalid = 2 };

/// Parses argv-style arguments (without the program name), runs the command
/// and writes the report to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jvoa::cli
