#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fermat/exact_arith.hpp"

namespace fermat::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kIoError = 2,
  kUsage = 64,
  kDomainError = 65,
  kMissingInput = 66,
};

enum class Command {
  Count,
  Enumerate,
  Classify,
  FiberRank,
  Lines,
  VerifyIntersections,
  RankSurvey,
  Plot,
};

struct RunConfig {
  Command command = Command::Count;
  Int height_bound = 8;
  std::vector<Int> bounds_grid;
  unsigned workers = 1;
  std::string output_path;
  bool emit_points = false;
  int sample_count = 200;
  std::uint64_t rng_seed = 20240229;
};

/// Parses comma-separated positive integers, e.g. "1,2,4,8".
std::vector<Int> parse_bounds(const std::string& text);

/// Runs the tool on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fermat::cli
