#pragma once

#include <string>

namespace pqf {

/// Parsed command line for the pqf tool.
struct RunConfig {
  std::string command;
  long d = 0;
  bool rational = false;
  int n = 2;
  long dmin = 0;
  long dmax = -1;
  std::string out_path;
  std::string adjacency_path;
  std::string checkpoint_path;
  std::string csv_path;
  std::string plot_path;
  std::string computed_path;
  std::string reference_path;
  std::string gram_path;
  int jobs = 1;
  int class_cap = 10000;
  bool progress = false;
};

int cmd_seed(const RunConfig& cfg);
int cmd_minvec(const RunConfig& cfg);
int cmd_perfect_check(const RunConfig& cfg);
int cmd_enumerate(const RunConfig& cfg);
int cmd_table(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);

/// Exit codes: 0 success, 1 computation failure, 2 usage error,
/// 3 truncated enumeration.
int run_cli(int argc, char** argv);

}  // namespace pqf
