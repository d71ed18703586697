#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace symrank::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kCapacityError = 3, kInternalError = 4 };

struct RunConfig {
  std::string command;
  std::string input, roles;
  std::string statistic = "D";
  std::vector<std::string> statistics;  // power
  std::string backend = "auto", algorithm = "auto", pair_method = "auto";
  std::size_t crossover = 512;
  std::string scheme = "permutation";  // test: permutation or marginal-reference
  std::string generator = "gaussian-indep";
  double sigma = 1.0, rho = 0.0, level = 0.05;
  std::size_t r = 1, s = 1;
  std::size_t B = 999, n = 50, trials = 1000, K = 100, count = 1000, repeats = 1;
  std::vector<std::size_t> n_grid;
  std::string law = "D";
  bool full_permutation = false, no_naive = false;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string output, format;  // format empty: the command's default
};

// Executes one command; output goes to config.output or `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symrank::cli
