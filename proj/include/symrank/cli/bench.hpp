#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symrank/fast/estimate.hpp"
#include "symrank/inference/generators.hpp"

namespace symrank::cli {

struct BenchRow {
  std::string statistic;
  std::size_t n = 0, r = 0, s = 0;
  std::optional<double> naive_seconds;  // empty when the naive budget is exceeded
  double fast_seconds = 0;
  std::string fast_algorithm, backend;
  std::optional<bool> agree;
  std::optional<double> doubling_ratio;  // fast time over the previous row's, when n doubled
};

struct BenchOptions {
  GeneratorSpec generator;  // name empty: gaussian-indep with (r, s)
  std::size_t r = 1, s = 1;
  std::uint64_t seed = 1;
  bool with_naive = true;
  std::size_t repeats = 1;  // fast timing is the minimum over repeats
  EstimateOptions estimate;
};

std::vector<BenchRow> run_bench(const std::string& statistic, const std::vector<std::size_t>& grid,
                                const BenchOptions& opt);

}  // namespace symrank::cli
