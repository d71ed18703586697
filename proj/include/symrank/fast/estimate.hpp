#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "symrank/engine/src_spec.hpp"
#include "symrank/fast/fast_stats.hpp"

namespace symrank {

enum class Algorithm { kAuto, kNaive, kFast };

Algorithm parse_algorithm(const std::string& name);
PairMethod parse_pair_method(const std::string& name);

struct EstimateOptions {
  Algorithm algorithm = Algorithm::kAuto;
  Backend backend = Backend::kAuto;
  PairMethod pair_method = PairMethod::kAuto;
  std::size_t memory_budget = default_memory_budget();
  // tauP / tauJ run naively below this n unless the naive budget is exceeded
  std::size_t pair_crossover = 512;
  std::uint64_t naive_budget = 4'000'000'000ull;  // ordered tuples
  unsigned workers = 1;
};

struct EstimatePlan {
  std::string statistic;
  std::string algorithm;  // naive, orthant-counts, cut-tuples, pair-set, bitset, fenwick
  std::string backend;    // none, tensor, tree, scan, bitset
};

struct Estimate {
  std::string statistic;
  Rational value;
  double approx = 0;
  std::string algorithm, backend;
  double build_seconds = 0, total_seconds = 0;
  std::uint64_t queries = 0;
  std::size_t memory_bytes = 0;
  std::size_t n = 0, r = 0, s = 0;
};

// tau tau2 taustar spearman D R tauP tauJ
const std::vector<std::string>& statistic_names();
// Spec used by the naive path; spearman has no single SrcSpec and throws.
SrcSpec spec_for(const std::string& statistic, std::size_t r, std::size_t s);

EstimatePlan plan_estimate(const std::string& statistic, std::size_t n, std::size_t r, std::size_t s,
                           const EstimateOptions& opt = {});
Estimate estimate(const std::string& statistic, const Dataset& data, const EstimateOptions& opt = {});
Estimate estimate(const SrcSpec& spec, const Dataset& data, const EstimateOptions& opt = {});

}  // namespace symrank
