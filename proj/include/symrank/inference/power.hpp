#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symrank/inference/generators.hpp"
#include "symrank/inference/hypothesis.hpp"

namespace symrank {

struct PowerOptions {
  std::size_t reference_size = 1000;  // B for the shared bank, or permutations per trial
  bool full_permutation = false;      // permutation test per trial instead of one reused bank
  unsigned workers = 1;
  EstimateOptions estimate = inference_estimate_options();
};

struct PowerRow {
  std::string generator;
  double sigma = 0, rho = 0;
  std::string statistic;
  std::string scheme;
  std::size_t n = 0, trials = 0, rejections = 0;
  double level = 0, power = 0, se = 0;
};

// Trial t samples from stream (seed, t); rejection when p <= level.
std::vector<PowerRow> power_sim(const GeneratorSpec& g, const std::vector<std::string>& statistics, std::size_t n,
                                std::size_t trials, double level, std::uint64_t seed, const PowerOptions& opt = {});

}  // namespace symrank
