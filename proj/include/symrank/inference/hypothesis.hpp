#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "symrank/core/dataset.hpp"
#include "symrank/fast/estimate.hpp"
#include "symrank/inference/generators.hpp"

namespace symrank {

using Statistic = std::function<double(const Dataset&)>;

// Dispatcher options for repeated small-n evaluation: fast paths at every n.
EstimateOptions inference_estimate_options();

// Named statistic evaluated through the dispatcher; the inner estimator runs single-threaded.
Statistic make_statistic(const std::string& name, EstimateOptions opt = inference_estimate_options());

struct TestResult {
  std::string statistic;
  std::string scheme;  // permutation or marginal-reference
  double observed = 0;
  std::vector<double> reference;
  double p_value = 1;         // (1 + #{ref >= obs}) / (B + 1)
  double raw_proportion = 0;  // #{ref >= obs} / B
  std::uint64_t seed = 0;
  double seconds = 0;
  std::string rng = kRngName;
};

struct ReferenceBank {
  std::string statistic;
  GeneratorSpec generator;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<double> values;
};

void fill_p_value(TestResult& t);

// Y rows permuted against fixed X rows; replicate k draws from stream (seed, k).
TestResult permutation_test(const Dataset& data, const std::string& name, const Statistic& stat, std::size_t B,
                            std::uint64_t seed, unsigned workers = 1);

// B statistics on samples from the product of the generator's marginals.
ReferenceBank reference_bank(const GeneratorSpec& g, const std::string& name, const Statistic& stat, std::size_t n,
                             std::size_t B, std::uint64_t seed, unsigned workers = 1);

// Observed statistic on one joint sample (stream (seed, 0)) against a fresh reference bank.
TestResult marginal_reference_test(const GeneratorSpec& g, const std::string& name, const Statistic& stat,
                                   std::size_t B, std::size_t n, std::uint64_t seed, unsigned workers = 1,
                                   ReferenceBank* bank_out = nullptr);

}  // namespace symrank
