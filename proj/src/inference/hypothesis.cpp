#include "symrank/inference/hypothesis.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include <boost/random/uniform_int_distribution.hpp>

#include "symrank/error.hpp"
#include "symrank/parallel.hpp"

namespace symrank {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs f(k) for k in [0, B), prefixing failures with the replicate index.
template <typename F>
std::vector<double> replicates(std::size_t B, unsigned workers, F f) {
  std::vector<double> out(B);
  parallel_chunks(B, workers, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t k = b; k < e; ++k) {
      try {
        out[k] = f(k);
      } catch (const InputError& err) {
        throw InputError("replicate " + std::to_string(k) + ": " + err.what());
      } catch (const CapacityError& err) {
        throw CapacityError("replicate " + std::to_string(k) + ": " + err.what());
      } catch (const std::exception& err) {
        throw std::runtime_error("replicate " + std::to_string(k) + ": " + err.what());
      }
    }
  });
  return out;
}

}  // namespace

EstimateOptions inference_estimate_options() {
  EstimateOptions opt;
  opt.pair_crossover = 0;
  return opt;
}

Statistic make_statistic(const std::string& name, EstimateOptions opt) {
  const auto& names = statistic_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw InputError("unknown statistic '" + name + "'");
  opt.workers = 1;
  return [name, opt](const Dataset& d) { return estimate(name, d, opt).approx; };
}

void fill_p_value(TestResult& t) {
  std::size_t at_least = 0;
  for (double v : t.reference) at_least += v >= t.observed;
  const double B = static_cast<double>(t.reference.size());
  t.p_value = (1.0 + at_least) / (B + 1.0);
  t.raw_proportion = t.reference.empty() ? 0.0 : at_least / B;
}

TestResult permutation_test(const Dataset& data, const std::string& name, const Statistic& stat, std::size_t B,
                            std::uint64_t seed, unsigned workers) {
  if (B < 1) throw InputError("permutation test needs B >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  TestResult out;
  out.statistic = name;
  out.scheme = "permutation";
  out.seed = seed;
  out.observed = stat(data);
  const std::size_t n = data.n();
  out.reference = replicates(B, workers, [&](std::size_t k) {
    Philox4x64 rng = stream(seed, k, Domain::kPermutation);
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    for (std::size_t i = n; i > 1; --i) {
      boost::random::uniform_int_distribution<std::size_t> pick(0, i - 1);
      std::swap(perm[i - 1], perm[pick(rng)]);
    }
    return stat(data.permute_y(perm));
  });
  fill_p_value(out);
  out.seconds = seconds_since(t0);
  return out;
}

ReferenceBank reference_bank(const GeneratorSpec& g, const std::string& name, const Statistic& stat, std::size_t n,
                             std::size_t B, std::uint64_t seed, unsigned workers) {
  validate(g);
  if (B < 1) throw InputError("reference bank needs B >= 1");
  ReferenceBank bank{name, g, n, seed, {}};
  bank.values = replicates(B, workers, [&](std::size_t k) {
    Philox4x64 rng = stream(seed, k, Domain::kReference);
    return stat(sample_marginals(g, n, rng));
  });
  return bank;
}

TestResult marginal_reference_test(const GeneratorSpec& g, const std::string& name, const Statistic& stat,
                                   std::size_t B, std::size_t n, std::uint64_t seed, unsigned workers,
                                   ReferenceBank* bank_out) {
  const auto t0 = std::chrono::steady_clock::now();
  ReferenceBank bank = reference_bank(g, name, stat, n, B, seed, workers);
  TestResult out;
  out.statistic = name;
  out.scheme = "marginal-reference";
  out.seed = seed;
  Philox4x64 rng = stream(seed, 0, Domain::kSample);
  out.observed = stat(sample_joint(g, n, rng));
  out.reference = bank.values;
  fill_p_value(out);
  out.seconds = seconds_since(t0);
  if (bank_out) *bank_out = std::move(bank);
  return out;
}

}  // namespace symrank
