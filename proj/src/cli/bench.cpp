#include "symrank/cli/bench.hpp"

#include <algorithm>
#include <limits>

#include "symrank/error.hpp"

namespace symrank::cli {

std::vector<BenchRow> run_bench(const std::string& statistic, const std::vector<std::size_t>& grid,
                                const BenchOptions& opt) {
  if (grid.empty()) throw InputError("bench needs a non-empty n grid");
  GeneratorSpec g = opt.generator;
  if (g.name.empty()) {
    g.name = "gaussian-indep";
    g.r = opt.r;
    g.s = opt.s;
  }
  validate(g);
  std::vector<BenchRow> rows;
  for (std::size_t n : grid) {
    Philox4x64 rng = stream(opt.seed, n, Domain::kSample);
    const Dataset data = sample_joint(g, n, rng);
    BenchRow row;
    row.statistic = statistic;
    row.n = n;
    row.r = data.r();
    row.s = data.s();

    EstimateOptions fast = opt.estimate;
    const bool has_fast = statistic != "tau2" && statistic != "spearman";
    fast.algorithm = has_fast ? Algorithm::kFast : Algorithm::kNaive;
    Estimate best;
    double seconds = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < std::max<std::size_t>(1, opt.repeats); ++k) {
      best = estimate(statistic, data, fast);
      seconds = std::min(seconds, best.total_seconds);
    }
    row.fast_seconds = seconds;
    row.fast_algorithm = best.algorithm;
    row.backend = best.backend;

    if (opt.with_naive) {
      EstimateOptions naive = opt.estimate;
      naive.algorithm = Algorithm::kNaive;
      try {
        const Estimate e = estimate(statistic, data, naive);
        row.naive_seconds = e.total_seconds;
        row.agree = e.value == best.value;
      } catch (const CapacityError&) {
      }
    }
    if (!rows.empty() && rows.back().n * 2 == n && rows.back().fast_seconds > 0)
      row.doubling_ratio = row.fast_seconds / rows.back().fast_seconds;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace symrank::cli
