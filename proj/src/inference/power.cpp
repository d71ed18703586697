#include "symrank/inference/power.hpp"

#include <cmath>

#include "symrank/error.hpp"
#include "symrank/parallel.hpp"

namespace symrank {

std::vector<PowerRow> power_sim(const GeneratorSpec& g, const std::vector<std::string>& statistics, std::size_t n,
                                std::size_t trials, double level, std::uint64_t seed, const PowerOptions& opt) {
  validate(g);
  if (trials < 1) throw InputError("power simulation needs trials >= 1");
  if (!(level > 0 && level < 1)) throw InputError("level must lie in (0, 1)");
  if (statistics.empty()) throw InputError("power simulation needs at least one statistic");
  std::vector<Statistic> stats;
  for (const auto& name : statistics) stats.push_back(make_statistic(name, opt.estimate));

  std::vector<std::vector<double>> banks(stats.size());
  if (!opt.full_permutation)
    for (std::size_t q = 0; q < stats.size(); ++q)
      banks[q] = reference_bank(g, statistics[q], stats[q], n, opt.reference_size, seed, opt.workers).values;

  // rejected[t][q]
  std::vector<std::vector<char>> rejected(trials, std::vector<char>(stats.size(), 0));
  parallel_chunks(trials, opt.workers, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t t = b; t < e; ++t) {
      Philox4x64 rng = stream(seed, t, Domain::kSample, 1);
      const Dataset data = sample_joint(g, n, rng);
      for (std::size_t q = 0; q < stats.size(); ++q) {
        TestResult res;
        if (opt.full_permutation) {
          const std::uint64_t sub_seed = stream(seed, t, Domain::kPermutation, 1)();
          res = permutation_test(data, statistics[q], stats[q], opt.reference_size, sub_seed, 1);
        } else {
          res.observed = stats[q](data);
          res.reference = banks[q];
          fill_p_value(res);
        }
        rejected[t][q] = res.p_value <= level;
      }
    }
  });

  std::vector<PowerRow> rows;
  for (std::size_t q = 0; q < stats.size(); ++q) {
    PowerRow row;
    row.generator = g.name;
    row.sigma = g.sigma;
    row.rho = g.rho;
    row.statistic = statistics[q];
    row.scheme = opt.full_permutation ? "permutation" : "marginal-reference";
    row.n = n;
    row.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) row.rejections += rejected[t][q];
    row.level = level;
    row.power = static_cast<double>(row.rejections) / trials;
    row.se = std::sqrt(row.power * (1 - row.power) / trials);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace symrank
