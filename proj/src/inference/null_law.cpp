#include "symrank/inference/null_law.hpp"

#include <cmath>
#include <numbers>

#include <boost/random/normal_distribution.hpp>

#include "symrank/error.hpp"
#include "symrank/inference/rng.hpp"
#include "symrank/parallel.hpp"

namespace symrank {

namespace {

constexpr double kPi4 = std::numbers::pi * std::numbers::pi * std::numbers::pi * std::numbers::pi;
constexpr double kZeta4 = kPi4 / 90.0;

}  // namespace

double NullLawSpec::scale() const { return factor / kPi4; }

NullLawSpec null_law_for(const std::string& law, std::size_t K) {
  if (K < 1) throw InputError("null law needs K >= 1");
  if (law == "taustar" || law == "tau*") return {K, 36.0};
  if (law == "D" || law == "R") return {K, 1.0};
  throw InputError("unknown null law '" + law + "' (expected taustar, D or R)");
}

double null_law_variance(const NullLawSpec& spec) { return 2 * kZeta4 * kZeta4 * spec.scale() * spec.scale(); }

double truncation_variance(const NullLawSpec& spec) {
  double partial = 0;
  for (std::size_t i = spec.K; i >= 1; --i) partial += 1.0 / std::pow(static_cast<double>(i), 4);
  return 2 * (kZeta4 * kZeta4 - partial * partial) * spec.scale() * spec.scale();
}

std::vector<double> sample_null_Z(const NullLawSpec& spec, std::size_t count, std::uint64_t seed, unsigned workers) {
  if (spec.K < 1 || count < 1) throw InputError("null sampling needs K >= 1 and count >= 1");
  const std::size_t K = spec.K;
  std::vector<double> weight(K);
  for (std::size_t i = 0; i < K; ++i) weight[i] = 1.0 / static_cast<double>((i + 1) * (i + 1));
  std::vector<double> out(count);
  const double unit = 1.0 / kPi4;
  parallel_chunks(count, workers, [&](std::size_t b, std::size_t e, unsigned) {
    boost::random::normal_distribution<double> normal;
    for (std::size_t k = b; k < e; ++k) {
      Philox4x64 rng = stream(seed, k, Domain::kNullLaw);
      double z = 0;
      for (std::size_t i = 0; i < K; ++i) {
        double row = 0;
        for (std::size_t j = 0; j < K; ++j) {
          const double g = normal(rng);
          row += weight[j] * (g * g - 1.0);
        }
        z += weight[i] * row;
      }
      out[k] = spec.factor * (z * unit);
    }
  });
  return out;
}

}  // namespace symrank
