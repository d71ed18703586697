#include "symrank/inference/generators.hpp"

#include <algorithm>
#include <cmath>

#include <boost/random/bernoulli_distribution.hpp>
#include <boost/random/normal_distribution.hpp>

#include "symrank/error.hpp"

namespace symrank {

namespace {

using Row = std::vector<double>;

Row draw(const GeneratorSpec& g, Philox4x64& rng) {
  boost::random::normal_distribution<double> normal;
  boost::random::bernoulli_distribution<double> coin;
  const std::string& name = g.name;
  if (name == "product-noise" || name == "exp-noise" || name == "mixed-expit") {
    const double x1 = normal(rng), x2 = normal(rng);
    double y;
    if (name == "product-noise") {
      y = x1 * x2 + g.sigma * normal(rng);
    } else if (name == "exp-noise") {
      y = std::exp(-(x1 - x2) * (x1 - x2)) + g.sigma * normal(rng);
    } else {
      const double p = 1.0 / (1.0 + std::exp(-6.0 * std::sin(x1 * x2)));
      y = boost::random::bernoulli_distribution<double>(p)(rng) ? 1.0 : 0.0;
    }
    return {x1, x2, y};
  }
  if (name == "xor2" || name == "xor3") {
    const std::size_t r = name == "xor2" ? 2 : 3;
    Row row(r + 1);
    int parity = 0;
    for (std::size_t k = 0; k < r; ++k) {
      const int bit = coin(rng) ? 1 : 0;
      row[k] = bit;
      parity ^= bit;
    }
    row[r] = parity;
    return row;
  }
  if (name == "gaussian-indep") {
    Row row(g.r + g.s);
    for (auto& v : row) v = normal(rng);
    return row;
  }
  // gaussian-correlated-y: X independent of (Y1, Y2), corr(Y1, Y2) = rho
  const double x = normal(rng), z1 = normal(rng), z2 = normal(rng);
  return {x, z1, g.rho * z1 + std::sqrt(1.0 - g.rho * g.rho) * z2};
}

}  // namespace

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names = {"product-noise", "exp-noise",      "xor2",
                                                 "xor3",          "mixed-expit",    "gaussian-indep",
                                                 "gaussian-correlated-y"};
  return names;
}

GeneratorSpec parse_generator(const std::string& name) {
  GeneratorSpec g;
  g.name = name;
  validate(g);
  return g;
}

void validate(const GeneratorSpec& g) {
  const auto& names = generator_names();
  if (std::find(names.begin(), names.end(), g.name) == names.end())
    throw InputError("unknown generator '" + g.name + "'");
  if (!(g.sigma >= 0) || !std::isfinite(g.sigma)) throw InputError("generator sigma must be finite and >= 0");
  if (!(g.rho >= -1 && g.rho <= 1)) throw InputError("generator rho must lie in [-1, 1]");
  if (g.r == 0 || g.s == 0) throw InputError("generator needs r, s >= 1");
}

std::size_t generator_r(const GeneratorSpec& g) {
  if (g.name == "gaussian-indep") return g.r;
  if (g.name == "gaussian-correlated-y") return 1;
  return g.name == "xor3" ? 3 : 2;
}

std::size_t generator_s(const GeneratorSpec& g) {
  if (g.name == "gaussian-indep") return g.s;
  return g.name == "gaussian-correlated-y" ? 2 : 1;
}

Dataset sample_joint(const GeneratorSpec& g, std::size_t n, Philox4x64& rng) {
  validate(g);
  std::vector<Row> rows(n);
  for (auto& row : rows) row = draw(g, rng);
  return Dataset::from_rows(rows, generator_r(g), generator_s(g));
}

Dataset sample_marginals(const GeneratorSpec& g, std::size_t n, Philox4x64& rng) {
  const Dataset a = sample_joint(g, n, rng), b = sample_joint(g, n, rng);
  std::vector<double> v(a.values().begin(), a.values().begin() + n * a.r());
  v.insert(v.end(), b.values().begin() + n * b.r(), b.values().end());
  return Dataset(std::move(v), n, a.r(), a.s());
}

}  // namespace symrank
