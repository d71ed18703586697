#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "symrank/core/dataset.hpp"

namespace symrank::fixtures {

// Random dataset; with `ties` set, values come from a small pool and some rows are duplicated.
inline Dataset random_dataset(std::mt19937_64& gen, std::size_t n, std::size_t r, std::size_t s, bool ties) {
  const std::size_t d = r + s;
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> pool(0, std::max<int>(2, static_cast<int>(n / 2)));
  std::vector<std::vector<double>> rows(n, std::vector<double>(d));
  for (auto& row : rows)
    for (auto& v : row) v = ties ? static_cast<double>(pool(gen)) : normal(gen);
  if (ties && n > 2) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    rows[pick(gen)] = rows[pick(gen)];
  }
  return Dataset::from_rows(rows, r, s);
}

// Per-column strictly increasing map drawn at random.
inline Dataset monotone_warp(const Dataset& data, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> coef(0.2, 2.0);
  std::vector<double> v = data.values();
  for (std::size_t c = 0; c < data.d(); ++c) {
    const double a = coef(gen), b = coef(gen);
    for (std::size_t i = 0; i < data.n(); ++i) {
      double& x = v[c * data.n() + i];
      x = a * std::atan(x) + b * x * x * x + (c + 1);
    }
  }
  return Dataset(std::move(v), data.n(), data.r(), data.s());
}

}  // namespace symrank::fixtures
