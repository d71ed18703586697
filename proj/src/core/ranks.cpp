#include "symrank/core/ranks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symrank/error.hpp"

namespace symrank {

std::vector<std::int32_t> min_ranks(const double* values, std::size_t count, std::size_t stride) {
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return values[a * stride] < values[b * stride]; });
  std::vector<std::int32_t> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double v = values[order[k] * stride];
    if (k > 0 && values[order[k - 1] * stride] == v) {
      out[order[k]] = out[order[k - 1]];
    } else {
      out[order[k]] = static_cast<std::int32_t>(k + 1);
    }
  }
  return out;
}

RankMatrix joint_ranks(const PointMatrix& w) {
  for (double x : w.v)
    if (!std::isfinite(x)) throw InputError("joint_ranks: non-finite entry");
  RankMatrix out(w.d, w.m);
  for (std::size_t i = 0; i < w.d; ++i) {
    const auto row = min_ranks(w.v.data() + i, w.m, w.d);
    for (std::size_t j = 0; j < w.m; ++j) out(i, j) = row[j];
  }
  return out;
}

}  // namespace symrank
