#include <algorithm>
#include <numeric>
#include <vector>

#include "common.hpp"
#include "symrank/fast/fast_stats.hpp"

namespace symrank {

namespace {

class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : t_(n + 1, 0) {}
  void add(std::size_t i) {
    for (; i < t_.size(); i += i & -i) ++t_[i];
  }
  std::int64_t prefix(std::size_t i) const {
    std::int64_t s = 0;
    for (; i > 0; i -= i & -i) s += t_[i];
    return s;
  }

 private:
  std::vector<std::int64_t> t_;
};

}  // namespace

Rational u_tau_fast(const Dataset& data) {
  if (data.r() != 1 || data.s() != 1) throw InputError("tau needs r = s = 1");
  const std::size_t n = data.n();
  detail::require_n(n, 2, "tau");
  const RankTable t = joint_ranks(data);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return t(a, 0) < t(b, 0); });

  // sum over pairs with x_i < x_j of sign(y_j - y_i)
  Fenwick seen(n);
  i128 total = 0;
  std::size_t inserted = 0;
  for (std::size_t g = 0; g < n;) {
    std::size_t h = g;
    while (h < n && t(order[h], 0) == t(order[g], 0)) ++h;
    for (std::size_t q = g; q < h; ++q) {
      const auto y = static_cast<std::size_t>(t(order[q], 1));
      const std::int64_t below = seen.prefix(y - 1), upto = seen.prefix(y);
      total += below - (static_cast<std::int64_t>(inserted) - upto);
    }
    for (std::size_t q = g; q < h; ++q) seen.add(static_cast<std::size_t>(t(order[q], 1)));
    inserted += h - g;
    g = h;
  }
  return ratio(to_big(2 * total), falling(n, 2));
}

}  // namespace symrank
