#include "symrank/range/box.hpp"

#include <algorithm>

#include "symrank/core/ranks.hpp"
#include "symrank/error.hpp"

namespace symrank {

bool Box::contains(const double* p) const {
  for (std::size_t k = 0; k < dims(); ++k) {
    const Bound& l = lower[k];
    const Bound& u = upper[k];
    if (!l.infinite && (l.open ? !(p[k] > l.value) : !(p[k] >= l.value))) return false;
    if (!u.infinite && (u.open ? !(p[k] < u.value) : !(p[k] <= u.value))) return false;
  }
  return true;
}

bool IntBox::empty() const {
  for (std::size_t k = 0; k < dims(); ++k)
    if (lo[k] > hi[k]) return true;
  return false;
}

RankSpace::RankSpace(const std::vector<double>& points, std::size_t n, std::size_t d)
    : sorted_(d), ranks_(n * d) {
  if (points.size() != n * d) throw InputError("RankSpace: point array has wrong size");
  for (std::size_t k = 0; k < d; ++k) {
    auto& col = sorted_[k];
    col.resize(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = points[i * d + k];
    const auto r = min_ranks(points.data() + k, n, d);
    for (std::size_t i = 0; i < n; ++i) ranks_[i * d + k] = r[i];
    std::sort(col.begin(), col.end());
  }
}

IntBox RankSpace::to_ranks(const Box& box) const {
  if (box.dims() != dims()) throw InputError("box dimension does not match point set");
  IntBox out(dims());
  for (std::size_t k = 0; k < dims(); ++k) {
    const auto& col = sorted_[k];
    const auto below = [&](double x) {  // #{v < x}
      return static_cast<std::int32_t>(std::lower_bound(col.begin(), col.end(), x) - col.begin());
    };
    const auto at_most = [&](double x) {  // #{v <= x}
      return static_cast<std::int32_t>(std::upper_bound(col.begin(), col.end(), x) - col.begin());
    };
    const Bound& l = box.lower[k];
    const Bound& u = box.upper[k];
    if (!l.infinite) out.lo[k] = 1 + (l.open ? at_most(l.value) : below(l.value));
    if (!u.infinite) out.hi[k] = u.open ? below(u.value) : at_most(u.value);
  }
  return out;
}

IntBox shift_bounds(const std::vector<std::int32_t>& lo, const std::vector<bool>& lo_open,
                    const std::vector<std::int32_t>& hi, const std::vector<bool>& hi_open) {
  IntBox out(lo.size());
  for (std::size_t k = 0; k < lo.size(); ++k) {
    out.lo[k] = lo[k] + (lo_open[k] ? 1 : 0);
    out.hi[k] = hi[k] - (hi_open[k] ? 1 : 0);
  }
  return out;
}

}  // namespace symrank
