#include "symrank/core/dataset.hpp"

#include <cmath>
#include <string>

#include "symrank/core/ranks.hpp"
#include "symrank/error.hpp"

namespace symrank {

Dataset::Dataset(std::vector<double> column_major, std::size_t n, std::size_t r, std::size_t s)
    : values_(std::move(column_major)), n_(n), r_(r), s_(s) {
  if (r_ < 1 || s_ < 1) throw InputError("dataset needs r >= 1 and s >= 1");
  if (n_ < 1) throw InputError("dataset needs at least one observation");
  if (values_.size() != n_ * (r_ + s_)) throw InputError("dataset size does not match n*(r+s)");
  for (std::size_t c = 0; c < r_ + s_; ++c) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!std::isfinite(values_[c * n_ + i])) {
        throw InputError("non-finite value at row " + std::to_string(i + 1) + ", column " +
                         std::to_string(c + 1));
      }
    }
  }
}

Dataset Dataset::from_rows(const std::vector<std::vector<double>>& rows, std::size_t r, std::size_t s) {
  const std::size_t n = rows.size(), d = r + s;
  std::vector<double> v(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != d) throw InputError("row " + std::to_string(i + 1) + " has wrong width");
    for (std::size_t c = 0; c < d; ++c) v[c * n + i] = rows[i][c];
  }
  return Dataset(std::move(v), n, r, s);
}

Dataset Dataset::from_columns(const std::vector<std::vector<double>>& x_cols,
                              const std::vector<std::vector<double>>& y_cols) {
  if (x_cols.empty() || y_cols.empty()) throw InputError("need at least one X and one Y column");
  const std::size_t n = x_cols.front().size();
  std::vector<double> v;
  v.reserve(n * (x_cols.size() + y_cols.size()));
  for (const auto* group : {&x_cols, &y_cols}) {
    for (const auto& col : *group) {
      if (col.size() != n) throw InputError("columns have unequal length");
      v.insert(v.end(), col.begin(), col.end());
    }
  }
  return Dataset(std::move(v), n, x_cols.size(), y_cols.size());
}

Dataset Dataset::permute_y(std::span<const std::uint32_t> perm) const {
  Dataset out = *this;
  for (std::size_t c = r_; c < r_ + s_; ++c)
    for (std::size_t i = 0; i < n_; ++i) out.values_[c * n_ + i] = values_[c * n_ + perm[i]];
  return out;
}

Dataset Dataset::permute_rows(std::span<const std::uint32_t> perm) const {
  Dataset out = *this;
  for (std::size_t c = 0; c < r_ + s_; ++c)
    for (std::size_t i = 0; i < n_; ++i) out.values_[c * n_ + i] = values_[c * n_ + perm[i]];
  return out;
}

RankTable joint_ranks(const Dataset& data) {
  RankTable t;
  t.n = data.n();
  t.r = data.r();
  t.s = data.s();
  const std::size_t d = data.d();
  t.ranks.resize(t.n * d);
  for (std::size_t c = 0; c < d; ++c) {
    const auto col = min_ranks(data.column(c).data(), t.n);
    for (std::size_t i = 0; i < t.n; ++i) t.ranks[i * d + c] = col[i];
  }
  return t;
}

}  // namespace symrank
