#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace symrank {

// n observations of Z = (X, Y) with X in R^r and Y in R^s.
// Stored column-major: column c occupies [c*n, (c+1)*n).
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<double> column_major, std::size_t n, std::size_t r, std::size_t s);

  static Dataset from_rows(const std::vector<std::vector<double>>& rows, std::size_t r, std::size_t s);
  static Dataset from_columns(const std::vector<std::vector<double>>& x_cols,
                              const std::vector<std::vector<double>>& y_cols);

  std::size_t n() const { return n_; }
  std::size_t r() const { return r_; }
  std::size_t s() const { return s_; }
  std::size_t d() const { return r_ + s_; }

  double operator()(std::size_t i, std::size_t col) const { return values_[col * n_ + i]; }
  std::span<const double> column(std::size_t col) const { return {values_.data() + col * n_, n_}; }
  const std::vector<double>& values() const { return values_; }

  // Row i of Y replaced by row perm[i] of Y; X untouched.
  Dataset permute_y(std::span<const std::uint32_t> perm) const;
  // Rows reordered jointly: row i becomes row perm[i].
  Dataset permute_rows(std::span<const std::uint32_t> perm) const;

 private:
  std::vector<double> values_;
  std::size_t n_ = 0, r_ = 0, s_ = 0;
};

// Joint ranks of a Dataset: rank(i, c) = 1 + #{k : v(k, c) < v(i, c)}.
// Stored row-major so that each observation is a contiguous d-vector.
struct RankTable {
  std::size_t n = 0, r = 0, s = 0;
  std::vector<std::int32_t> ranks;

  std::size_t d() const { return r + s; }
  const std::int32_t* point(std::size_t i) const { return ranks.data() + i * d(); }
  std::int32_t operator()(std::size_t i, std::size_t c) const { return ranks[i * d() + c]; }
};

RankTable joint_ranks(const Dataset& data);

}  // namespace symrank
