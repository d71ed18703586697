#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace symrank {

// d x m matrix, column j is the point w^j. Column-major (point-contiguous).
template <typename T>
struct Matrix {
  std::size_t d = 0, m = 0;
  std::vector<T> v;

  Matrix() = default;
  Matrix(std::size_t d_, std::size_t m_) : d(d_), m(m_), v(d_ * m_) {}
  Matrix(std::size_t d_, std::size_t m_, std::vector<T> values) : d(d_), m(m_), v(std::move(values)) {}

  T& operator()(std::size_t i, std::size_t j) { return v[j * d + i]; }
  const T& operator()(std::size_t i, std::size_t j) const { return v[j * d + i]; }
  const T* point(std::size_t j) const { return v.data() + j * d; }
  bool operator==(const Matrix&) const = default;
};

using PointMatrix = Matrix<double>;
using RankMatrix = Matrix<std::int32_t>;

// Per-row strict-less ranks; ties share the minimal rank.
RankMatrix joint_ranks(const PointMatrix& w);

// Ranks of a single sequence.
std::vector<std::int32_t> min_ranks(const double* values, std::size_t count, std::size_t stride = 1);

}  // namespace symrank
