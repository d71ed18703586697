#include "symrank/range/prefix_tensor.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "symrank/error.hpp"

namespace symrank {

PrefixTensor::PrefixTensor(const std::vector<std::int32_t>& points, std::size_t n, std::size_t d, std::size_t side,
                           std::size_t memory_budget)
    : n_(n), d_(d), side_(side), stride_(d) {
  if (d == 0 || side < 2) throw InputError("prefix tensor needs d >= 1 and side >= 2");
  if (d > 16) throw CapacityError("prefix tensor limited to 16 dimensions");
  if (points.size() != n * d) throw InputError("prefix tensor: point array has wrong size");
  const std::size_t bytes = tensor_bytes(side, d);
  if (bytes > memory_budget) {
    throw CapacityError("prefix tensor needs " + std::to_string(bytes) + " bytes, budget is " +
                        std::to_string(memory_budget) + "; use the tree backend");
  }
  std::size_t total = 1;
  for (std::size_t k = d; k-- > 0;) {
    stride_[k] = total;
    total *= side;
  }
  b_.assign(total, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t off = 0;
    for (std::size_t k = 0; k < d; ++k) {
      const std::int32_t c = points[i * d + k];
      if (c < 1 || static_cast<std::size_t>(c) >= side) {
        throw InputError("prefix tensor: coordinate " + std::to_string(c) + " outside [1, " +
                         std::to_string(side - 1) + "]");
      }
      off += static_cast<std::size_t>(c) * stride_[k];
    }
    ++b_[off];
  }
  // Cumulative sums along each axis give B(i) = #{p <= i}.
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t s = stride_[k];
    for (std::size_t i = 0; i < total; ++i)
      if ((i / s) % side != 0) b_[i] += b_[i - s];
  }
}

std::uint32_t PrefixTensor::at(const std::int32_t* idx) const {
  std::size_t off = 0;
  for (std::size_t k = 0; k < d_; ++k) {
    if (idx[k] < 0 || static_cast<std::size_t>(idx[k]) >= side_) throw InputError("prefix tensor index out of range");
    off += static_cast<std::size_t>(idx[k]) * stride_[k];
  }
  return b_[off];
}

std::uint64_t PrefixTensor::half_open(const std::int32_t* l, const std::int32_t* u) const {
  for (std::size_t k = 0; k < d_; ++k) {
    if (l[k] < 0 || u[k] < l[k] || static_cast<std::size_t>(u[k]) >= side_) {
      throw InputError("prefix tensor corner out of range");
    }
  }
  std::int64_t acc = 0;
  for (std::uint32_t mask = 0; mask < (1u << d_); ++mask) {
    std::size_t off = 0;
    bool zero = false;
    for (std::size_t k = 0; k < d_; ++k) {
      const std::int32_t c = (mask >> k) & 1 ? l[k] : u[k];
      zero = zero || c == 0;
      off += static_cast<std::size_t>(c) * stride_[k];
    }
    if (zero) continue;
    acc += (std::popcount(mask) % 2 == 0) ? b_[off] : -static_cast<std::int64_t>(b_[off]);
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t PrefixTensor::count(const std::int32_t* lo, const std::int32_t* hi) const {
  std::int32_t l[64], u[64];
  const std::int32_t top = static_cast<std::int32_t>(side_ - 1);
  for (std::size_t k = 0; k < d_; ++k) {
    l[k] = std::clamp<std::int64_t>(static_cast<std::int64_t>(lo[k]) - 1, 0, top);
    u[k] = std::clamp<std::int64_t>(hi[k], 0, top);
    if (l[k] >= u[k]) return 0;
  }
  return half_open(l, u);
}

std::uint64_t PrefixTensor::dominated(const std::int32_t* hi) const {
  std::size_t off = 0;
  for (std::size_t k = 0; k < d_; ++k) {
    if (hi[k] < 1) return 0;
    off += std::min<std::size_t>(static_cast<std::size_t>(hi[k]), side_ - 1) * stride_[k];
  }
  return b_[off];
}

}  // namespace symrank
