#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symrank/range/counter.hpp"

namespace symrank {

// B(i_1..i_d) = #{points p : p <= i coordinatewise}, indices in [0, side).
class PrefixTensor final : public RangeCounter {
 public:
  PrefixTensor(const std::vector<std::int32_t>& points, std::size_t n, std::size_t d, std::size_t side,
               std::size_t memory_budget);

  std::size_t dims() const override { return d_; }
  std::size_t size() const override { return n_; }
  std::size_t side() const { return side_; }
  using RangeCounter::count;
  std::uint64_t count(const std::int32_t* lo, const std::int32_t* hi) const override;
  std::uint64_t dominated(const std::int32_t* hi) const override;
  std::size_t memory_bytes() const override { return b_.size() * sizeof(std::uint32_t); }
  Backend backend() const override { return Backend::kTensor; }

  std::uint32_t at(const std::int32_t* idx) const;
  // #points in (l_1,u_1] x ... x (l_d,u_d]; requires 0 <= l <= u < side.
  std::uint64_t half_open(const std::int32_t* l, const std::int32_t* u) const;

 private:
  std::size_t n_, d_, side_;
  std::vector<std::size_t> stride_;
  std::vector<std::uint32_t> b_;
};

}  // namespace symrank
