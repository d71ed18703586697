#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symrank/range/counter.hpp"

namespace symrank {

// Linear scan over structure-of-arrays columns with the SIMD box kernel.
class ScanCounter final : public RangeCounter {
 public:
  ScanCounter(const std::vector<std::int32_t>& points, std::size_t n, std::size_t d);

  std::size_t dims() const override { return d_; }
  std::size_t size() const override { return n_; }
  using RangeCounter::count;
  std::uint64_t count(const std::int32_t* lo, const std::int32_t* hi) const override;
  std::size_t memory_bytes() const override { return cols_.size() * sizeof(std::int32_t); }
  Backend backend() const override { return Backend::kScan; }

 private:
  std::size_t n_, d_;
  std::vector<std::int32_t> cols_;
  std::vector<const std::int32_t*> col_ptrs_;
};

}  // namespace symrank
