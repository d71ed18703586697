#include "symrank/range/scan_counter.hpp"

#include "symrank/error.hpp"
#include "symrank/simd/kernels.hpp"

namespace symrank {

ScanCounter::ScanCounter(const std::vector<std::int32_t>& points, std::size_t n, std::size_t d)
    : n_(n), d_(d), cols_(n * d), col_ptrs_(d) {
  if (points.size() != n * d) throw InputError("scan counter: point array has wrong size");
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < n; ++i) cols_[k * n + i] = points[i * d + k];
    col_ptrs_[k] = cols_.data() + k * n;
  }
}

std::uint64_t ScanCounter::count(const std::int32_t* lo, const std::int32_t* hi) const {
  return simd::kernels().count_box(col_ptrs_.data(), d_, n_, lo, hi);
}

}  // namespace symrank
