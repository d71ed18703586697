#include <bit>

#include "symrank/simd/kernels.hpp"

namespace symrank::simd {
namespace {

std::uint64_t count_box(const std::int32_t* const* cols, std::size_t d, std::size_t n, const std::int32_t* lo,
                        const std::int32_t* hi) {
  std::uint64_t c = 0;
  for (std::size_t j = 0; j < n; ++j) {
    bool in = true;
    for (std::size_t k = 0; k < d && in; ++k) in = cols[k][j] >= lo[k] && cols[k][j] <= hi[k];
    c += in;
  }
  return c;
}

void box_mask(const std::int32_t* const* cols, std::size_t d, std::size_t n, const std::int32_t* lo,
              const std::int32_t* hi, std::uint64_t* out) {
  for (std::size_t w = 0; w < words_for(n); ++w) out[w] = 0;
  for (std::size_t j = 0; j < n; ++j) {
    bool in = true;
    for (std::size_t k = 0; k < d && in; ++k) in = cols[k][j] >= lo[k] && cols[k][j] <= hi[k];
    out[j / 64] |= static_cast<std::uint64_t>(in) << (j % 64);
  }
}

std::uint64_t popcount_and2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint64_t c = 0;
  for (std::size_t w = 0; w < words; ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

std::uint64_t popcount_and3(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* e,
                            std::size_t words) {
  std::uint64_t c = 0;
  for (std::size_t w = 0; w < words; ++w) c += std::popcount(a[w] & b[w] & e[w]);
  return c;
}

void and2(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) out[w] = a[w] & b[w];
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{"scalar", count_box, box_mask, popcount_and2, popcount_and3, and2};
  return k;
}

}  // namespace symrank::simd
