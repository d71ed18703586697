// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "symrank/simd/kernels.hpp"

namespace symrank::simd {
namespace {

// Lanes of 8 points: in-box mask as 8 bits.
inline unsigned lane_mask(const std::int32_t* const* cols, std::size_t d, std::size_t j, const __m256i* lo,
                          const __m256i* hi) {
  __m256i in = _mm256_set1_epi32(-1);
  for (std::size_t k = 0; k < d; ++k) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cols[k] + j));
    // outside iff v < lo or v > hi
    const __m256i out = _mm256_or_si256(_mm256_cmpgt_epi32(lo[k], v), _mm256_cmpgt_epi32(v, hi[k]));
    in = _mm256_andnot_si256(out, in);
  }
  return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(in)));
}

inline bool scalar_in(const std::int32_t* const* cols, std::size_t d, std::size_t j, const std::int32_t* lo,
                      const std::int32_t* hi) {
  for (std::size_t k = 0; k < d; ++k)
    if (cols[k][j] < lo[k] || cols[k][j] > hi[k]) return false;
  return true;
}

constexpr std::size_t kMaxDims = 64;

std::uint64_t count_box(const std::int32_t* const* cols, std::size_t d, std::size_t n, const std::int32_t* lo,
                        const std::int32_t* hi) {
  if (d > kMaxDims) return scalar_kernels().count_box(cols, d, n, lo, hi);
  __m256i vlo[kMaxDims], vhi[kMaxDims];
  for (std::size_t k = 0; k < d; ++k) {
    vlo[k] = _mm256_set1_epi32(lo[k]);
    vhi[k] = _mm256_set1_epi32(hi[k]);
  }
  std::uint64_t c = 0;
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) c += std::popcount(lane_mask(cols, d, j, vlo, vhi));
  for (; j < n; ++j) c += scalar_in(cols, d, j, lo, hi);
  return c;
}

void box_mask(const std::int32_t* const* cols, std::size_t d, std::size_t n, const std::int32_t* lo,
              const std::int32_t* hi, std::uint64_t* out) {
  if (d > kMaxDims) return scalar_kernels().box_mask(cols, d, n, lo, hi, out);
  __m256i vlo[kMaxDims], vhi[kMaxDims];
  for (std::size_t k = 0; k < d; ++k) {
    vlo[k] = _mm256_set1_epi32(lo[k]);
    vhi[k] = _mm256_set1_epi32(hi[k]);
  }
  const std::size_t words = words_for(n);
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) out[j / 64] |= static_cast<std::uint64_t>(lane_mask(cols, d, j, vlo, vhi)) << (j % 64);
  for (; j < n; ++j) out[j / 64] |= static_cast<std::uint64_t>(scalar_in(cols, d, j, lo, hi)) << (j % 64);
}

std::uint64_t popcount_and2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    c0 += _mm_popcnt_u64(a[w] & b[w]);
    c1 += _mm_popcnt_u64(a[w + 1] & b[w + 1]);
    c2 += _mm_popcnt_u64(a[w + 2] & b[w + 2]);
    c3 += _mm_popcnt_u64(a[w + 3] & b[w + 3]);
  }
  for (; w < words; ++w) c0 += _mm_popcnt_u64(a[w] & b[w]);
  return c0 + c1 + c2 + c3;
}

std::uint64_t popcount_and3(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* e,
                            std::size_t words) {
  std::uint64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    c0 += _mm_popcnt_u64(a[w] & b[w] & e[w]);
    c1 += _mm_popcnt_u64(a[w + 1] & b[w + 1] & e[w + 1]);
    c2 += _mm_popcnt_u64(a[w + 2] & b[w + 2] & e[w + 2]);
    c3 += _mm_popcnt_u64(a[w + 3] & b[w + 3] & e[w + 3]);
  }
  for (; w < words; ++w) c0 += _mm_popcnt_u64(a[w] & b[w] & e[w]);
  return c0 + c1 + c2 + c3;
}

void and2(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + w), _mm256_and_si256(va, vb));
  }
  for (; w < words; ++w) out[w] = a[w] & b[w];
}

}  // namespace

const Kernels* avx2_kernels_impl() {
  static const Kernels k{"avx2", count_box, box_mask, popcount_and2, popcount_and3, and2};
  return &k;
}

}  // namespace symrank::simd
