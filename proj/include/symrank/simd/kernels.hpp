#pragma once

#include <cstddef>
#include <cstdint>

namespace symrank::simd {

// Inner loops shared by the scan counter and the direct tau* paths.
// Columns are structure-of-arrays int32 rank coordinates; bounds are inclusive.
struct Kernels {
  const char* name;
  std::uint64_t (*count_box)(const std::int32_t* const* cols, std::size_t d, std::size_t n, const std::int32_t* lo,
                             const std::int32_t* hi);
  // Bit j of out set iff point j lies in the box; words = ceil(n/64), tail bits cleared.
  void (*box_mask)(const std::int32_t* const* cols, std::size_t d, std::size_t n, const std::int32_t* lo,
                   const std::int32_t* hi, std::uint64_t* out);
  std::uint64_t (*popcount_and2)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  std::uint64_t (*popcount_and3)(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
                                 std::size_t words);
  void (*and2)(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
};

const Kernels& scalar_kernels();
// nullptr when the build or the host lacks AVX2.
const Kernels* avx2_kernels();
// Best available; SYMRANK_SIMD=scalar forces the scalar table.
const Kernels& kernels();

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace symrank::simd
