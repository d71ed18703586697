#include <cstdlib>
#include <cstring>

#include "symrank/simd/kernels.hpp"

namespace symrank::simd {

#if defined(SYMRANK_HAVE_AVX2)
const Kernels* avx2_kernels_impl();
#endif

const Kernels* avx2_kernels() {
#if defined(SYMRANK_HAVE_AVX2)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return ok ? avx2_kernels_impl() : nullptr;
#else
  return nullptr;
#endif
}

const Kernels& kernels() {
  static const Kernels* chosen = [] {
    const char* env = std::getenv("SYMRANK_SIMD");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return &scalar_kernels();
    const Kernels* k = avx2_kernels();
    return k != nullptr ? k : &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace symrank::simd
