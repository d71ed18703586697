#include <gtest/gtest.h>

#include <random>

#include "symrank/simd/kernels.hpp"

using namespace symrank::simd;


TEST(Simd, DispatchPicksATable) {
  const Kernels& k = kernels();
  EXPECT_TRUE(std::string(k.name) == "scalar" || std::string(k.name) == "avx2");
}

TEST(Simd, BoxKernelsMatchScalar) {
  const Kernels* v = avx2_kernels();
  if (v == nullptr) GTEST_SKIP() << "AVX2 not available";
  const Kernels& s = scalar_kernels();
  std::mt19937_64 gen(1);
  std::uniform_int_distribution<int> coord(-5, 40);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + trial % 5, n = trial % 150;
    std::vector<std::vector<std::int32_t>> cols(d, std::vector<std::int32_t>(n));
    std::vector<const std::int32_t*> ptrs(d);
    for (std::size_t k = 0; k < d; ++k) {
      for (auto& x : cols[k]) x = coord(gen);
      ptrs[k] = cols[k].data();
    }
    std::vector<std::int32_t> lo(d), hi(d);
    for (std::size_t k = 0; k < d; ++k) {
      lo[k] = coord(gen);
      hi[k] = lo[k] + coord(gen);
    }
    ASSERT_EQ(v->count_box(ptrs.data(), d, n, lo.data(), hi.data()), s.count_box(ptrs.data(), d, n, lo.data(), hi.data()));
    std::vector<std::uint64_t> a(words_for(n) + 1, ~0ull), b(words_for(n) + 1, ~0ull);
    v->box_mask(ptrs.data(), d, n, lo.data(), hi.data(), a.data());
    s.box_mask(ptrs.data(), d, n, lo.data(), hi.data(), b.data());
    for (std::size_t w = 0; w < words_for(n); ++w) ASSERT_EQ(a[w], b[w]);
  }
}

TEST(Simd, PopcountKernelsMatchScalar) {
  const Kernels* v = avx2_kernels();
  if (v == nullptr) GTEST_SKIP() << "AVX2 not available";
  const Kernels& s = scalar_kernels();
  std::mt19937_64 gen(2);
  for (std::size_t words = 0; words < 70; ++words) {
    std::vector<std::uint64_t> a(words), b(words), c(words), o1(words), o2(words);
    for (std::size_t w = 0; w < words; ++w) a[w] = gen(), b[w] = gen(), c[w] = gen();
    ASSERT_EQ(v->popcount_and2(a.data(), b.data(), words), s.popcount_and2(a.data(), b.data(), words));
    ASSERT_EQ(v->popcount_and3(a.data(), b.data(), c.data(), words),
              s.popcount_and3(a.data(), b.data(), c.data(), words));
    v->and2(o1.data(), a.data(), b.data(), words);
    s.and2(o2.data(), a.data(), b.data(), words);
    ASSERT_EQ(o1, o2);
  }
}
