#pragma once

#include <cstdint>

#include "symrank/core/dataset.hpp"
#include "symrank/core/ranks.hpp"
#include "symrank/engine/src_spec.hpp"
#include "symrank/rational.hpp"

namespace symrank {

struct EnumerationOptions {
  std::uint64_t budget = 100'000'000;  // ordered tuples
  unsigned workers = 1;
};

// k(z) = a_{I_X}(x) * a_{I_Y}(y); z is (r+s) x m. Scale not applied.
std::int64_t unsym_kernel(const SrcSpec& spec, const PointMatrix& z);

// (1/m!) sum over S_m of k(gamma z). Scale not applied.
Rational sym_kernel(const SrcSpec& spec, const PointMatrix& z);
// (|H|/m!) sum over S_m of I_X(gamma x) a_{I_Y}(gamma y).
Rational sym_kernel_rewrite(const SrcSpec& spec, const PointMatrix& z);

// scale * C(n,m)^{-1} * sum over m-subsets of sym_kernel.
Rational u_stat_naive(const SrcSpec& spec, const Dataset& data, const EnumerationOptions& opt = {});
Rational u_stat_naive(const SsrcSpec& spec, const Dataset& data, const EnumerationOptions& opt = {});

// Same value by brute force: every m-subset, every reordering, full two-factor kernel.
Rational u_stat_naive_full(const SrcSpec& spec, const Dataset& data, const EnumerationOptions& opt = {});

}  // namespace symrank
