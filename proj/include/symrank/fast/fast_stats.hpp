#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "symrank/core/dataset.hpp"
#include "symrank/range/counter.hpp"
#include "symrank/rational.hpp"

namespace symrank {

struct FastOptions {
  Backend backend = Backend::kAuto;
  std::size_t memory_budget = default_memory_budget();
  unsigned workers = 1;
};

struct FastDiagnostics {
  std::string algorithm;
  std::string backend;
  double build_seconds = 0;
  std::uint64_t queries = 0;
  std::size_t memory_bytes = 0;
};

// Hoeffding's D through per-anchor orthant counts.
Rational u_d_fast(const Dataset& data, const FastOptions& opt = {}, FastDiagnostics* diag = nullptr);
// Blum-Kiefer-Rosenblatt R through a loop over distinct cut tuples.
Rational u_r_fast(const Dataset& data, const FastOptions& opt = {}, FastDiagnostics* diag = nullptr);

enum class PairMethod { kAuto, kPairSet, kBitset };

// kAuto: bitsets when they fit the budget, else pair-set trees when those fit.
Rational u_taustar_p_fast(const Dataset& data, PairMethod method = PairMethod::kAuto, const FastOptions& opt = {},
                          FastDiagnostics* diag = nullptr);
Rational u_taustar_j_fast(const Dataset& data, PairMethod method = PairMethod::kAuto, const FastOptions& opt = {},
                          FastDiagnostics* diag = nullptr);

// Kendall's tau, O(n log n).
Rational u_tau_fast(const Dataset& data);

// Bytes the two pair-set trees would need.
std::size_t pairset_bytes_estimate(std::size_t n, std::size_t d);
std::size_t bitset_bytes(std::size_t n);
PairMethod auto_pair_method(std::size_t n, std::size_t d, std::size_t budget);

}  // namespace symrank
