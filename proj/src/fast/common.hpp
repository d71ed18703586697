#pragma once

#include <chrono>
#include <string>

#include "symrank/error.hpp"
#include "symrank/rational.hpp"

namespace symrank::detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline void require_n(std::size_t n, std::size_t m, const char* what) {
  if (n < m) throw InputError(std::string(what) + " needs n >= " + std::to_string(m) + " (n = " + std::to_string(n) + ")");
}

// A + B - 2C for one anchor's orthant counts.
inline i128 orthant_term(i128 c11, i128 c10, i128 c01, i128 c00) {
  const i128 a = c11 * (c11 - 1) * c00 * (c00 - 1);
  const i128 b = c10 * (c10 - 1) * c01 * (c01 - 1);
  const i128 c = c11 * c10 * c01 * c00;
  return a + b - 2 * c;
}

}  // namespace symrank::detail
