#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace symrank {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using i128 = __int128;

inline BigInt to_big(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-out) : out;
}

inline Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num, den); }
inline Rational ratio(i128 num, i128 den) { return Rational(to_big(num), to_big(den)); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// "p/q" (or "p" when q == 1)
inline std::string to_string(const Rational& q) {
  std::string s = boost::multiprecision::numerator(q).str();
  const BigInt den = boost::multiprecision::denominator(q);
  if (den != 1) s += "/" + den.str();
  return s;
}

// Falling factorial n (n-1) ... (n-k+1).
inline BigInt falling(std::uint64_t n, std::uint64_t k) {
  BigInt out = 1;
  for (std::uint64_t i = 0; i < k; ++i) out *= (n - i);
  return out;
}

}  // namespace symrank
