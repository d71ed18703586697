#include "symrank/inference/rng.hpp"

namespace symrank {

namespace {

constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ull, kMul1 = 0xCA5A826395121157ull;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull, kWeyl1 = 0xBB67AE8584CAA73Bull;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

}  // namespace

Philox4x64::Counter Philox4x64::block(Counter c, Key k) {
  for (int round = 0; round < 10; ++round) {
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, c[0], hi0, lo0);
    mulhilo(kMul1, c[2], hi1, lo1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    k[0] += kWeyl0;
    k[1] += kWeyl1;
  }
  return c;
}

Philox4x64::result_type Philox4x64::operator()() {
  if (used_ == 4) {
    buf_ = block(ctr_, key_);
    if (++ctr_[0] == 0) ++ctr_[1];
    used_ = 0;
  }
  return buf_[used_++];
}

double Philox4x64::uniform() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }

}  // namespace symrank
