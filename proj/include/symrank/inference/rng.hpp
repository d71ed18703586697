#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace symrank {

inline constexpr const char* kRngName = "philox4x64-10";

// Counter-based Philox4x64 with 10 rounds. A stream is keyed by (seed, stream);
// the counter is {block, 0, domain, sub}, so (seed, stream, domain, sub) names an
// independent sequence of 2^64 blocks of four outputs.
class Philox4x64 {
 public:
  using result_type = std::uint64_t;
  using Counter = std::array<std::uint64_t, 4>;
  using Key = std::array<std::uint64_t, 2>;

  Philox4x64(std::uint64_t seed, std::uint64_t stream, std::uint64_t domain = 0, std::uint64_t sub = 0)
      : key_{seed, stream}, ctr_{0, 0, domain, sub} {}

  static Counter block(Counter ctr, Key key);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();
  // Uniform on (0, 1) with 53 random bits.
  double uniform();

 private:
  Key key_;
  Counter ctr_;
  Counter buf_{};
  unsigned used_ = 4;
};

// Stream domains keep different uses of one seed apart.
enum class Domain : std::uint64_t { kPermutation = 1, kReference = 2, kSample = 3, kNullLaw = 4 };

inline Philox4x64 stream(std::uint64_t seed, std::uint64_t index, Domain domain, std::uint64_t sub = 0) {
  return Philox4x64(seed, index, static_cast<std::uint64_t>(domain), sub);
}

}  // namespace symrank
