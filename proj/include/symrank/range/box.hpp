#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace symrank {

struct Bound {
  double value = 0;
  bool open = false;
  bool infinite = true;

  static Bound closed(double v) { return {v, false, false}; }
  static Bound strict(double v) { return {v, true, false}; }
  static Bound none() { return {}; }
};

// Axis-aligned box with per-side open/closed flags; infinite sides are unbounded.
struct Box {
  std::vector<Bound> lower, upper;

  explicit Box(std::size_t d = 0) : lower(d), upper(d) {}
  std::size_t dims() const { return lower.size(); }
  bool contains(const double* p) const;
};

// Inclusive integer bounds in rank space.
struct IntBox {
  std::vector<std::int32_t> lo, hi;

  explicit IntBox(std::size_t d = 0)
      : lo(d, std::numeric_limits<std::int32_t>::min()), hi(d, std::numeric_limits<std::int32_t>::max()) {}
  std::size_t dims() const { return lo.size(); }
  bool empty() const;
};

// Maps real-valued boxes onto the joint-rank grid of a fixed point set, exactly.
class RankSpace {
 public:
  RankSpace() = default;
  // points: n row-major d-vectors
  RankSpace(const std::vector<double>& points, std::size_t n, std::size_t d);

  std::size_t dims() const { return sorted_.size(); }
  // Ranks of the stored points (strict-less count + 1), row-major.
  const std::vector<std::int32_t>& ranks() const { return ranks_; }
  IntBox to_ranks(const Box& box) const;

 private:
  std::vector<std::vector<double>> sorted_;
  std::vector<std::int32_t> ranks_;
};

// Integer box with open/closed flags applied by +-1 shifts.
IntBox shift_bounds(const std::vector<std::int32_t>& lo, const std::vector<bool>& lo_open,
                    const std::vector<std::int32_t>& hi, const std::vector<bool>& hi_open);

}  // namespace symrank
