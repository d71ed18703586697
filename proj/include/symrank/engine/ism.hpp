#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symrank/engine/population.hpp"
#include "symrank/engine/src_spec.hpp"
#include "symrank/rational.hpp"

namespace symrank {

// Orthant codes are bitmasks: bit k set means coordinate k lies strictly above the cut.
struct IsmSpec {
  std::size_t r = 0, s = 0;
  std::vector<std::uint32_t> L;                  // subset of {0,1}^r \ {0}
  std::vector<std::uint32_t> R;                  // subset of {0,1}^s \ {0}
  std::vector<std::vector<std::uint32_t>> E;     // blocks of X coordinates (0-based), may be empty
  std::vector<std::vector<std::uint32_t>> F;     // blocks of Y coordinates, aligned with E
};

enum class IsmMeasure { kJoint, kProduct };

std::vector<std::uint32_t> punctured_cube(std::size_t dim);

// t = 1 block for the joint measure; t = r + s singleton blocks for the full product measure.
IsmSpec make_ism(std::size_t r, std::size_t s, std::vector<std::uint32_t> L, std::vector<std::uint32_t> R,
                 IsmMeasure measure);

SrcSpec ism_to_src(const IsmSpec& ism);

struct SsrcBlock {
  std::vector<std::uint32_t> L, R;
};

SsrcSpec ssrc_partition(std::size_t r, std::size_t s, const std::vector<SsrcBlock>& blocks, IsmMeasure measure);

// Orthant probabilities of the binarization at a cut, plus block minors of M(x, y).
class Binarization {
 public:
  Binarization(std::size_t r, std::size_t s, std::vector<Rational> p) : r_(r), s_(s), p_(std::move(p)) {}

  std::size_t r() const { return r_; }
  std::size_t s() const { return s_; }
  // p(z)_l with l = lx | (ly << r)
  const std::vector<Rational>& orthants() const { return p_; }
  const Rational& M(std::uint32_t lx, std::uint32_t ly) const { return p_[lx | (ly << r_)]; }
  Rational block(const std::vector<std::uint32_t>& L, const std::vector<std::uint32_t>& R) const;
  // P(L x R) P(L' x R') - P(L' x R) P(L x R')
  Rational minor(const std::vector<std::uint32_t>& L, const std::vector<std::uint32_t>& Lp,
                 const std::vector<std::uint32_t>& R, const std::vector<std::uint32_t>& Rp) const;

 private:
  std::size_t r_, s_;
  std::vector<Rational> p_;
};

Binarization binarization_minors(const DiscreteDist& dist, const std::vector<double>& cut);

}  // namespace symrank
