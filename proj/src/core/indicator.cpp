#include "symrank/core/indicator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "symrank/error.hpp"

namespace symrank {
namespace {

inline bool leq(const double* a, const double* b, std::size_t d) {
  for (std::size_t k = 0; k < d; ++k)
    if (!(a[k] <= b[k])) return false;
  return true;
}

inline bool less(const double* a, const double* b, std::size_t d) {
  for (std::size_t k = 0; k < d; ++k)
    if (!(a[k] < b[k])) return false;
  return true;
}

// w1, w2 <= c coordinatewise and neither w3 nor w4 <= c, where c_k = w[offset + k][k].
inline bool hoeff_r(const double* const* w, std::size_t d, std::size_t offset) {
  bool w3_below = true, w4_below = true;
  for (std::size_t k = 0; k < d; ++k) {
    const double c = w[offset + k][k];
    if (w[0][k] > c || w[1][k] > c) return false;
    w3_below = w3_below && w[2][k] <= c;
    w4_below = w4_below && w[3][k] <= c;
  }
  return !w3_below && !w4_below;
}

inline bool ism(const double* const* w, std::size_t d, const IsmBlocks& b) {
  std::uint32_t code3 = 0, code4 = 0;
  for (std::size_t k = 0; k < d; ++k) {
    const double c = w[4 + b.block[k]][k];
    if (w[0][k] > c || w[1][k] > c) return false;
    code3 |= static_cast<std::uint32_t>(w[2][k] > c) << k;
    code4 |= static_cast<std::uint32_t>(w[3][k] > c) << k;
  }
  return b.orthants[code3] && b.orthants[code4];
}

}  // namespace

const char* indicator_name(IndicatorKind kind) {
  switch (kind) {
    case IndicatorKind::kTau: return "tau";
    case IndicatorKind::kTau2: return "tau2";
    case IndicatorKind::kTauStar: return "taustar";
    case IndicatorKind::kHoeffD: return "hoeffD";
    case IndicatorKind::kHoeffR: return "hoeffR";
    case IndicatorKind::kPartialP: return "partialP";
    case IndicatorKind::kJointJ: return "jointJ";
    case IndicatorKind::kIsm: return "ism";
    case IndicatorKind::kCustom: return "custom";
  }
  return "?";
}

bool RankIndicator::operator()(const double* const* w) const {
  const std::size_t d = dim_;
  switch (kind_) {
    case IndicatorKind::kTau:
      return w[0][0] < w[1][0];
    case IndicatorKind::kTau2:
      return w[0][0] < w[3][0] && w[1][0] < w[2][0];
    case IndicatorKind::kTauStar:
      return std::max(w[0][0], w[1][0]) < std::min(w[2][0], w[3][0]);
    case IndicatorKind::kHoeffD:
      return leq(w[0], w[4], d) && leq(w[1], w[4], d) && !leq(w[2], w[4], d) && !leq(w[3], w[4], d);
    case IndicatorKind::kHoeffR:
      return hoeff_r(w, d, cut_offset_);
    case IndicatorKind::kPartialP:
      return !leq(w[2], w[0], d) && !leq(w[2], w[1], d) && !leq(w[3], w[0], d) && !leq(w[3], w[1], d);
    case IndicatorKind::kJointJ:
      return less(w[0], w[2], d) && less(w[0], w[3], d) && less(w[1], w[2], d) && less(w[1], w[3], d);
    case IndicatorKind::kIsm:
      return ism(w, d, *ism_);
    case IndicatorKind::kCustom:
      return fn_(w, d);
  }
  return false;
}

bool RankIndicator::evaluate(const PointMatrix& w) const {
  if (w.d != dim_ || w.m != order_) throw InputError("indicator " + name_ + ": input has wrong shape");
  std::vector<const double*> pts(w.m);
  for (std::size_t j = 0; j < w.m; ++j) pts[j] = w.point(j);
  return (*this)(pts.data());
}

RankIndicator builtin_indicator(IndicatorKind kind, std::size_t d) {
  if (d < 1) throw InputError("indicator dimension must be >= 1");
  RankIndicator ind;
  ind.kind_ = kind;
  ind.dim_ = d;
  ind.name_ = indicator_name(kind);
  switch (kind) {
    case IndicatorKind::kTau:
      ind.order_ = 2;
      break;
    case IndicatorKind::kTau2:
    case IndicatorKind::kTauStar:
    case IndicatorKind::kPartialP:
    case IndicatorKind::kJointJ:
      ind.order_ = 4;
      break;
    case IndicatorKind::kHoeffD:
      ind.order_ = 5;
      break;
    case IndicatorKind::kHoeffR:
      ind.order_ = 4 + d;
      break;
    default:
      throw InputError(std::string("no builtin indicator of kind ") + indicator_name(kind));
  }
  const bool univariate =
      kind == IndicatorKind::kTau || kind == IndicatorKind::kTau2 || kind == IndicatorKind::kTauStar;
  if (univariate && d != 1) throw InputError(ind.name_ + " requires d = 1");
  return ind;
}

RankIndicator hoeffr_indicator(std::size_t d, std::size_t order, std::size_t cut_offset) {
  if (cut_offset < 4 || cut_offset + d > order) throw InputError("hoeffR cut points out of range");
  RankIndicator ind = builtin_indicator(IndicatorKind::kHoeffR, d);
  ind.order_ = order;
  ind.cut_offset_ = cut_offset;
  return ind;
}

RankIndicator ism_indicator(IsmBlocks blocks, std::size_t d) {
  if (blocks.block.size() != d) throw InputError("ism indicator: block map has wrong length");
  if (blocks.orthants.size() != (std::size_t{1} << d)) throw InputError("ism indicator: orthant map has wrong size");
  for (auto b : blocks.block)
    if (b >= blocks.blocks) throw InputError("ism indicator: block id out of range");
  RankIndicator ind;
  ind.kind_ = IndicatorKind::kIsm;
  ind.dim_ = d;
  ind.order_ = 4 + blocks.blocks;
  ind.name_ = "ism";
  ind.ism_ = std::make_shared<const IsmBlocks>(std::move(blocks));
  return ind;
}

RankIndicator RankIndicator::custom(std::string name, std::size_t order, std::size_t dim, Evaluator fn,
                                    std::uint64_t probe_seed) {
  if (order < 1 || dim < 1) throw InputError("custom indicator needs order >= 1 and dim >= 1");
  if (!fn) throw InputError("custom indicator needs an evaluator");
  RankIndicator ind;
  ind.kind_ = IndicatorKind::kCustom;
  ind.order_ = order;
  ind.dim_ = dim;
  ind.name_ = std::move(name);
  ind.fn_ = std::move(fn);

  // Compare raw values against their ranks; small integer pools force ties.
  std::mt19937_64 gen(probe_seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(order));
  std::uniform_real_distribution<double> warp(0.1, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    PointMatrix w(dim, order);
    const double a = warp(gen);
    for (auto& v : w.v) v = std::exp(a * pick(gen)) - 7.0;
    const RankMatrix rk = joint_ranks(w);
    PointMatrix wr(dim, order);
    for (std::size_t k = 0; k < w.v.size(); ++k) wr.v[k] = rk.v[k];
    if (ind.evaluate(w) != ind.evaluate(wr)) {
      throw ValidationError("custom indicator '" + ind.name_ + "' is not rank-dependent (probe " +
                            std::to_string(trial) + ")");
    }
  }
  return ind;
}

}  // namespace symrank
