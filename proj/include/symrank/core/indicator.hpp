#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "symrank/core/ranks.hpp"

namespace symrank {

enum class IndicatorKind { kTau, kTau2, kTauStar, kHoeffD, kHoeffR, kPartialP, kJointJ, kIsm, kCustom };

const char* indicator_name(IndicatorKind kind);

// Data for the ISM indicators: cut coordinate c lives in point 4 + block[c];
// points 3 and 4 must land in an orthant listed in `orthants`.
struct IsmBlocks {
  std::vector<std::uint32_t> block;      // per coordinate, 0-based block id
  std::vector<std::uint8_t> orthants;    // bitmap over 2^d orthant codes
  std::size_t blocks = 0;
};

// 0/1 function of m points in R^d that depends only on their joint ranks.
// Points are passed as an array of m pointers to d contiguous doubles.
class RankIndicator {
 public:
  using Evaluator = std::function<bool(const double* const* points, std::size_t d)>;

  RankIndicator() = default;

  IndicatorKind kind() const { return kind_; }
  std::size_t order() const { return order_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }

  bool operator()(const double* const* pts) const;
  bool evaluate(const PointMatrix& w) const;

  // Rank-dependence is probed on 100 random tied inputs; throws ValidationError on mismatch.
  static RankIndicator custom(std::string name, std::size_t order, std::size_t dim, Evaluator fn,
                              std::uint64_t probe_seed = 0x5eed);

  friend RankIndicator builtin_indicator(IndicatorKind, std::size_t);
  friend RankIndicator hoeffr_indicator(std::size_t d, std::size_t order, std::size_t cut_offset);
  friend RankIndicator ism_indicator(IsmBlocks blocks, std::size_t d);

 private:
  IndicatorKind kind_ = IndicatorKind::kTau;
  std::size_t order_ = 0, dim_ = 0, cut_offset_ = 4;
  std::string name_;
  std::shared_ptr<const IsmBlocks> ism_;
  Evaluator fn_;
};

RankIndicator builtin_indicator(IndicatorKind kind, std::size_t d);

// I_{R,d} embedded at cut points cut_offset..cut_offset+d-1 of an order-`order` tuple.
RankIndicator hoeffr_indicator(std::size_t d, std::size_t order, std::size_t cut_offset);

// [w1, w2 <= c][orth(w3) in L][orth(w4) in L] with c assembled blockwise.
RankIndicator ism_indicator(IsmBlocks blocks, std::size_t d);

}  // namespace symrank
