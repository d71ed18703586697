#include "symrank/engine/ism.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "symrank/error.hpp"

namespace symrank {
namespace {

std::vector<std::uint8_t> orthant_map(const std::vector<std::uint32_t>& codes, std::size_t dim, const char* what) {
  if (codes.empty()) throw InputError(std::string("ISM: ") + what + " must be nonempty");
  std::vector<std::uint8_t> map(std::size_t{1} << dim, 0);
  for (auto c : codes) {
    if (c == 0 || c >= map.size()) throw InputError(std::string("ISM: invalid orthant code in ") + what);
    map[c] = 1;
  }
  return map;
}

std::vector<std::uint32_t> block_map(const std::vector<std::vector<std::uint32_t>>& blocks, std::size_t dim,
                                     const char* what) {
  std::vector<std::uint32_t> map(dim, ~0u);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (auto c : blocks[b]) {
      if (c >= dim) throw InputError(std::string("ISM: coordinate out of range in ") + what);
      if (map[c] != ~0u) throw InputError(std::string("ISM: blocks of ") + what + " overlap");
      map[c] = static_cast<std::uint32_t>(b);
    }
  }
  for (auto v : map)
    if (v == ~0u) throw InputError(std::string("ISM: blocks of ") + what + " do not cover all coordinates");
  return map;
}

}  // namespace

std::vector<std::uint32_t> punctured_cube(std::size_t dim) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 1; c < (1u << dim); ++c) out.push_back(c);
  return out;
}

IsmSpec make_ism(std::size_t r, std::size_t s, std::vector<std::uint32_t> L, std::vector<std::uint32_t> R,
                 IsmMeasure measure) {
  IsmSpec ism{r, s, std::move(L), std::move(R), {}, {}};
  if (measure == IsmMeasure::kJoint) {
    ism.E.emplace_back();
    ism.F.emplace_back();
    for (std::uint32_t c = 0; c < r; ++c) ism.E[0].push_back(c);
    for (std::uint32_t c = 0; c < s; ++c) ism.F[0].push_back(c);
  } else {
    // one block per coordinate of Z; X blocks first, then Y blocks
    for (std::uint32_t c = 0; c < r; ++c) {
      ism.E.push_back({c});
      ism.F.emplace_back();
    }
    for (std::uint32_t c = 0; c < s; ++c) {
      ism.E.emplace_back();
      ism.F.push_back({c});
    }
  }
  return ism;
}

SrcSpec ism_to_src(const IsmSpec& ism) {
  if (ism.r < 1 || ism.s < 1) throw InputError("ISM: r and s must be >= 1");
  if (ism.E.size() != ism.F.size() || ism.E.empty()) throw InputError("ISM: partitions need equal, nonzero block counts");
  const std::size_t t = ism.E.size();
  IsmBlocks bx{block_map(ism.E, ism.r, "E"), orthant_map(ism.L, ism.r, "L"), t};
  IsmBlocks by{block_map(ism.F, ism.s, "F"), orthant_map(ism.R, ism.s, "R"), t};
  return make_src(ism_indicator(std::move(bx), ism.r), ism_indicator(std::move(by), ism.s), h_taustar(4 + t),
                  Rational(1, 4), "ism");
}

SsrcSpec ssrc_partition(std::size_t r, std::size_t s, const std::vector<SsrcBlock>& blocks, IsmMeasure measure) {
  if (blocks.empty()) throw ValidationError("ssrc_partition: no blocks");
  std::set<std::pair<std::uint32_t, std::uint32_t>> cells;
  std::size_t total = 0;
  for (const auto& b : blocks) {
    for (auto lx : b.L) {
      for (auto ly : b.R) {
        if (lx == 0 || ly == 0 || lx >= (1u << r) || ly >= (1u << s)) {
          throw ValidationError("ssrc_partition: orthant outside the punctured cube");
        }
        ++total;
        if (!cells.emplace(lx, ly).second) throw ValidationError("ssrc_partition: blocks overlap");
      }
    }
  }
  const std::size_t want = ((std::size_t{1} << r) - 1) * ((std::size_t{1} << s) - 1);
  if (cells.size() != want) {
    throw ValidationError("ssrc_partition: blocks cover " + std::to_string(cells.size()) + " of " +
                          std::to_string(want) + " cells");
  }
  SsrcSpec out;
  out.name = measure == IsmMeasure::kJoint ? "ssrc-joint" : "ssrc-product";
  for (const auto& b : blocks) out.terms.push_back(ism_to_src(make_ism(r, s, b.L, b.R, measure)));
  return out;
}

Rational Binarization::block(const std::vector<std::uint32_t>& L, const std::vector<std::uint32_t>& R) const {
  Rational acc = 0;
  for (auto lx : L)
    for (auto ly : R) acc += M(lx, ly);
  return acc;
}

Rational Binarization::minor(const std::vector<std::uint32_t>& L, const std::vector<std::uint32_t>& Lp,
                             const std::vector<std::uint32_t>& R, const std::vector<std::uint32_t>& Rp) const {
  return block(L, R) * block(Lp, Rp) - block(Lp, R) * block(L, Rp);
}

Binarization binarization_minors(const DiscreteDist& dist, const std::vector<double>& cut) {
  const std::size_t d = dist.r + dist.s;
  if (cut.size() != d) throw InputError("binarization: cut has wrong dimension");
  std::vector<Rational> p(std::size_t{1} << d, 0);
  for (std::size_t i = 0; i < dist.support.size(); ++i) {
    std::uint32_t code = 0;
    for (std::size_t k = 0; k < d; ++k) code |= static_cast<std::uint32_t>(dist.support[i][k] > cut[k]) << k;
    p[code] += dist.probs[i];
  }
  return Binarization(dist.r, dist.s, std::move(p));
}

}  // namespace symrank
