#include "symrank/engine/src_spec.hpp"

#include <array>

#include "symrank/error.hpp"

namespace symrank {

int signed_sum(const RankIndicator& ind, const SignedGroup& group, const double* const* pts) {
  std::array<const double*, 64> moved{};
  int acc = 0;
  for (const auto& sigma : group.elements()) {
    for (std::size_t k = 0; k < sigma.order(); ++k) moved[sigma(k)] = pts[k];
    if (ind(moved.data())) acc += sigma.sign();
  }
  return acc;
}

SrcSpec make_src(RankIndicator ix, RankIndicator iy, SignedGroup group, Rational scale, std::string name) {
  if (ix.order() != group.order() || iy.order() != group.order()) {
    throw InputError("SrcSpec " + name + ": indicator orders " + std::to_string(ix.order()) + "/" +
                     std::to_string(iy.order()) + " do not match group order " + std::to_string(group.order()));
  }
  if (group.order() > 64) throw CapacityError("SrcSpec order above 64 is not supported");
  if (scale <= 0) throw InputError("SrcSpec scale must be positive");
  return SrcSpec{std::move(ix), std::move(iy), std::move(group), std::move(scale), std::move(name)};
}

SrcSpec tau_spec() {
  return make_src(builtin_indicator(IndicatorKind::kTau, 1), builtin_indicator(IndicatorKind::kTau, 1), h_tau(), 1,
                  "tau");
}

SrcSpec tau2_spec() {
  return make_src(builtin_indicator(IndicatorKind::kTau2, 1), builtin_indicator(IndicatorKind::kTau2, 1),
                  h_taustar(4), 1, "tau2");
}

SrcSpec taustar_spec() {
  return make_src(builtin_indicator(IndicatorKind::kTauStar, 1), builtin_indicator(IndicatorKind::kTauStar, 1),
                  h_taustar(4), 1, "taustar");
}

SrcSpec hoeffd_spec(std::size_t r, std::size_t s) {
  return make_src(builtin_indicator(IndicatorKind::kHoeffD, r), builtin_indicator(IndicatorKind::kHoeffD, s),
                  h_taustar(5), Rational(1, 4), "D");
}

SrcSpec hoeffr_spec(std::size_t r, std::size_t s) {
  const std::size_t m = 4 + r + s;
  return make_src(hoeffr_indicator(r, m, 4), hoeffr_indicator(s, m, 4 + r), h_taustar(m), Rational(1, 4), "R");
}

SrcSpec taustar_p_spec(std::size_t r, std::size_t s) {
  return make_src(builtin_indicator(IndicatorKind::kPartialP, r), builtin_indicator(IndicatorKind::kPartialP, s),
                  h_taustar(4), 1, "tauP");
}

SrcSpec taustar_j_spec(std::size_t r, std::size_t s) {
  return make_src(builtin_indicator(IndicatorKind::kJointJ, r), builtin_indicator(IndicatorKind::kJointJ, s),
                  h_taustar(4), 1, "tauJ");
}

namespace {

RankIndicator order3(const char* name, int a, int b, int c) {
  return RankIndicator::custom(name, 3, 1, [a, b, c](const double* const* w, std::size_t) {
    return w[a][0] < w[b][0] && w[b][0] < w[c][0];
  });
}

}  // namespace

SsrcSpec spearman_ssrc() {
  const SignedGroup h = make_group({Permutation::from_cycles(3, {{1, 3}})}, 3);
  const RankIndicator ix = order3("x1<x2<x3", 0, 1, 2);
  SsrcSpec out;
  out.name = "spearman";
  out.terms.push_back(make_src(ix, order3("y1<y2<y3", 0, 1, 2), h, 3, "spearman[123]"));
  out.terms.push_back(make_src(ix, order3("y1<y3<y2", 0, 2, 1), h, 3, "spearman[132]"));
  out.terms.push_back(make_src(ix, order3("y2<y1<y3", 1, 0, 2), h, 3, "spearman[213]"));
  return out;
}

SrcSpec product_spec(const SrcSpec& a, const SrcSpec& b) {
  if (a.r() != b.r() || a.s() != b.s()) throw InputError("product_spec: dimension mismatch");
  const std::size_t m1 = a.order(), m = a.order() + b.order();
  auto join = [m1](const RankIndicator& p, const RankIndicator& q, const std::string& name) {
    return RankIndicator::custom(name, m1 + q.order(), p.dim(), [p, q, m1](const double* const* w, std::size_t) {
      return p(w) && q(w + m1);
    });
  };
  std::vector<Permutation> gens;
  for (const auto& g : a.group.elements()) {
    std::vector<std::uint32_t> v(m);
    for (std::size_t k = 0; k < m; ++k) v[k] = k < m1 ? g(k) : static_cast<std::uint32_t>(k);
    gens.emplace_back(std::move(v));
  }
  for (const auto& g : b.group.elements()) {
    std::vector<std::uint32_t> v(m);
    for (std::size_t k = 0; k < m; ++k) v[k] = k < m1 ? static_cast<std::uint32_t>(k) : m1 + g(k - m1);
    gens.emplace_back(std::move(v));
  }
  const std::string name = a.name + "*" + b.name;
  return make_src(join(a.ix, b.ix, name + ".x"), join(a.iy, b.iy, name + ".y"), make_group(gens, m),
                  a.scale * b.scale, name);
}

}  // namespace symrank
