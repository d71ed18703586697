#include "symrank/engine/population.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>

#include "symrank/error.hpp"

namespace symrank {
namespace {

// Probabilities as integers over a common denominator q.
struct IntWeights {
  std::vector<i128> a;
  BigInt q = 1;
};

IntWeights int_weights(const DiscreteDist& dist) {
  IntWeights w;
  for (const auto& p : dist.probs) {
    const BigInt den = boost::multiprecision::denominator(p);
    w.q = w.q / boost::multiprecision::gcd(w.q, den) * den;
  }
  for (const auto& p : dist.probs) {
    const BigInt v = boost::multiprecision::numerator(p) * (w.q / boost::multiprecision::denominator(p));
    w.a.push_back(static_cast<i128>(v.convert_to<long long>()));
  }
  return w;
}

void check_budget(std::size_t support, std::size_t free, std::uint64_t budget) {
  BigInt total = 1;
  for (std::size_t k = 0; k < free; ++k) total *= support;
  if (total > budget) throw CapacityError("enumeration of " + total.str() + " tuples exceeds budget");
}

void check_weights(const IntWeights& w, std::size_t free) {
  BigInt bound = 1;
  for (std::size_t k = 0; k < free; ++k) bound *= w.q;
  if (bound > (BigInt(1) << 96)) throw CapacityError("probability denominators too large for exact enumeration");
}

// Sum over tuples in support^free of weight(tuple) * f(tuple indices).
template <typename F>
Rational weighted_sum(const DiscreteDist& dist, std::size_t free, std::uint64_t budget, F&& f) {
  const std::size_t k = dist.support.size();
  check_budget(k, free, budget);
  const IntWeights w = int_weights(dist);
  check_weights(w, free);
  std::vector<std::uint32_t> idx(free, 0);
  i128 acc = 0;
  while (true) {
    const std::int64_t v = f(idx);
    if (v != 0) {
      i128 weight = 1;
      for (auto t : idx) weight *= w.a[t];
      acc += weight * v;
    }
    std::size_t pos = 0;
    while (pos < free && ++idx[pos] == k) idx[pos++] = 0;
    if (pos == free) break;
  }
  BigInt den = 1;
  for (std::size_t j = 0; j < free; ++j) den *= w.q;
  return Rational(to_big(acc), den);
}

std::int64_t kernel_at(const SrcSpec& spec, const std::array<const double*, 64>& pts) {
  std::array<const double*, 64> y{};
  for (std::size_t j = 0; j < spec.order(); ++j) y[j] = pts[j] + spec.r();
  const int ax = signed_sum(spec.ix, spec.group, pts.data());
  if (ax == 0) return 0;
  return static_cast<std::int64_t>(ax) * signed_sum(spec.iy, spec.group, y.data());
}

void check_dims(const SrcSpec& spec, const DiscreteDist& dist) {
  if (spec.r() != dist.r || spec.s() != dist.s) throw InputError("distribution dimensions do not match spec " + spec.name);
}

}  // namespace

DiscreteDist make_discrete(std::vector<std::vector<double>> support, std::vector<Rational> probs, std::size_t r,
                           std::size_t s) {
  if (r < 1) throw InputError("distribution needs r >= 1");
  if (support.empty() || support.size() != probs.size()) throw InputError("support and probabilities differ in length");
  Rational total = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i].size() != r + s) throw InputError("support point " + std::to_string(i) + " has wrong dimension");
    if (probs[i] <= 0) throw InputError("probabilities must be positive");
    total += probs[i];
  }
  if (total != 1) throw InputError("probabilities sum to " + to_string(total) + ", not 1");
  std::set<std::vector<double>> seen(support.begin(), support.end());
  if (seen.size() != support.size()) throw InputError("support points must be distinct");
  return DiscreteDist{r, s, std::move(support), std::move(probs)};
}

DiscreteDist product_dist(const DiscreteDist& x_law, const DiscreteDist& y_law) {
  std::vector<std::vector<double>> pts;
  std::vector<Rational> probs;
  for (std::size_t i = 0; i < x_law.support.size(); ++i) {
    for (std::size_t j = 0; j < y_law.support.size(); ++j) {
      auto p = x_law.support[i];
      p.insert(p.end(), y_law.support[j].begin(), y_law.support[j].end());
      pts.push_back(std::move(p));
      probs.push_back(x_law.probs[i] * y_law.probs[j]);
    }
  }
  return make_discrete(std::move(pts), std::move(probs), x_law.r + x_law.s, y_law.r + y_law.s);
}

namespace {

DiscreteDist block_marginal(const DiscreteDist& dist, std::size_t from, std::size_t count) {
  std::vector<std::vector<double>> pts;
  std::vector<Rational> probs;
  for (std::size_t i = 0; i < dist.support.size(); ++i) {
    std::vector<double> p(dist.support[i].begin() + from, dist.support[i].begin() + from + count);
    auto it = std::find(pts.begin(), pts.end(), p);
    if (it == pts.end()) {
      pts.push_back(std::move(p));
      probs.push_back(dist.probs[i]);
    } else {
      probs[it - pts.begin()] += dist.probs[i];
    }
  }
  return make_discrete(std::move(pts), std::move(probs), count, 0);
}

}  // namespace

DiscreteDist x_marginal(const DiscreteDist& dist) { return block_marginal(dist, 0, dist.r); }
DiscreteDist y_marginal(const DiscreteDist& dist) { return block_marginal(dist, dist.r, dist.s); }

DiscreteDist uniform_points(const std::vector<std::vector<double>>& pts) {
  if (pts.empty()) throw InputError("uniform_points: empty support");
  std::vector<Rational> probs(pts.size(), Rational(1, static_cast<long long>(pts.size())));
  return make_discrete(pts, std::move(probs), pts.front().size(), 0);
}

Rational population_src(const SrcSpec& spec, const DiscreteDist& dist, const PopulationOptions& opt) {
  check_dims(spec, dist);
  const std::size_t m = spec.order();
  const Rational e = weighted_sum(dist, m, opt.budget, [&](const std::vector<std::uint32_t>& idx) {
    std::array<const double*, 64> pts{};
    for (std::size_t j = 0; j < m; ++j) pts[j] = dist.support[idx[j]].data();
    return kernel_at(spec, pts);
  });
  return spec.scale * e;
}

Rational population_src(const SsrcSpec& spec, const DiscreteDist& dist, const PopulationOptions& opt) {
  Rational acc = 0;
  for (const auto& t : spec.terms) acc += population_src(t, dist, opt);
  return acc;
}

Rational population_src_rewrite(const SrcSpec& spec, const DiscreteDist& dist, const PopulationOptions& opt) {
  check_dims(spec, dist);
  const std::size_t m = spec.order();
  const Rational e = weighted_sum(dist, m, opt.budget, [&](const std::vector<std::uint32_t>& idx) -> std::int64_t {
    std::array<const double*, 64> x{}, y{};
    for (std::size_t j = 0; j < m; ++j) {
      x[j] = dist.support[idx[j]].data();
      y[j] = x[j] + spec.r();
    }
    return spec.ix(x.data()) ? signed_sum(spec.iy, spec.group, y.data()) : 0;
  });
  return spec.scale * e * static_cast<long long>(spec.group.size());
}

Rational kernel_projection(const SrcSpec& spec, const DiscreteDist& dist, const std::vector<std::vector<double>>& fixed,
                           const PopulationOptions& opt) {
  check_dims(spec, dist);
  const std::size_t m = spec.order(), c = fixed.size();
  if (c < 1 || c > m) throw InputError("kernel_projection: need 1 <= c <= m fixed points");
  for (const auto& z : fixed)
    if (z.size() != spec.r() + spec.s()) throw InputError("kernel_projection: fixed point has wrong dimension");

  // Averaging over S_m only matters through where the fixed points land: every injective
  // placement of the c fixed points among m slots is equally likely, the iid rest is exchangeable.
  std::vector<std::uint32_t> slots(m);
  std::iota(slots.begin(), slots.end(), 0u);
  Rational acc = 0;
  std::size_t placements = 0;
  std::vector<std::uint32_t> place(c);
  auto rec = [&](auto&& self, std::size_t depth, std::vector<char>& used) -> void {
    if (depth == c) {
      ++placements;
      std::vector<std::uint32_t> free_slots;
      for (std::size_t j = 0; j < m; ++j)
        if (!used[j]) free_slots.push_back(static_cast<std::uint32_t>(j));
      acc += weighted_sum(dist, m - c, opt.budget, [&](const std::vector<std::uint32_t>& idx) {
        std::array<const double*, 64> pts{};
        for (std::size_t i = 0; i < c; ++i) pts[place[i]] = fixed[i].data();
        for (std::size_t i = 0; i < free_slots.size(); ++i) pts[free_slots[i]] = dist.support[idx[i]].data();
        return kernel_at(spec, pts);
      });
      return;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      place[depth] = static_cast<std::uint32_t>(j);
      self(self, depth + 1, used);
      used[j] = 0;
    }
  };
  std::vector<char> used(m, 0);
  rec(rec, 0, used);
  return acc / static_cast<long long>(placements);
}

Rational expected_a(const RankIndicator& ind, const std::vector<double>& w1, const std::vector<double>& w2,
                    const DiscreteDist& law) {
  const std::size_t m = ind.order();
  if (m < 4) throw InputError("expected_a: indicator order must be >= 4");
  if (law.r + law.s != ind.dim() || w1.size() != ind.dim() || w2.size() != ind.dim()) {
    throw InputError("expected_a: dimension mismatch");
  }
  const SignedGroup h = h_taustar(m);
  return weighted_sum(law, m - 2, PopulationOptions{}.budget, [&](const std::vector<std::uint32_t>& idx) {
    std::array<const double*, 64> pts{};
    pts[0] = w1.data();
    pts[1] = w2.data();
    for (std::size_t j = 2; j < m; ++j) pts[j] = law.support[idx[j - 2]].data();
    return static_cast<std::int64_t>(signed_sum(ind, h, pts.data()));
  });
}

Rational kappa2_factorized(const SrcSpec& spec, const DiscreteDist& dist, const std::vector<double>& z1,
                           const std::vector<double>& z2) {
  check_dims(spec, dist);
  const std::size_t m = spec.order(), r = spec.r();
  const DiscreteDist xl = x_marginal(dist), yl = y_marginal(dist);
  const std::vector<double> x1(z1.begin(), z1.begin() + r), x2(z2.begin(), z2.begin() + r);
  const std::vector<double> y1(z1.begin() + r, z1.end()), y2(z2.begin() + r, z2.end());
  const Rational pairs(static_cast<long long>(m * (m - 1) / 2));
  return Rational(4) / pairs * expected_a(spec.ix, x1, x2, xl) * expected_a(spec.iy, y1, y2, yl);
}

Rational expected_a_continuous(const RankIndicator& ind, const Rational& w1, const Rational& w2) {
  if (ind.dim() != 1) throw InputError("expected_a_continuous: d = 1 only");
  if (w1 <= 0 || w1 >= 1 || w2 <= 0 || w2 >= 1) throw InputError("expected_a_continuous: fixed points must lie in (0,1)");
  const std::size_t m = ind.order();
  if (m < 4 || m > 12) throw InputError("expected_a_continuous: order must be in [4, 12]");
  const std::size_t k = m - 2;
  const SignedGroup h = h_taustar(m);

  std::vector<Rational> cuts{0};
  cuts.push_back(std::min(w1, w2));
  if (w1 != w2) cuts.push_back(std::max(w1, w2));
  cuts.push_back(1);
  const std::size_t intervals = cuts.size() - 1;

  std::vector<std::uint32_t> assign(k, 0);
  Rational total = 0;
  const double f1 = to_double(w1), f2 = to_double(w2);
  while (true) {
    std::vector<std::size_t> count(intervals, 0);
    Rational prob = 1;
    for (auto a : assign) {
      ++count[a];
      prob *= cuts[a + 1] - cuts[a];
    }
    long long orders = 1;  // number of within-interval orderings
    for (auto c : count)
      for (std::size_t f = 2; f <= c; ++f) orders *= static_cast<long long>(f);
    // Within an interval every relative order is equally likely; place the points evenly.
    std::vector<std::uint32_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
      bool ok = true;
      for (std::size_t t = 1; t < k && ok; ++t) ok = assign[perm[t - 1]] <= assign[perm[t]];
      if (!ok) continue;
      std::vector<double> vals(k);
      std::vector<std::size_t> seen(intervals, 0);
      for (std::size_t t = 0; t < k; ++t) {
        const auto a = assign[perm[t]];
        const double lo = to_double(cuts[a]), hi = to_double(cuts[a + 1]);
        vals[perm[t]] = lo + (hi - lo) * static_cast<double>(++seen[a]) / static_cast<double>(count[a] + 1);
      }
      std::array<const double*, 64> pts{};
      pts[0] = &f1;
      pts[1] = &f2;
      for (std::size_t j = 0; j < k; ++j) pts[j + 2] = &vals[j];
      const int a_val = signed_sum(ind, h, pts.data());
      if (a_val != 0) total += prob * Rational(a_val, orders);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::size_t pos = 0;
    while (pos < k && ++assign[pos] == intervals) assign[pos++] = 0;
    if (pos == k) break;
  }
  return total;
}

}  // namespace symrank
