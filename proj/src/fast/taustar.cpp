#include <algorithm>
#include <bit>
#include <limits>
#include <vector>

#include "common.hpp"
#include "symrank/fast/fast_stats.hpp"
#include "symrank/parallel.hpp"
#include "symrank/range/range_tree.hpp"
#include "symrank/simd/kernels.hpp"

namespace symrank {

namespace {

constexpr std::int32_t kLow = std::numeric_limits<std::int32_t>::min();
constexpr std::int32_t kHigh = std::numeric_limits<std::int32_t>::max();

enum class Variant { kPartial, kJoint };

bool leq(const std::int32_t* a, const std::int32_t* b, std::size_t d) {
  for (std::size_t k = 0; k < d; ++k)
    if (a[k] > b[k]) return false;
  return true;
}

bool less(const std::int32_t* a, const std::int32_t* b, std::size_t d) {
  for (std::size_t k = 0; k < d; ++k)
    if (a[k] >= b[k]) return false;
  return true;
}

// One constraint "coordinates [offset, offset+len) <= v" (upper) or ">= v" (lower).
struct Event {
  std::size_t offset;
  const std::int32_t* v;
  std::size_t len;
  bool upper;
};

// Number of points satisfying none of the events.
i128 none_of(const RangeCounter& c, const std::vector<Event>& ev, std::uint64_t& queries) {
  const std::size_t dim = c.dims();
  std::vector<std::int32_t> lo(dim), hi(dim);
  i128 total = 0;
  for (unsigned mask = 0; mask < (1u << ev.size()); ++mask) {
    std::fill(lo.begin(), lo.end(), kLow);
    std::fill(hi.begin(), hi.end(), kHigh);
    for (std::size_t e = 0; e < ev.size(); ++e) {
      if (!(mask >> e & 1u)) continue;
      for (std::size_t k = 0; k < ev[e].len; ++k) {
        auto& slot = ev[e].upper ? hi[ev[e].offset + k] : lo[ev[e].offset + k];
        slot = ev[e].upper ? std::min(slot, ev[e].v[k]) : std::max(slot, ev[e].v[k]);
      }
    }
    const i128 cnt = c.count(lo.data(), hi.data());
    total += (std::popcount(mask) & 1) ? -cnt : cnt;
    ++queries;
  }
  return total;
}

// Pairs (k, l), k != l, laid out as [x^k, y^k, x^l, y^l]; keep filters the pair.
template <typename Keep>
std::unique_ptr<RangeTree> pair_tree(const RankTable& t, Keep keep) {
  const std::size_t n = t.n, d = t.d();
  std::vector<std::int32_t> pts;
  std::size_t count = 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      if (k == l || !keep(k, l)) continue;
      pts.insert(pts.end(), t.point(k), t.point(k) + d);
      pts.insert(pts.end(), t.point(l), t.point(l) + d);
      ++count;
    }
  return std::make_unique<RangeTree>(pts, count, 2 * d);
}

struct Partials {
  i128 sum = 0;
  std::uint64_t queries = 0;
};

template <typename Body>
Partials anchor_pairs(std::size_t n, unsigned workers, Body body) {
  std::vector<Partials> part(std::max(1u, workers));
  parallel_chunks(n, workers, [&](std::size_t b, std::size_t e, unsigned w) {
    Partials acc;
    for (std::size_t i1 = b; i1 < e; ++i1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        if (i1 != i2) acc.sum += body(i1, i2, acc.queries);
    part[w] = acc;
  });
  Partials total;
  for (const auto& p : part) total.sum += p.sum, total.queries += p.queries;
  return total;
}

i128 combine(i128 n1, i128 n2, i128 t3) { return n1 * (n1 - 1) + n2 * (n2 - 1) - 2 * t3; }

Partials pairset_partial(const RankTable& t, const FastOptions& opt, FastDiagnostics* diag) {
  const std::size_t r = t.r, s = t.s, d = t.d();
  const auto t0 = std::chrono::steady_clock::now();
  auto points = make_counter(opt.backend, t.ranks, t.n, d, t.n + 1, opt.memory_budget);
  auto all = pair_tree(t, [](std::size_t, std::size_t) { return true; });
  // y^l below y^k
  auto star = pair_tree(t, [&](std::size_t k, std::size_t l) { return leq(t.point(l) + r, t.point(k) + r, s); });
  if (diag) {
    diag->build_seconds = detail::seconds_since(t0);
    diag->backend = std::string(backend_name(points->backend())) + "+tree";
    diag->memory_bytes = points->memory_bytes() + all->memory_bytes() + star->memory_bytes();
  }
  const std::size_t xk = 0, yk = r, xl = d, yl = d + r;
  return anchor_pairs(t.n, opt.workers, [&](std::size_t i1, std::size_t i2, std::uint64_t& q) {
    const std::int32_t *x1 = t.point(i1), *x2 = t.point(i2), *y1 = x1 + r, *y2 = x2 + r;
    const i128 n1 = none_of(*points, {{0, x1, r, true}, {0, x2, r, true}, {r, y1, s, true}, {r, y2, s, true}}, q);
    const i128 n2 = none_of(*points, {{0, x1, r, true}, {0, x2, r, true}, {r, y1, s, false}, {r, y2, s, false}}, q);
    i128 t3 = 0;
    if (!leq(y2, y1, s)) {
      const std::vector<Event> ev = {{xk, x1, r, true}, {xk, x2, r, true}, {xl, x1, r, true},
                                     {xl, x2, r, true}, {yk, y2, s, false}, {yl, y1, s, true}};
      t3 = none_of(*all, ev, q) - none_of(*star, ev, q);
    }
    return combine(n1, n2, t3);
  });
}

Partials pairset_joint(const RankTable& t, const FastOptions& opt, FastDiagnostics* diag) {
  const std::size_t r = t.r, s = t.s, d = t.d();
  const auto t0 = std::chrono::steady_clock::now();
  auto points = make_counter(opt.backend, t.ranks, t.n, d, t.n + 1, opt.memory_budget);
  // y^k strictly below y^l
  auto star = pair_tree(t, [&](std::size_t k, std::size_t l) { return less(t.point(k) + r, t.point(l) + r, s); });
  if (diag) {
    diag->build_seconds = detail::seconds_since(t0);
    diag->backend = std::string(backend_name(points->backend())) + "+tree";
    diag->memory_bytes = points->memory_bytes() + star->memory_bytes();
  }
  return anchor_pairs(t.n, opt.workers, [&](std::size_t i1, std::size_t i2, std::uint64_t& q) {
    const std::int32_t *p1 = t.point(i1), *p2 = t.point(i2);
    std::vector<std::int32_t> lo(d), hi(d, kHigh);
    for (std::size_t k = 0; k < d; ++k) lo[k] = std::max(p1[k], p2[k]) + 1;
    const i128 n1 = points->count(lo.data(), hi.data());
    for (std::size_t k = r; k < d; ++k) lo[k] = kLow, hi[k] = std::min(p1[k], p2[k]) - 1;
    const i128 n2 = points->count(lo.data(), hi.data());
    q += 2;
    i128 t3 = 0;
    if (less(p1 + r, p2 + r, s)) {
      std::vector<std::int32_t> plo(2 * d, kLow), phi(2 * d, kHigh);
      for (std::size_t k = 0; k < r; ++k) plo[k] = plo[d + k] = std::max(p1[k], p2[k]) + 1;
      for (std::size_t k = 0; k < s; ++k) {
        phi[r + k] = p2[r + k] - 1;
        plo[d + r + k] = p1[r + k] + 1;
      }
      t3 = star->count(plo.data(), phi.data());
      ++q;
    }
    return combine(n1, n2, t3);
  });
}

// Row i of each family is a bitset over observations.
struct BitRows {
  std::size_t words;
  std::vector<std::uint64_t> bits;
  BitRows(std::size_t n, std::size_t w) : words(w), bits(n * w, 0) {}
  std::uint64_t* row(std::size_t i) { return bits.data() + i * words; }
  const std::uint64_t* row(std::size_t i) const { return bits.data() + i * words; }
  bool test(std::size_t i, std::size_t k) const { return row(i)[k / 64] >> (k % 64) & 1u; }
};

// A: x-side set, B: N1 and l-side set, C: N2 and k-side set.
Partials bitset_path(const RankTable& t, Variant v, const FastOptions& opt, FastDiagnostics* diag) {
  const std::size_t n = t.n, r = t.r, s = t.s;
  const std::size_t words = simd::words_for(n);
  const double bytes = static_cast<double>(bitset_bytes(n));
  if (bytes > static_cast<double>(opt.memory_budget))
    throw CapacityError("bitset path needs " + std::to_string(static_cast<std::size_t>(bytes)) + " bytes, budget " +
                        std::to_string(opt.memory_budget));
  const auto t0 = std::chrono::steady_clock::now();
  BitRows a(n, words), b(n, words), c(n, words);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int32_t *xi = t.point(i), *yi = xi + r;
    for (std::size_t k = 0; k < n; ++k) {
      const std::int32_t *xk = t.point(k), *yk = xk + r;
      bool in_a, in_b, in_c;
      if (v == Variant::kPartial) {
        in_a = !leq(xk, xi, r);
        in_b = !leq(yk, yi, s);
        in_c = !leq(yi, yk, s);
      } else {
        in_a = less(xi, xk, r);
        in_b = less(yi, yk, s);
        in_c = less(yk, yi, s);
      }
      const std::uint64_t bit = std::uint64_t{1} << (k % 64);
      if (in_a) a.row(i)[k / 64] |= bit;
      if (in_b) b.row(i)[k / 64] |= bit;
      if (in_c) c.row(i)[k / 64] |= bit;
    }
  }
  const simd::Kernels& kern = simd::kernels();
  if (diag) {
    diag->build_seconds = detail::seconds_since(t0);
    diag->backend = std::string("bitset-") + kern.name;
    diag->memory_bytes = static_cast<std::size_t>(bytes);
  }
  return anchor_pairs(n, opt.workers, [&](std::size_t i1, std::size_t i2, std::uint64_t& q) {
    thread_local std::vector<std::uint64_t> xa, xab, xac;
    xa.resize(words), xab.resize(words), xac.resize(words);
    kern.and2(xa.data(), a.row(i1), a.row(i2), words);
    const i128 n1 = kern.popcount_and3(xa.data(), b.row(i1), b.row(i2), words);
    const i128 n2 = kern.popcount_and3(xa.data(), c.row(i1), c.row(i2), words);
    q += 2;
    i128 t3 = 0;
    if (b.test(i1, i2)) {
      kern.and2(xab.data(), xa.data(), b.row(i1), words);
      kern.and2(xac.data(), xa.data(), c.row(i2), words);
      for (std::size_t w = 0; w < words; ++w)
        for (std::uint64_t m = xac[w]; m != 0; m &= m - 1) {
          const std::size_t k = w * 64 + std::countr_zero(m);
          t3 += kern.popcount_and2(xab.data(), b.row(k), words);
          ++q;
        }
    }
    return combine(n1, n2, t3);
  });
}

Rational run(const Dataset& data, Variant v, PairMethod method, const FastOptions& opt, FastDiagnostics* diag) {
  const std::size_t n = data.n();
  detail::require_n(n, 4, v == Variant::kPartial ? "tauP" : "tauJ");
  if (method == PairMethod::kAuto) method = auto_pair_method(n, data.d(), opt.memory_budget);
  const RankTable t = joint_ranks(data);
  Partials p;
  if (method == PairMethod::kPairSet) {
    if (pairset_bytes_estimate(n, data.d()) > opt.memory_budget)
      throw CapacityError("pair-set trees for n = " + std::to_string(n) + " exceed the memory budget");
    p = v == Variant::kPartial ? pairset_partial(t, opt, diag) : pairset_joint(t, opt, diag);
  } else {
    p = bitset_path(t, v, opt, diag);
  }
  if (diag) {
    diag->algorithm = method == PairMethod::kPairSet ? "pair-set" : "bitset";
    diag->queries = p.queries;
  }
  return ratio(to_big(4 * p.sum), falling(n, 4));
}

}  // namespace

std::size_t bitset_bytes(std::size_t n) { return 3 * n * simd::words_for(n) * sizeof(std::uint64_t); }

PairMethod auto_pair_method(std::size_t n, std::size_t d, std::size_t budget) {
  if (bitset_bytes(n) <= budget) return PairMethod::kBitset;
  return pairset_bytes_estimate(n, d) <= budget ? PairMethod::kPairSet : PairMethod::kBitset;
}

std::size_t pairset_bytes_estimate(std::size_t n, std::size_t d) {
  if (n < 2) return 0;
  const double pairs = static_cast<double>(n) * (n - 1);
  const double b = 2.0 * tree_bytes_estimate(n * (n - 1), 2 * d) + pairs * 2 * d * sizeof(std::int32_t);
  return b >= 1e18 ? std::numeric_limits<std::size_t>::max() : static_cast<std::size_t>(b);
}

Rational u_taustar_p_fast(const Dataset& data, PairMethod method, const FastOptions& opt, FastDiagnostics* diag) {
  return run(data, Variant::kPartial, method, opt, diag);
}

Rational u_taustar_j_fast(const Dataset& data, PairMethod method, const FastOptions& opt, FastDiagnostics* diag) {
  return run(data, Variant::kJoint, method, opt, diag);
}

}  // namespace symrank
