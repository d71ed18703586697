#include <algorithm>
#include <vector>

#include "common.hpp"
#include "symrank/fast/fast_stats.hpp"
#include "symrank/parallel.hpp"

namespace symrank {

namespace {

struct Split {
  std::vector<std::int32_t> x, y;  // row-major r- and s-vectors
};

Split split_ranks(const RankTable& t) {
  Split out;
  out.x.reserve(t.n * t.r);
  out.y.reserve(t.n * t.s);
  for (std::size_t i = 0; i < t.n; ++i) {
    const std::int32_t* p = t.point(i);
    out.x.insert(out.x.end(), p, p + t.r);
    out.y.insert(out.y.end(), p + t.r, p + t.d());
  }
  return out;
}

bool leq(const std::int32_t* a, const std::int32_t* b, std::size_t d) {
  for (std::size_t k = 0; k < d; ++k)
    if (a[k] > b[k]) return false;
  return true;
}

struct Counters {
  std::unique_ptr<RangeCounter> x, y, z;
};

Counters build_counters(const RankTable& t, const FastOptions& opt) {
  const Split s = split_ranks(t);
  const std::size_t side = t.n + 1;
  Counters c;
  c.x = make_counter(opt.backend, s.x, t.n, t.r, side, opt.memory_budget);
  c.y = make_counter(opt.backend, s.y, t.n, t.s, side, opt.memory_budget);
  c.z = make_counter(opt.backend, t.ranks, t.n, t.d(), side, opt.memory_budget);
  return c;
}

void fill(FastDiagnostics* diag, const char* algorithm, const Counters& c, double build, std::uint64_t queries) {
  if (diag == nullptr) return;
  diag->algorithm = algorithm;
  diag->backend = backend_name(c.z->backend());
  diag->build_seconds = build;
  diag->queries = queries;
  diag->memory_bytes = c.x->memory_bytes() + c.y->memory_bytes() + c.z->memory_bytes();
}

}  // namespace

Rational u_d_fast(const Dataset& data, const FastOptions& opt, FastDiagnostics* diag) {
  const std::size_t n = data.n();
  detail::require_n(n, 5, "D");
  const auto t0 = std::chrono::steady_clock::now();
  const RankTable t = joint_ranks(data);
  const Counters c = build_counters(t, opt);
  const double build = detail::seconds_since(t0);
  const std::size_t r = t.r;

  const i128 total = parallel_sum<i128>(n, opt.workers, [&](std::size_t k) {
    const std::int32_t* p = t.point(k);
    const i128 nx = c.x->dominated(p), ny = c.y->dominated(p + r), nz = c.z->dominated(p);
    return detail::orthant_term(nz - 1, nx - nz, ny - nz, static_cast<i128>(n) - nx - ny + nz);
  });
  fill(diag, "orthant-counts", c, build, 3 * n);
  return ratio(to_big(total), falling(n, 5));
}

Rational u_r_fast(const Dataset& data, const FastOptions& opt, FastDiagnostics* diag) {
  const std::size_t n = data.n(), r = data.r(), s = data.s(), d = r + s;
  detail::require_n(n, 4 + d, "R");
  const auto t0 = std::chrono::steady_clock::now();
  const RankTable t = joint_ranks(data);
  const Counters c = build_counters(t, opt);
  const double build = detail::seconds_since(t0);

  std::vector<i128> partial(std::max(1u, opt.workers), 0);
  std::vector<std::uint64_t> tuples(partial.size(), 0);
  parallel_chunks(n, opt.workers, [&](std::size_t b, std::size_t e, unsigned w) {
    std::vector<std::size_t> idx(d);
    std::vector<std::int32_t> cut(d);
    i128 acc = 0;
    std::uint64_t visited = 0;
    auto leaf = [&] {
      for (std::size_t k = 0; k < d; ++k) cut[k] = t(idx[k], k);
      const std::int32_t* cx = cut.data();
      const std::int32_t* cy = cut.data() + r;
      const i128 nx = c.x->dominated(cx), ny = c.y->dominated(cy), nz = c.z->dominated(cx);
      i128 c11 = nz, c10 = nx - nz, c01 = ny - nz, c00 = static_cast<i128>(n) - nx - ny + nz;
      for (std::size_t k = 0; k < d; ++k) {
        const std::int32_t* p = t.point(idx[k]);
        const bool ux = leq(p, cx, r), uy = leq(p + r, cy, s);
        (ux ? (uy ? c11 : c10) : (uy ? c01 : c00)) -= 1;
      }
      acc += detail::orthant_term(c11, c10, c01, c00);
      ++visited;
    };
    auto rec = [&](auto&& self, std::size_t depth) -> void {
      if (depth == d) {
        leaf();
        return;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (std::find(idx.begin(), idx.begin() + depth, j) != idx.begin() + depth) continue;
        idx[depth] = j;
        self(self, depth + 1);
      }
    };
    for (std::size_t first = b; first < e; ++first) {
      idx[0] = first;
      rec(rec, 1);
    }
    partial[w] = acc;
    tuples[w] = visited;
  });
  i128 total = 0;
  std::uint64_t visited = 0;
  for (std::size_t w = 0; w < partial.size(); ++w) total += partial[w], visited += tuples[w];
  fill(diag, "cut-tuples", c, build, 3 * visited);
  return ratio(to_big(total), falling(n, 4 + d));
}

}  // namespace symrank
