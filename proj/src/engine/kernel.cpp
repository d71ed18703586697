#include "symrank/engine/kernel.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "symrank/error.hpp"
#include "symrank/parallel.hpp"

namespace symrank {
namespace {

constexpr std::size_t kMaxSymOrder = 9;

void check_shape(const SrcSpec& spec, const PointMatrix& z) {
  if (z.m != spec.order() || z.d != spec.r() + spec.s()) {
    throw InputError("kernel input is " + std::to_string(z.d) + "x" + std::to_string(z.m) + ", spec " + spec.name +
                     " needs " + std::to_string(spec.r() + spec.s()) + "x" + std::to_string(spec.order()));
  }
}

// Point pointers of the X and Y blocks for columns ordered by `perm`.
struct Split {
  std::array<const double*, 64> x{}, y{};
};

Split split(const PointMatrix& z, std::size_t r, const std::vector<std::uint32_t>& perm) {
  Split out;
  for (std::size_t j = 0; j < perm.size(); ++j) {
    out.x[j] = z.point(perm[j]);
    out.y[j] = z.point(perm[j]) + r;
  }
  return out;
}

std::uint64_t factorial(std::size_t m) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= m; ++k) f *= k;
  return f;
}

// Row-major copies of the X and Y blocks.
struct Blocks {
  std::vector<double> x, y;
  std::size_t r, s;
};

Blocks blocks_of(const Dataset& data) {
  Blocks b{std::vector<double>(data.n() * data.r()), std::vector<double>(data.n() * data.s()), data.r(), data.s()};
  for (std::size_t i = 0; i < data.n(); ++i) {
    for (std::size_t c = 0; c < data.r(); ++c) b.x[i * b.r + c] = data(i, c);
    for (std::size_t c = 0; c < data.s(); ++c) b.y[i * b.s + c] = data(i, data.r() + c);
  }
  return b;
}

// Sums f(x_ptrs, y_ptrs) over ordered m-tuples of distinct rows, split across workers by first index.
template <typename F>
i128 sum_ordered_tuples(const Dataset& data, std::size_t m, const EnumerationOptions& opt, F&& f) {
  const std::size_t n = data.n();
  if (n < m) {
    throw InputError("need n >= m (n = " + std::to_string(n) + ", m = " + std::to_string(m) + ")");
  }
  if (m > 64) throw CapacityError("order above 64");
  if (falling(n, m) > opt.budget) {
    throw CapacityError("enumeration of " + falling(n, m).str() + " tuples exceeds budget " +
                        std::to_string(opt.budget));
  }
  const Blocks b = blocks_of(data);
  return parallel_sum<i128>(n, opt.workers, [&](std::size_t first) {
    std::array<const double*, 64> xp{}, yp{};
    std::vector<std::uint32_t> idx(m);
    std::vector<char> used(n, 0);
    i128 acc = 0;
    auto rec = [&](auto&& self, std::size_t depth) -> void {
      if (depth == m) {
        acc += f(xp.data(), yp.data());
        return;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        used[i] = 1;
        xp[depth] = b.x.data() + i * b.r;
        yp[depth] = b.y.data() + i * b.s;
        self(self, depth + 1);
        used[i] = 0;
      }
    };
    used[first] = 1;
    xp[0] = b.x.data() + first * b.r;
    yp[0] = b.y.data() + first * b.s;
    rec(rec, 1);
    return acc;
  });
}

}  // namespace

std::int64_t unsym_kernel(const SrcSpec& spec, const PointMatrix& z) {
  check_shape(spec, z);
  std::vector<std::uint32_t> id(z.m);
  std::iota(id.begin(), id.end(), 0u);
  const Split p = split(z, spec.r(), id);
  return static_cast<std::int64_t>(signed_sum(spec.ix, spec.group, p.x.data())) *
         signed_sum(spec.iy, spec.group, p.y.data());
}

Rational sym_kernel(const SrcSpec& spec, const PointMatrix& z) {
  check_shape(spec, z);
  if (z.m > kMaxSymOrder) throw CapacityError("sym_kernel: m! enumeration limited to m <= 9");
  std::vector<std::uint32_t> perm(z.m);
  std::iota(perm.begin(), perm.end(), 0u);
  std::int64_t acc = 0;
  do {
    const Split p = split(z, spec.r(), perm);
    acc += static_cast<std::int64_t>(signed_sum(spec.ix, spec.group, p.x.data())) *
           signed_sum(spec.iy, spec.group, p.y.data());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Rational(acc, static_cast<std::int64_t>(factorial(z.m)));
}

Rational sym_kernel_rewrite(const SrcSpec& spec, const PointMatrix& z) {
  check_shape(spec, z);
  if (z.m > kMaxSymOrder) throw CapacityError("sym_kernel: m! enumeration limited to m <= 9");
  std::vector<std::uint32_t> perm(z.m);
  std::iota(perm.begin(), perm.end(), 0u);
  std::int64_t acc = 0;
  do {
    const Split p = split(z, spec.r(), perm);
    if (spec.ix(p.x.data())) acc += signed_sum(spec.iy, spec.group, p.y.data());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Rational(acc * static_cast<std::int64_t>(spec.group.size()), static_cast<std::int64_t>(factorial(z.m)));
}

Rational u_stat_naive(const SrcSpec& spec, const Dataset& data, const EnumerationOptions& opt) {
  if (data.r() != spec.r() || data.s() != spec.s()) throw InputError("dataset split does not match spec " + spec.name);
  const std::size_t m = spec.order();
  const i128 total = sum_ordered_tuples(data, m, opt, [&](const double* const* x, const double* const* y) -> i128 {
    return spec.ix(x) ? signed_sum(spec.iy, spec.group, y) : 0;
  });
  return spec.scale * Rational(to_big(total) * spec.group.size(), falling(data.n(), m));
}

Rational u_stat_naive(const SsrcSpec& spec, const Dataset& data, const EnumerationOptions& opt) {
  if (spec.terms.empty()) throw InputError("empty SsrcSpec");
  Rational acc = 0;
  for (const auto& t : spec.terms) acc += u_stat_naive(t, data, opt);
  return acc;
}

Rational u_stat_naive_full(const SrcSpec& spec, const Dataset& data, const EnumerationOptions& opt) {
  if (data.r() != spec.r() || data.s() != spec.s()) throw InputError("dataset split does not match spec " + spec.name);
  const std::size_t m = spec.order();
  const i128 total = sum_ordered_tuples(data, m, opt, [&](const double* const* x, const double* const* y) -> i128 {
    const int ax = signed_sum(spec.ix, spec.group, x);
    return ax == 0 ? 0 : static_cast<i128>(ax) * signed_sum(spec.iy, spec.group, y);
  });
  return spec.scale * Rational(to_big(total), falling(data.n(), m));
}

}  // namespace symrank
