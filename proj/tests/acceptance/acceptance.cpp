// Acceptance runner: one PASS/FAIL/WARN line per criterion.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symrank/cli/bench.hpp"
#include "symrank/engine/kernel.hpp"
#include "symrank/engine/population.hpp"
#include "symrank/error.hpp"
#include "symrank/fast/estimate.hpp"
#include "symrank/fast/fast_stats.hpp"
#include "symrank/inference/generators.hpp"
#include "symrank/inference/hypothesis.hpp"
#include "symrank/inference/ks.hpp"
#include "symrank/inference/null_law.hpp"
#include "symrank/inference/power.hpp"
#include "symrank/range/box.hpp"
#include "symrank/range/counter.hpp"

using namespace symrank;

namespace {

enum class Verdict { kPass, kFail, kWarn };

struct Outcome {
  Verdict verdict;
  std::string detail;
};

const char* verdict_name(Verdict v) { return v == Verdict::kPass ? "PASS" : v == Verdict::kFail ? "FAIL" : "WARN"; }

Outcome pass_if(bool ok, std::string detail) { return {ok ? Verdict::kPass : Verdict::kFail, std::move(detail)}; }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Dataset random_dataset(std::mt19937_64& gen, std::size_t n, std::size_t r, std::size_t s, bool ties) {
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> pool(0, 3);
  std::vector<std::vector<double>> rows(n, std::vector<double>(r + s));
  for (auto& row : rows)
    for (auto& v : row) v = ties ? pool(gen) : normal(gen);
  if (ties) rows[gen() % n] = rows[gen() % n];
  return Dataset::from_rows(rows, r, s);
}

DiscreteDist grid(std::size_t d, std::vector<double> levels) {
  std::vector<std::vector<double>> pts{{}};
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<std::vector<double>> next;
    for (const auto& p : pts)
      for (double v : levels) {
        next.push_back(p);
        next.back().push_back(v);
      }
    pts = std::move(next);
  }
  return uniform_points(pts);
}

DiscreteDist xor_law(std::size_t r) {
  std::vector<std::vector<double>> pts;
  std::vector<Rational> probs;
  for (std::uint32_t code = 0; code < (1u << r); ++code) {
    std::vector<double> p;
    int parity = 0;
    for (std::size_t k = 0; k < r; ++k) {
      p.push_back((code >> k) & 1u);
      parity ^= (code >> k) & 1u;
    }
    p.push_back(parity);
    pts.push_back(p);
    probs.emplace_back(1, 1 << r);
  }
  return make_discrete(pts, probs, r, 1);
}

// 1. fast == naive as exact rationals
Outcome criterion1() {
  std::mt19937_64 gen(20241);
  const std::pair<std::size_t, std::size_t> splits[] = {{1, 1}, {2, 1}, {2, 2}};
  long checked = 0, mismatched = 0;
  std::string first;
  for (auto [r, s] : splits) {
    struct Case {
      std::string name;
      SrcSpec spec;
      std::size_t lo, hi;
      std::function<std::vector<Rational>(const Dataset&)> fast;
    };
    const std::vector<Case> cases = {
        {"D", hoeffd_spec(r, s), 6, 12, [](const Dataset& d) { return std::vector<Rational>{u_d_fast(d)}; }},
        {"R", hoeffr_spec(r, s), 8, 11, [](const Dataset& d) { return std::vector<Rational>{u_r_fast(d)}; }},
        {"tauP", taustar_p_spec(r, s), 6, 12,
         [](const Dataset& d) {
           return std::vector<Rational>{u_taustar_p_fast(d, PairMethod::kPairSet),
                                        u_taustar_p_fast(d, PairMethod::kBitset)};
         }},
        {"tauJ", taustar_j_spec(r, s), 6, 12, [](const Dataset& d) {
           return std::vector<Rational>{u_taustar_j_fast(d, PairMethod::kPairSet),
                                        u_taustar_j_fast(d, PairMethod::kBitset)};
         }}};
    for (const auto& c : cases) {
      for (int k = 0; k < 100; ++k) {
        const std::size_t n = c.lo + k % (c.hi - c.lo + 1);
        const Dataset data = random_dataset(gen, n, r, s, k % 2 == 0);
        const Rational want = u_stat_naive(c.spec, data);
        for (const Rational& got : c.fast(data)) {
          ++checked;
          if (got != want) {
            ++mismatched;
            if (first.empty()) first = c.name + " (" + std::to_string(r) + "," + std::to_string(s) + ") n=" + std::to_string(n);
          }
        }
      }
    }
  }
  std::string detail = std::to_string(checked) + " comparisons, " + std::to_string(mismatched) + " mismatched";
  if (!first.empty()) detail += ", first at " + first;
  return pass_if(mismatched == 0, detail);
}

// 2. population values by exact enumeration
Outcome criterion2() {
  const Rational j2 = population_src(taustar_j_spec(2, 1), xor_law(2));
  const Rational j3 = population_src(taustar_j_spec(3, 1), xor_law(3));
  const DiscreteDist swap = make_discrete({{1, 0}, {0, 1}}, {Rational(1, 2), Rational(1, 2)}, 1, 1);
  const Rational d = population_src(hoeffd_spec(1, 1), swap);
  const Rational r = population_src(hoeffr_spec(1, 1), swap);
  const bool ok = j2 == 0 && j3 == Rational(1, 1024) && d == 0 && r > 0 && r == Rational(1, 64);
  return pass_if(ok, "tauJ xor2 = " + to_string(j2) + ", tauJ xor3 = " + to_string(j3) + ", D = " + to_string(d) + ", R = " + to_string(r));
}

// 3. degeneracy on products of finite marginals
Outcome criterion3() {
  struct Law {
    SrcSpec spec;
    DiscreteDist dist;
  };
  const DiscreteDist line3 = grid(1, {0, 1, 2}), bits = grid(1, {0, 1}), bits2 = grid(2, {0, 1});
  const std::vector<Law> laws = {{taustar_spec(), product_dist(line3, line3)},
                                 {hoeffd_spec(1, 1), product_dist(line3, line3)},
                                 {hoeffr_spec(1, 1), product_dist(bits, line3)},
                                 {taustar_p_spec(2, 1), product_dist(bits2, bits)},
                                 {taustar_j_spec(2, 1), product_dist(bits2, bits)}};
  long k1_bad = 0, k1_total = 0, k2_bad = 0, k2_total = 0;
  for (const auto& law : laws) {
    for (const auto& z : law.dist.support) {
      ++k1_total;
      k1_bad += kernel_projection(law.spec, law.dist, {z}) != 0;
    }
    if (law.spec.order() > 5) continue;
    for (const auto& z1 : law.dist.support)
      for (const auto& z2 : law.dist.support) {
        ++k2_total;
        k2_bad += kernel_projection(law.spec, law.dist, {z1, z2}) != kappa2_factorized(law.spec, law.dist, z1, z2);
      }
  }

  const auto Id = builtin_indicator(IndicatorKind::kHoeffD, 1);
  const auto It = builtin_indicator(IndicatorKind::kTauStar, 1);
  long a_bad = 0, a_total = 0;
  for (const auto& w1 : line3.support)
    for (const auto& w2 : line3.support) {
      ++a_total;
      a_bad += expected_a(Id, w1, w2, line3) * 3 != expected_a(It, w1, w2, line3);
    }
  long c_bad = 0, c_total = 0;
  for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{
           {Rational(1, 3), Rational(2, 3)}, {Rational(1, 5), Rational(1, 2)}, {Rational(7, 8), Rational(1, 9)}}) {
    ++c_total;
    c_bad += expected_a_continuous(Id, a, b) * 3 != expected_a_continuous(It, a, b);
  }

  const std::string detail = "kappa1 nonzero at " + std::to_string(k1_bad) + "/" + std::to_string(k1_total) +
                             " points; kappa2 factorization off at " + std::to_string(k2_bad) + "/" +
                             std::to_string(k2_total) + "; a_I relation on finite support off at " +
                             std::to_string(a_bad) + "/" + std::to_string(a_total) + " (continuous law: " +
                             std::to_string(c_bad) + "/" + std::to_string(c_total) + ")";
  return pass_if(k1_bad == 0 && k2_bad == 0 && a_bad == 0, detail);
}

// 4. KS distance of n*U against the truncated null law
Outcome criterion4() {
  const std::size_t n = 120, sims = 5000, draws = 100000;
  const GeneratorSpec g = parse_generator("gaussian-indep");
  std::string detail;
  bool ok = true;
  std::map<std::string, std::vector<double>> laws;
  for (const std::string name : {"D", "taustar", "R"}) {
    const std::string law = name == "taustar" ? "taustar" : "D";
    if (!laws.count(law)) laws[law] = sample_null_Z(null_law_for(law, 100), draws, 4);
    const Statistic stat = make_statistic(name);
    std::vector<double> scaled(sims);
    for (std::size_t k = 0; k < sims; ++k) {
      Philox4x64 rng = stream(4, k, Domain::kSample);
      scaled[k] = static_cast<double>(n) * stat(sample_joint(g, n, rng));
    }
    const double ks = ks_distance(scaled, laws[law]);
    ok = ok && ks < 0.05;
    detail += (detail.empty() ? "" : ", ") + name + " KS = " + fmt("%.4f", ks);
  }
  return pass_if(ok, detail);
}

// 5. power at desk scale
Outcome criterion5() {
  const std::size_t trials = 1000, B = 1000;
  PowerOptions opt;
  opt.reference_size = B;
  auto power = [&](const std::string& gen, const std::vector<std::string>& stats, std::size_t n) {
    std::map<std::string, double> out;
    for (const auto& row : power_sim(parse_generator(gen), stats, n, trials, 0.05, 5, opt)) out[row.statistic] = row.power;
    return out;
  };
  const auto exp = power("exp-noise", {"tauJ"}, 50);
  const auto x2 = power("xor2", {"tauJ", "D", "R", "tauP"}, 48);
  const auto x3 = power("xor3", {"tauJ"}, 48);
  auto in_band = [](double p) { return p >= 0.02 && p <= 0.10; };
  const bool ok = in_band(exp.at("tauJ")) && in_band(x2.at("tauJ")) && x2.at("D") > 0.5 && x2.at("R") > 0.5 &&
                  x2.at("tauP") > 0.5 && x3.at("tauJ") > 0.5;
  std::string detail = "exp-noise tauJ " + fmt("%.3f", exp.at("tauJ")) + "; xor2 tauJ " + fmt("%.3f", x2.at("tauJ")) +
                       " D " + fmt("%.3f", x2.at("D")) + " R " + fmt("%.3f", x2.at("R")) + " tauP " +
                       fmt("%.3f", x2.at("tauP")) + "; xor3 tauJ " + fmt("%.3f", x3.at("tauJ"));
  return pass_if(ok, detail);
}

// 6. invariance under strictly increasing maps
Outcome criterion6() {
  std::mt19937_64 gen(66);
  long checked = 0, broken = 0;
  std::string first;
  EstimateOptions opt;
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t r = 1 + trial % 2, s = 1;
    const Dataset data = random_dataset(gen, 13, r, s, trial % 3 == 0);
    std::vector<double> logv = data.values(), warped = data.values();
    for (std::size_t c = r; c < data.d(); ++c)
      for (std::size_t i = 0; i < data.n(); ++i) {
        double& y = logv[c * data.n() + i];
        y = y == 0 ? 0.0 : std::copysign(std::log(std::fabs(y) + 10), y);
      }
    std::uniform_real_distribution<double> coef(0.1, 3.0);
    for (std::size_t c = 0; c < data.d(); ++c) {
      const double a = coef(gen), b = coef(gen), shift = coef(gen) * 10;
      for (std::size_t i = 0; i < data.n(); ++i) {
        double& v = warped[c * data.n() + i];
        v = a * std::tanh(v) + b * std::cbrt(v) + shift;
      }
    }
    const Dataset by_log(logv, data.n(), r, s), by_warp(warped, data.n(), r, s);
    for (const auto& name : statistic_names()) {
      if (r > 1 && (name == "tau" || name == "tau2" || name == "taustar" || name == "spearman")) continue;
      const Rational base = estimate(name, data, opt).value;
      for (const Dataset* other : {&by_log, &by_warp}) {
        ++checked;
        if (estimate(name, *other, opt).value != base) {
          ++broken;
          if (first.empty()) first = name;
        }
      }
    }
  }
  return pass_if(broken == 0, std::to_string(checked) + " comparisons, " + std::to_string(broken) + " differed" +
                                  (first.empty() ? "" : ", first " + first));
}

// 7. complexity trend; warn-only
Outcome criterion7() {
  std::string detail;
  bool ok = true;
  cli::BenchOptions d_opt;
  d_opt.with_naive = false;
  std::vector<std::size_t> d_grid;
  for (std::size_t n = 1 << 12; n <= 1 << 16; n *= 2) d_grid.push_back(n);
  double worst = 0;
  for (const auto& row : cli::run_bench("D", d_grid, d_opt))
    if (row.doubling_ratio) worst = std::max(worst, *row.doubling_ratio);
  ok = ok && worst <= 2.7;
  detail = "D worst doubling ratio " + fmt("%.2f", worst) + " (bound 2.7)";

  cli::BenchOptions p_opt;
  p_opt.with_naive = false;
  p_opt.estimate.algorithm = Algorithm::kFast;
  p_opt.estimate.pair_method = PairMethod::kPairSet;
  std::vector<std::size_t> p_grid;
  for (std::size_t n = 1 << 9; n <= 1 << 12; n *= 2) p_grid.push_back(n);
  try {
    worst = 0;
    for (const auto& row : cli::run_bench("tauP", p_grid, p_opt))
      if (row.doubling_ratio) worst = std::max(worst, *row.doubling_ratio);
    ok = ok && worst <= 4.8;
    detail += "; tauP pair-set worst doubling ratio " + fmt("%.2f", worst) + " (bound 4.8)";
  } catch (const CapacityError& e) {
    ok = false;
    detail += std::string("; tauP pair-set not run: ") + e.what();
    worst = 0;
    for (const auto& row : cli::run_bench("tauP", {32, 64, 128}, p_opt))
      if (row.doubling_ratio) worst = std::max(worst, *row.doubling_ratio);
    detail += "; over n = 32..128 its worst doubling ratio is " + fmt("%.2f", worst);
  }
  return {ok ? Verdict::kPass : Verdict::kWarn, detail};
}

// 8. range backends against brute force
Outcome criterion8() {
  std::mt19937_64 gen(88);
  long boxes = 0, bad = 0;
  while (boxes < 10000) {
    const std::size_t d = 1 + gen() % 4, n = 20 + gen() % (d == 4 ? 40 : 120);
    std::uniform_int_distribution<int> level(0, 5);
    std::vector<double> raw(n * d);
    for (auto& v : raw) v = level(gen) * 0.5;
    const RankSpace space(raw, n, d);
    const auto tree = make_counter(Backend::kTree, space.ranks(), n, d, n + 1, default_memory_budget());
    const auto tensor = make_counter(Backend::kTensor, space.ranks(), n, d, n + 1, default_memory_budget());
    for (int q = 0; q < 250; ++q, ++boxes) {
      Box box(d);
      std::vector<double> lo(d, -1e300), hi(d, 1e300);
      std::vector<bool> lo_open(d, false), hi_open(d, false);
      for (std::size_t k = 0; k < d; ++k) {
        if (const int mode = gen() % 3; mode > 0) {
          lo[k] = level(gen) * 0.5;
          lo_open[k] = mode == 2;
          box.lower[k] = lo_open[k] ? Bound::strict(lo[k]) : Bound::closed(lo[k]);
        }
        if (const int mode = gen() % 3; mode > 0) {
          hi[k] = level(gen) * 0.5;
          hi_open[k] = mode == 2;
          box.upper[k] = hi_open[k] ? Bound::strict(hi[k]) : Bound::closed(hi[k]);
        }
      }
      std::uint64_t want = 0;
      for (std::size_t i = 0; i < n; ++i) {
        bool in = true;
        for (std::size_t k = 0; k < d && in; ++k) {
          const double v = raw[i * d + k];
          in = (lo_open[k] ? v > lo[k] : v >= lo[k]) && (hi_open[k] ? v < hi[k] : v <= hi[k]);
        }
        want += in;
      }
      const IntBox ib = space.to_ranks(box);
      bad += tree->count(ib) != want || tensor->count(ib) != want;
    }
  }
  return pass_if(bad == 0, std::to_string(boxes) + " boxes, " + std::to_string(bad) + " disagreements");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symrank acceptance checks"};
  std::vector<int> selected;
  app.add_option("-c,--criterion", selected, "criteria to run (default: all)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) selected = {1, 2, 3, 4, 5, 6, 7, 8};

  const std::function<Outcome()> checks[] = {criterion1, criterion2, criterion3, criterion4,
                                             criterion5, criterion6, criterion7, criterion8};
  int failures = 0;
  for (int c : selected) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = checks[c - 1]();
    } catch (const std::exception& e) {
      o = {Verdict::kFail, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s: %s [%.1f s]\n", c, verdict_name(o.verdict), o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.verdict == Verdict::kFail;
  }
  return failures == 0 ? 0 : 1;
}
