#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "symrank/error.hpp"
#include "symrank/inference/generators.hpp"
#include "symrank/inference/hypothesis.hpp"
#include "symrank/inference/ks.hpp"
#include "symrank/inference/null_law.hpp"
#include "symrank/inference/power.hpp"
#include "symrank/inference/rng.hpp"

using namespace symrank;

namespace {

double mean(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); }

double variance(const std::vector<double>& v) {
  const double m = mean(v);
  double s = 0;
  for (double x : v) s += (x - m) * (x - m);
  return s / (v.size() - 1);
}

PowerOptions quick(std::size_t B) {
  PowerOptions opt;
  opt.reference_size = B;
  return opt;
}

}  // namespace

TEST(Philox, KnownAnswers) {
  // Random123 / numpy.random.Philox reference blocks
  const auto zero = Philox4x64::block({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(zero, (Philox4x64::Counter{0x16554d9eca36314cull, 0xdb20fe9d672d0fdcull, 0xd7e772cee186176bull,
                                       0x7e68b68aec7ba23bull}));
  const auto other = Philox4x64::block({10, 0, 0, 0}, {7, 3});
  EXPECT_EQ(other, (Philox4x64::Counter{0x90dfd2ffb1aecca1ull, 0x49a5a27352fad0a5ull, 0x5fbbe4fdb0ecbab0ull,
                                        0xf492e454b183be07ull}));
  Philox4x64 g(7, 3);
  for (int k = 0; k < 10 * 4; ++k) g();
  EXPECT_EQ(g(), other[0]);
}

TEST(Philox, StreamsAreDistinctAndReproducible) {
  auto a = stream(5, 1, Domain::kSample), b = stream(5, 1, Domain::kSample), c = stream(5, 2, Domain::kSample),
       e = stream(5, 1, Domain::kReference);
  for (int k = 0; k < 8; ++k) {
    const auto va = a(), vc = c(), ve = e();
    EXPECT_EQ(va, b());
    EXPECT_NE(va, vc);
    EXPECT_NE(va, ve);
  }
  for (int k = 0; k < 1000; ++k) {
    const double u = a.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Generators, ShapesAndValidation) {
  auto rng = stream(1, 0, Domain::kSample);
  for (const auto& name : generator_names()) {
    const GeneratorSpec g = parse_generator(name);
    const Dataset d = sample_joint(g, 20, rng);
    EXPECT_EQ(d.n(), 20u);
    EXPECT_EQ(d.r(), generator_r(g));
    EXPECT_EQ(d.s(), generator_s(g));
    const Dataset m = sample_marginals(g, 20, rng);
    EXPECT_EQ(m.r(), d.r());
  }
  const Dataset x = sample_joint(parse_generator("xor3"), 50, rng);
  for (std::size_t i = 0; i < 50; ++i) EXPECT_EQ(std::fmod(x(i, 0) + x(i, 1) + x(i, 2), 2.0), x(i, 3));
  EXPECT_THROW(parse_generator("uniform"), InputError);
  GeneratorSpec bad = parse_generator("gaussian-correlated-y");
  bad.rho = 2;
  EXPECT_THROW(validate(bad), InputError);
}

TEST(Generators, CorrelatedYHasRequestedCorrelation) {
  GeneratorSpec g = parse_generator("gaussian-correlated-y");
  g.rho = 0.8;
  auto rng = stream(2, 0, Domain::kSample);
  const Dataset d = sample_joint(g, 20000, rng);
  double sxy = 0;
  for (std::size_t i = 0; i < d.n(); ++i) sxy += d(i, 1) * d(i, 2);
  EXPECT_NEAR(sxy / d.n(), 0.8, 0.03);
}

TEST(PermutationTest, MaximalStatisticAndConstantX) {
  std::vector<double> x(30);
  std::iota(x.begin(), x.end(), 0.0);
  const Dataset data = Dataset::from_columns({x}, {x});
  const auto tau = make_statistic("tau");
  const TestResult t = permutation_test(data, "tau", tau, 99, 3);
  EXPECT_DOUBLE_EQ(t.p_value, 1.0 / 100);
  EXPECT_DOUBLE_EQ(t.raw_proportion, 0.0);
  EXPECT_EQ(t.reference.size(), 99u);

  const Dataset flat = Dataset::from_columns({std::vector<double>(30, 1.0)}, {x});
  EXPECT_DOUBLE_EQ(permutation_test(flat, "tau", tau, 50, 3).p_value, 1.0);
}

TEST(PermutationTest, DeterministicAcrossRunsAndWorkers) {
  auto rng = stream(3, 0, Domain::kSample);
  const Dataset data = sample_joint(parse_generator("product-noise"), 25, rng);
  const auto d = make_statistic("D");
  const TestResult a = permutation_test(data, "D", d, 40, 17), b = permutation_test(data, "D", d, 40, 17, 4);
  EXPECT_EQ(a.reference, b.reference);
  EXPECT_EQ(a.p_value, b.p_value);
  EXPECT_NE(permutation_test(data, "D", d, 40, 18).reference, a.reference);
}

TEST(PermutationTest, ErrorsNameTheReplicate) {
  const Dataset data = Dataset::from_columns({{1, 2, 3, 4, 5, 6}}, {{2, 1, 4, 3, 6, 5}});
  int calls = 0;
  const Statistic flaky = [&](const Dataset&) -> double {
    if (calls++ == 3) throw InputError("boom");
    return 0.0;
  };
  try {
    permutation_test(data, "flaky", flaky, 10, 1);
    FAIL() << "expected an error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("replicate 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(permutation_test(data, "tau", make_statistic("tau"), 0, 1), InputError);
  EXPECT_THROW(make_statistic("dcov"), InputError);
}

TEST(MarginalReference, CalibratedUnderIndependence) {
  const auto rows = power_sim(parse_generator("gaussian-indep"), {"tau", "D", "tauP"}, 30, 1000, 0.05, 9, quick(500));
  for (const auto& row : rows) {
    EXPECT_GE(row.power, 0.03) << row.statistic;
    EXPECT_LE(row.power, 0.07) << row.statistic;
  }
}

TEST(MarginalReference, BankIsReusableAndSeeded) {
  const GeneratorSpec g = parse_generator("xor3");
  ReferenceBank bank;
  const auto stat = make_statistic("tauJ");
  const TestResult a = marginal_reference_test(g, "tauJ", stat, 100, 40, 4, 1, &bank);
  const TestResult b = marginal_reference_test(g, "tauJ", stat, 100, 40, 4);
  EXPECT_EQ(a.reference, b.reference);
  EXPECT_EQ(bank.values, a.reference);
  EXPECT_EQ(a.scheme, "marginal-reference");
  EXPECT_GT(a.p_value, 0.0);
  EXPECT_LE(a.p_value, 1.0);
}

TEST(Power, NoiselessProductIsDetected) {
  GeneratorSpec g = parse_generator("product-noise");
  g.sigma = 0;
  // near 0.95 for both at this n; tauP is not among the consistent statistics and sits near 0.75
  for (const auto& row : power_sim(g, {"D", "R"}, 50, 400, 0.05, 5, quick(400)))
    EXPECT_GT(row.power, 0.9) << row.statistic;
}

TEST(Power, JointTauStarParityOnXor) {
  const auto even = power_sim(parse_generator("xor2"), {"tauJ", "D"}, 48, 150, 0.05, 6, quick(200));
  EXPECT_EQ(even[0].power, 0.0);
  EXPECT_GT(even[1].power, 0.5);
  const auto odd = power_sim(parse_generator("xor3"), {"tauJ"}, 48, 150, 0.05, 6, quick(200));
  EXPECT_GT(odd[0].power, 0.5);
}

TEST(Power, FullPermutationFlagMatchesSchemeAndWorkers) {
  GeneratorSpec g = parse_generator("product-noise");
  g.sigma = 0.5;
  PowerOptions opt = quick(60);
  opt.full_permutation = true;
  const auto a = power_sim(g, {"tauP", "D"}, 25, 30, 0.05, 8, opt);
  opt.workers = 3;
  const auto b = power_sim(g, {"tauP", "D"}, 25, 30, 0.05, 8, opt);
  EXPECT_EQ(a[0].scheme, "permutation");
  EXPECT_EQ(a[1].rejections, b[1].rejections);
  EXPECT_NEAR(a[1].se, std::sqrt(a[1].power * (1 - a[1].power) / 30), 1e-12);
}

TEST(NullLaw, MeanVarianceAndScale) {
  const NullLawSpec d = null_law_for("D"), t = null_law_for("taustar");
  const auto zd = sample_null_Z(d, 20000, 11), zt = sample_null_Z(t, 20000, 11);
  for (std::size_t k = 0; k < zd.size(); ++k) ASSERT_EQ(zt[k], 36.0 * zd[k]);
  const double pi4 = std::pow(std::numbers::pi, 4), zeta4 = pi4 / 90;
  const double var_unit = 2 * zeta4 * zeta4;  // Z without the 1/pi^4 scale
  EXPECT_NEAR(var_unit, 2.3431, 5e-4);
  std::vector<double> z(zd.size());
  for (std::size_t k = 0; k < z.size(); ++k) z[k] = zd[k] * pi4;
  // relative sd of the sample variance is about sqrt(10.8 / count)
  EXPECT_NEAR(variance(z) / var_unit, 1.0, 4 * std::sqrt(10.8 / 20000));
  EXPECT_NEAR(mean(z), 0.0, 4 * std::sqrt(var_unit / 20000));
  EXPECT_GT(truncation_variance(d), 0.0);
  EXPECT_LT(truncation_variance(d) / null_law_variance(d), 1e-6);
  EXPECT_THROW(null_law_for("tauP"), InputError);
  EXPECT_EQ(sample_null_Z(d, 50, 3, 1), sample_null_Z(d, 50, 3, 4));
}

TEST(Ks, DistanceAndSeries) {
  EXPECT_DOUBLE_EQ(ks_distance({1, 2, 3}, {2.5}), 2.0 / 3);
  EXPECT_DOUBLE_EQ(ks_distance({1, 2, 3}, {3, 2, 1}), 0.0);
  EXPECT_DOUBLE_EQ(ks_distance({1, 1, 2}, {1, 2, 2}), 1.0 / 3);
  // scipy.stats.kstwobign.sf at the same lambda
  EXPECT_NEAR(ks_pvalue(0.1, 500, 700), 0.005370246198514635, 1e-12);
  EXPECT_NEAR(ks_pvalue(0.05, 5000, 100000), 8.398705621379215e-11, 1e-20);
  EXPECT_NEAR(ks_pvalue(0.2, 40, 60), 0.26122261527451845, 1e-12);
  EXPECT_THROW(ks_distance({}, {1}), InputError);
}
