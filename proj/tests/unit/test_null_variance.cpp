#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "symrank/inference/null_law.hpp"

using namespace symrank;

// One million K = 100 draws: the sample variance of Z lands within 1% of 2 zeta(4)^2.
TEST(NullLawSlow, TruncatedVarianceWithinOnePercent) {
  const NullLawSpec spec = null_law_for("D", 100);
  const auto z = sample_null_Z(spec, 1'000'000, 2024);
  const double pi4 = std::pow(std::numbers::pi, 4), target = 2 * (pi4 / 90) * (pi4 / 90);
  double m = 0, s = 0;
  for (double v : z) m += v * pi4;
  m /= z.size();
  for (double v : z) s += (v * pi4 - m) * (v * pi4 - m);
  s /= z.size() - 1;
  EXPECT_NEAR(s / target, 1.0, 0.01);
}
