#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symrank {

// scale * sum_{i,j <= K} (chi2_{1,ij} - 1) / (i^2 j^2)
struct NullLawSpec {
  std::size_t K = 100;
  double factor = 1;  // 36 for tau*, 1 for D and R; scale = factor / pi^4

  double scale() const;
};

// Law name: taustar, D or R.
NullLawSpec null_law_for(const std::string& law, std::size_t K = 100);

// Var of the untruncated law and the variance missing from the truncation, both in scaled units.
double null_law_variance(const NullLawSpec& spec);
double truncation_variance(const NullLawSpec& spec);

// Draw k uses stream (seed, k); the draw for factor f is exactly f times the factor-1 draw.
std::vector<double> sample_null_Z(const NullLawSpec& spec, std::size_t count, std::uint64_t seed,
                                  unsigned workers = 1);

}  // namespace symrank
