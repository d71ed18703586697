#pragma once

#include <vector>

namespace symrank {

// sup |F_a - F_b| over the pooled sample.
double ks_distance(std::vector<double> a, std::vector<double> b);
// Asymptotic two-sample p-value from the Kolmogorov series.
double ks_pvalue(double distance, std::size_t na, std::size_t nb);

}  // namespace symrank
