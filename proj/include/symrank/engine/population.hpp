#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symrank/engine/src_spec.hpp"
#include "symrank/rational.hpp"

namespace symrank {

// Finite-support law on R^{r+s} with exact rational probabilities.
struct DiscreteDist {
  std::size_t r = 0, s = 0;
  std::vector<std::vector<double>> support;
  std::vector<Rational> probs;
};

// Validates shapes, positivity, sum == 1 and distinct support points.
DiscreteDist make_discrete(std::vector<std::vector<double>> support, std::vector<Rational> probs,
                           std::size_t r, std::size_t s);
// Independent coupling of an X law and a Y law.
DiscreteDist product_dist(const DiscreteDist& x_law, const DiscreteDist& y_law);
// Marginal laws of the X and Y blocks, returned with s = 0.
DiscreteDist x_marginal(const DiscreteDist& dist);
DiscreteDist y_marginal(const DiscreteDist& dist);
// Uniform law on the given points (support in R^d, stored with r = d, s = 0).
DiscreteDist uniform_points(const std::vector<std::vector<double>>& pts);

struct PopulationOptions {
  std::uint64_t budget = 100'000'000;
};

// scale * E[k(Z^1..Z^m)] by enumeration over support^m.
Rational population_src(const SrcSpec& spec, const DiscreteDist& dist, const PopulationOptions& opt = {});
Rational population_src(const SsrcSpec& spec, const DiscreteDist& dist, const PopulationOptions& opt = {});
// scale * |H| * E[I_X(X) a_{I_Y}(Y)]: the one-factor form of the same expectation.
Rational population_src_rewrite(const SrcSpec& spec, const DiscreteDist& dist, const PopulationOptions& opt = {});

// kappa_c(z^1..z^c) = E[kappa(z^1..z^c, Z^{c+1..m})] for the unscaled symmetrised kernel.
Rational kernel_projection(const SrcSpec& spec, const DiscreteDist& dist,
                           const std::vector<std::vector<double>>& fixed, const PopulationOptions& opt = {});

// E[a_I(w^1, w^2, W^3..W^m)] with W iid from `law` (law.r == I.dim(), H = H_tau*).
Rational expected_a(const RankIndicator& ind, const std::vector<double>& w1, const std::vector<double>& w2,
                    const DiscreteDist& law);

// (4 / C(m,2)) E[a_{I_X}(x1,x2,.)] E[a_{I_Y}(y1,y2,.)] under independent marginals.
Rational kappa2_factorized(const SrcSpec& spec, const DiscreteDist& dist, const std::vector<double>& z1,
                           const std::vector<double>& z2);

// Same expectation as expected_a for d = 1 when W is iid uniform on (0, 1) and w1, w2 in (0, 1).
// Exact: each free point is assigned an interval between the fixed points and a relative order.
Rational expected_a_continuous(const RankIndicator& ind, const Rational& w1, const Rational& w2);

}  // namespace symrank
