#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symrank/core/dataset.hpp"
#include "symrank/inference/rng.hpp"

namespace symrank {

// Simulation designs. sigma is the noise sd (product-noise, exp-noise), rho the
// correlation of (Y1, Y2) in gaussian-correlated-y, r and s the split of gaussian-indep.
struct GeneratorSpec {
  std::string name;
  double sigma = 1.0;
  double rho = 0.0;
  std::size_t r = 1, s = 1;
};

const std::vector<std::string>& generator_names();
GeneratorSpec parse_generator(const std::string& name);
void validate(const GeneratorSpec& g);
std::size_t generator_r(const GeneratorSpec& g);
std::size_t generator_s(const GeneratorSpec& g);

// n iid draws from the joint law.
Dataset sample_joint(const GeneratorSpec& g, std::size_t n, Philox4x64& rng);
// X and Y drawn from independent joint samples: a draw from the product of the marginals.
Dataset sample_marginals(const GeneratorSpec& g, std::size_t n, Philox4x64& rng);

}  // namespace symrank
