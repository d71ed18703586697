#include "symrank/core/permutation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symrank/error.hpp"

namespace symrank {

Permutation::Permutation(std::vector<std::uint32_t> mapping) : map_(std::move(mapping)) {
  const std::size_t m = map_.size();
  std::vector<bool> seen(m, false);
  for (auto v : map_) {
    if (v >= m || seen[v]) throw InputError("permutation mapping is not a bijection");
    seen[v] = true;
  }
  // parity from cycle decomposition: sign = (-1)^(m - #cycles)
  std::fill(seen.begin(), seen.end(), false);
  std::size_t cycles = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (seen[j]) continue;
    ++cycles;
    for (std::size_t k = j; !seen[k]; k = map_[k]) seen[k] = true;
  }
  sign_ = ((m - cycles) % 2 == 0) ? 1 : -1;
}

Permutation Permutation::identity(std::size_t m) {
  std::vector<std::uint32_t> v(m);
  for (std::size_t j = 0; j < m; ++j) v[j] = static_cast<std::uint32_t>(j);
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(std::size_t m, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> v(m);
  for (std::size_t j = 0; j < m; ++j) v[j] = static_cast<std::uint32_t>(j);
  std::vector<bool> used(m, false);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const auto a = cyc[k];
      if (a < 1 || a > m) throw InputError("cycle entry out of range");
      if (used[a - 1]) throw InputError("cycles are not disjoint");
      used[a - 1] = true;
      v[a - 1] = cyc[(k + 1) % cyc.size()] - 1;
    }
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> v(map_.size());
  for (std::size_t j = 0; j < map_.size(); ++j) v[map_[j]] = static_cast<std::uint32_t>(j);
  return Permutation(std::move(v));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.order() != order()) throw InputError("composing permutations of different order");
  std::vector<std::uint32_t> v(map_.size());
  for (std::size_t j = 0; j < map_.size(); ++j) v[j] = map_[other.map_[j]];
  return Permutation(std::move(v));
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t j = 0; j < map_.size(); ++j) {
    if (seen[j] || map_[j] == j) continue;
    out += "(";
    for (std::size_t k = j; !seen[k]; k = map_[k]) {
      seen[k] = true;
      if (out.back() != '(') out += " ";
      out += std::to_string(k + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

template <typename T>
Matrix<T> apply_perm(const Permutation& sigma, const Matrix<T>& w) {
  if (sigma.order() != w.m) throw InputError("apply_perm: permutation order does not match column count");
  Matrix<T> out(w.d, w.m);
  for (std::size_t j = 0; j < w.m; ++j) {
    const std::size_t src = j;
    const std::size_t dst = sigma(j);  // column sigma^{-1}(dst) = j
    for (std::size_t i = 0; i < w.d; ++i) out(i, dst) = w(i, src);
  }
  return out;
}

template Matrix<double> apply_perm(const Permutation&, const Matrix<double>&);
template Matrix<std::int32_t> apply_perm(const Permutation&, const Matrix<std::int32_t>&);

void apply_perm_indices(const Permutation& sigma, const std::uint32_t* idx, std::uint32_t* out) {
  for (std::size_t j = 0; j < sigma.order(); ++j) out[sigma(j)] = idx[j];
}

SignedGroup make_group(const std::vector<Permutation>& generators, std::size_t m) {
  constexpr std::size_t kCap = 10000;
  for (const auto& g : generators)
    if (g.order() != m) throw InputError("generator order does not match m");
  std::set<Permutation> seen{Permutation::identity(m)};
  std::vector<Permutation> frontier{Permutation::identity(m)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : generators) {
        Permutation q = g * p;
        if (seen.insert(q).second) {
          if (seen.size() > kCap) throw CapacityError("group exceeds 10000 elements");
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  std::size_t even = 0, odd = 0;
  for (const auto& p : seen) (p.sign() > 0 ? even : odd)++;
  if (even != odd) {
    throw ValidationError("unbalanced group: " + std::to_string(even) + " even, " + std::to_string(odd) +
                          " odd");
  }
  SignedGroup h;
  h.m_ = m;
  h.elems_.assign(seen.begin(), seen.end());
  // identity first, then the rest in lexicographic order
  std::stable_partition(h.elems_.begin(), h.elems_.end(),
                        [&](const Permutation& p) { return p == Permutation::identity(m); });
  return h;
}

SignedGroup h_tau() { return make_group({Permutation::from_cycles(2, {{1, 2}})}, 2); }

SignedGroup h_taustar(std::size_t m) {
  return make_group({Permutation::from_cycles(m, {{1, 4}}), Permutation::from_cycles(m, {{2, 3}})}, m);
}

}  // namespace symrank
