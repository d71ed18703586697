#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "symrank/core/ranks.hpp"

namespace symrank {

// Bijection on {0..m-1}; mapping[j] = sigma(j).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> mapping);

  static Permutation identity(std::size_t m);
  // 1-based cycle notation, e.g. from_cycles(4, {{1, 4}, {2, 3}}).
  static Permutation from_cycles(std::size_t m, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t order() const { return map_.size(); }
  int sign() const { return sign_; }
  std::uint32_t operator()(std::size_t j) const { return map_[j]; }
  const std::vector<std::uint32_t>& mapping() const { return map_; }

  Permutation inverse() const;
  // (this * other)(j) = this(other(j))
  Permutation operator*(const Permutation& other) const;
  bool operator==(const Permutation& o) const { return map_ == o.map_; }
  bool operator<(const Permutation& o) const { return map_ < o.map_; }

  std::string cycles() const;

 private:
  std::vector<std::uint32_t> map_;
  int sign_ = 1;
};

// Column j of the result is column sigma^{-1}(j) of w.
template <typename T>
Matrix<T> apply_perm(const Permutation& sigma, const Matrix<T>& w);

// Index form of the same action: out[j] = idx[sigma^{-1}(j)].
void apply_perm_indices(const Permutation& sigma, const std::uint32_t* idx, std::uint32_t* out);

class SignedGroup {
 public:
  SignedGroup() = default;
  std::size_t order() const { return m_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<Permutation>& elements() const { return elems_; }

 private:
  friend SignedGroup make_group(const std::vector<Permutation>&, std::size_t);
  std::vector<Permutation> elems_;
  std::size_t m_ = 0;
};

// Closure of the generators; throws ValidationError unless #even == #odd.
SignedGroup make_group(const std::vector<Permutation>& generators, std::size_t m);

SignedGroup h_tau();      // <(1 2)>
SignedGroup h_taustar(std::size_t m = 4);  // <(1 4), (2 3)> inside S_m

}  // namespace symrank
