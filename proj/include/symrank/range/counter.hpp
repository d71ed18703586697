#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "symrank/range/box.hpp"

namespace symrank {

enum class Backend { kAuto, kTree, kTensor, kScan };

const char* backend_name(Backend b);
Backend parse_backend(const std::string& name);

// Orthogonal range counting over a fixed set of integer points.
class RangeCounter {
 public:
  virtual ~RangeCounter() = default;
  virtual std::size_t dims() const = 0;
  virtual std::size_t size() const = 0;
  // Points with lo <= p <= hi coordinatewise.
  virtual std::uint64_t count(const std::int32_t* lo, const std::int32_t* hi) const = 0;
  // Points with p <= hi coordinatewise.
  virtual std::uint64_t dominated(const std::int32_t* hi) const;
  virtual std::size_t memory_bytes() const = 0;
  virtual Backend backend() const = 0;

  std::uint64_t count(const IntBox& box) const { return count(box.lo.data(), box.hi.data()); }
};

// Default budget (bytes) for tensors and pair-set trees; SYMRANK_MEMORY_BUDGET overrides.
std::size_t default_memory_budget();

// Bytes needed by a prefix tensor with the given side and dimension (saturating).
std::size_t tensor_bytes(std::size_t side, std::size_t d);
// Rough upper estimate of range-tree bytes for n points in d dimensions.
std::size_t tree_bytes_estimate(std::size_t n, std::size_t d);

// points: n row-major d-vectors with coordinates in [1, side-1] for tensors.
std::unique_ptr<RangeCounter> make_counter(Backend backend, const std::vector<std::int32_t>& points, std::size_t n,
                                           std::size_t d, std::size_t side, std::size_t memory_budget);

}  // namespace symrank
