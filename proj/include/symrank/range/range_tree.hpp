#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symrank/range/counter.hpp"

namespace symrank {

// Layered range tree: a balanced tree on coordinate k whose nodes carry a tree on
// coordinates k+1.. over their points; the last coordinate is a sorted array.
// Nodes with few points keep them in a bucket that is scanned directly.
class RangeTree final : public RangeCounter {
 public:
  RangeTree(const std::vector<std::int32_t>& points, std::size_t n, std::size_t d, std::size_t bucket = 32);

  std::size_t dims() const override { return d_; }
  std::size_t size() const override { return n_; }
  using RangeCounter::count;
  std::uint64_t count(const std::int32_t* lo, const std::int32_t* hi) const override;
  std::size_t memory_bytes() const override;
  Backend backend() const override { return Backend::kTree; }

 private:
  enum class Kind : std::uint8_t { kSorted, kBucket, kInner };
  struct Node {
    std::int32_t min_key, max_key;  // range of coordinate `dim` in this subtree
    std::uint32_t begin, end;       // slice of sorted_ (kSorted) or bucket_ rows (kBucket)
    std::uint32_t left, right, assoc;
    std::uint8_t dim;
    Kind kind;
  };

  std::uint32_t build(std::vector<std::uint32_t>& idx, std::size_t k);
  std::uint64_t query(std::uint32_t node, const std::int32_t* lo, const std::int32_t* hi) const;

  const std::vector<std::int32_t>* pts_ = nullptr;  // only during build
  std::size_t n_, d_, bucket_;
  std::uint32_t root_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::int32_t> sorted_;
  std::vector<std::int32_t> bucket_rows_;  // d coordinates per point
};

}  // namespace symrank
