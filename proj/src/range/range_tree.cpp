#include "symrank/range/range_tree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "symrank/error.hpp"

namespace symrank {

RangeTree::RangeTree(const std::vector<std::int32_t>& points, std::size_t n, std::size_t d, std::size_t bucket)
    : n_(n), d_(d), bucket_(std::max<std::size_t>(bucket, 1)) {
  if (d == 0) throw InputError("range tree needs d >= 1");
  if (points.size() != n * d) throw InputError("range tree: point array has wrong size");
  if (n > std::numeric_limits<std::uint32_t>::max() / 2) throw CapacityError("range tree: too many points");
  pts_ = &points;
  std::vector<std::uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0u);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return points[a * d] < points[b * d]; });
  root_ = build(idx, 0);
  pts_ = nullptr;
}

std::uint32_t RangeTree::build(std::vector<std::uint32_t>& idx, std::size_t k) {
  const auto& p = *pts_;
  Node nd{};
  nd.dim = static_cast<std::uint8_t>(k);
  nd.min_key = idx.empty() ? std::numeric_limits<std::int32_t>::max() : p[idx.front() * d_ + k];
  nd.max_key = idx.empty() ? std::numeric_limits<std::int32_t>::min() : p[idx.back() * d_ + k];
  if (k + 1 == d_) {
    nd.kind = Kind::kSorted;
    nd.begin = static_cast<std::uint32_t>(sorted_.size());
    for (auto i : idx) sorted_.push_back(p[i * d_ + k]);
    nd.end = static_cast<std::uint32_t>(sorted_.size());
  } else if (idx.size() <= bucket_) {
    nd.kind = Kind::kBucket;
    nd.begin = static_cast<std::uint32_t>(bucket_rows_.size() / d_);
    for (auto i : idx) bucket_rows_.insert(bucket_rows_.end(), p.begin() + i * d_, p.begin() + (i + 1) * d_);
    nd.end = static_cast<std::uint32_t>(bucket_rows_.size() / d_);
  } else {
    nd.kind = Kind::kInner;
    {
      std::vector<std::uint32_t> next = idx;
      std::stable_sort(next.begin(), next.end(), [&](auto a, auto b) { return p[a * d_ + k + 1] < p[b * d_ + k + 1]; });
      nd.assoc = build(next, k + 1);
    }
    const std::size_t mid = idx.size() / 2;
    std::vector<std::uint32_t> lhs(idx.begin(), idx.begin() + mid), rhs(idx.begin() + mid, idx.end());
    idx.clear();
    idx.shrink_to_fit();
    nd.left = build(lhs, k);
    nd.right = build(rhs, k);
  }
  nodes_.push_back(nd);
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::uint64_t RangeTree::query(std::uint32_t id, const std::int32_t* lo, const std::int32_t* hi) const {
  const Node& nd = nodes_[id];
  const std::size_t k = nd.dim;
  switch (nd.kind) {
    case Kind::kSorted: {
      const auto first = sorted_.begin() + nd.begin, last = sorted_.begin() + nd.end;
      if (lo[k] > hi[k]) return 0;
      return static_cast<std::uint64_t>(std::upper_bound(first, last, hi[k]) - std::lower_bound(first, last, lo[k]));
    }
    case Kind::kBucket: {
      std::uint64_t c = 0;
      for (std::uint32_t row = nd.begin; row < nd.end; ++row) {
        const std::int32_t* q = bucket_rows_.data() + static_cast<std::size_t>(row) * d_;
        bool in = true;
        for (std::size_t j = k; j < d_ && in; ++j) in = q[j] >= lo[j] && q[j] <= hi[j];
        c += in;
      }
      return c;
    }
    case Kind::kInner:
      if (nd.max_key < lo[k] || nd.min_key > hi[k]) return 0;
      if (lo[k] <= nd.min_key && nd.max_key <= hi[k]) return query(nd.assoc, lo, hi);
      return query(nd.left, lo, hi) + query(nd.right, lo, hi);
  }
  return 0;
}

std::uint64_t RangeTree::count(const std::int32_t* lo, const std::int32_t* hi) const { return query(root_, lo, hi); }

std::size_t RangeTree::memory_bytes() const {
  return nodes_.size() * sizeof(Node) + (sorted_.size() + bucket_rows_.size()) * sizeof(std::int32_t);
}

}  // namespace symrank
