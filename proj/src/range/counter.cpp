#include "symrank/range/counter.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>

#include "symrank/error.hpp"
#include "symrank/range/prefix_tensor.hpp"
#include "symrank/range/range_tree.hpp"
#include "symrank/range/scan_counter.hpp"

namespace symrank {

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::kAuto: return "auto";
    case Backend::kTree: return "tree";
    case Backend::kTensor: return "tensor";
    case Backend::kScan: return "scan";
  }
  return "?";
}

Backend parse_backend(const std::string& name) {
  if (name == "auto") return Backend::kAuto;
  if (name == "tree") return Backend::kTree;
  if (name == "tensor") return Backend::kTensor;
  if (name == "scan") return Backend::kScan;
  throw InputError("unknown backend '" + name + "' (expected auto, tree, tensor or scan)");
}

std::uint64_t RangeCounter::dominated(const std::int32_t* hi) const {
  std::vector<std::int32_t> lo(dims(), std::numeric_limits<std::int32_t>::min());
  return count(lo.data(), hi);
}

std::size_t default_memory_budget() {
  constexpr std::size_t kDefault = std::size_t{256} << 20;
  const char* env = std::getenv("SYMRANK_MEMORY_BUDGET");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || v <= 0) throw InputError(std::string("bad SYMRANK_MEMORY_BUDGET: ") + env);
  double mult = 1;
  switch (*end) {
    case 'k': case 'K': mult = 1024.0; break;
    case 'm': case 'M': mult = 1024.0 * 1024; break;
    case 'g': case 'G': mult = 1024.0 * 1024 * 1024; break;
    case '\0': break;
    default: throw InputError(std::string("bad SYMRANK_MEMORY_BUDGET: ") + env);
  }
  return static_cast<std::size_t>(v * mult);
}

std::size_t tensor_bytes(std::size_t side, std::size_t d) {
  const double b = std::pow(static_cast<double>(side), static_cast<double>(d)) * sizeof(std::uint32_t);
  return b >= 1e18 ? std::numeric_limits<std::size_t>::max() : static_cast<std::size_t>(b);
}

namespace {

// Mirrors RangeTree::build with the default bucket size.
double tree_bytes_rec(double n, std::size_t k, std::size_t d, std::map<std::pair<long long, std::size_t>, double>& memo) {
  constexpr double kNode = 32, kBucket = 32;
  if (n <= 0) return kNode;
  if (k + 1 == d) return kNode + 4 * n;
  if (n <= kBucket) return kNode + 4 * n * d;
  const auto key = std::make_pair(static_cast<long long>(n), k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const double lo = std::floor(n / 2), hi = n - lo;
  const double b = kNode + tree_bytes_rec(n, k + 1, d, memo) + tree_bytes_rec(lo, k, d, memo) +
                   tree_bytes_rec(hi, k, d, memo);
  memo[key] = b;
  return b;
}

}  // namespace

std::size_t tree_bytes_estimate(std::size_t n, std::size_t d) {
  if (n == 0 || d == 0) return 0;
  std::map<std::pair<long long, std::size_t>, double> memo;
  const double b = tree_bytes_rec(static_cast<double>(n), 0, d, memo);
  return b >= 1e18 ? std::numeric_limits<std::size_t>::max() : static_cast<std::size_t>(b);
}

std::unique_ptr<RangeCounter> make_counter(Backend backend, const std::vector<std::int32_t>& points, std::size_t n,
                                           std::size_t d, std::size_t side, std::size_t memory_budget) {
  if (backend == Backend::kAuto) {
    backend = (d <= 3 && tensor_bytes(side, d) <= memory_budget) ? Backend::kTensor : Backend::kTree;
  }
  switch (backend) {
    case Backend::kTensor: return std::make_unique<PrefixTensor>(points, n, d, side, memory_budget);
    case Backend::kTree: return std::make_unique<RangeTree>(points, n, d);
    case Backend::kScan: return std::make_unique<ScanCounter>(points, n, d);
    default: break;
  }
  throw InputError("unresolved backend");
}

}  // namespace symrank
