#include "symrank/fast/estimate.hpp"

#include <algorithm>

#include "common.hpp"
#include "symrank/engine/kernel.hpp"

namespace symrank {

namespace {

std::size_t order_of(const std::string& stat, std::size_t d) {
  if (stat == "tau") return 2;
  if (stat == "spearman") return 3;
  if (stat == "D") return 5;
  if (stat == "R") return 4 + d;
  return 4;
}

void check_split(const std::string& stat, std::size_t r, std::size_t s) {
  if (std::find(statistic_names().begin(), statistic_names().end(), stat) == statistic_names().end())
    throw InputError("unknown statistic '" + stat + "'");
  if (r == 0 || s == 0) throw InputError("statistic " + stat + " needs r >= 1 and s >= 1");
  const bool univariate = stat == "tau" || stat == "tau2" || stat == "taustar" || stat == "spearman";
  if (univariate && (r != 1 || s != 1)) throw InputError("statistic " + stat + " needs r = s = 1");
}

bool naive_fits(std::size_t n, std::size_t m, const EstimateOptions& opt) {
  return n >= m && falling(n, m) <= opt.naive_budget;
}

std::string predicted_backend(std::size_t n, std::size_t d, const EstimateOptions& opt) {
  if (opt.backend != Backend::kAuto) return backend_name(opt.backend);
  return d <= 3 && tensor_bytes(n + 1, d) <= opt.memory_budget ? "tensor" : "tree";
}

FastOptions fast_options(const EstimateOptions& opt) { return {opt.backend, opt.memory_budget, opt.workers}; }

Rational naive_value(const std::string& stat, const Dataset& data, const EstimateOptions& opt) {
  const EnumerationOptions en{opt.naive_budget, opt.workers};
  if (stat == "spearman") return u_stat_naive(spearman_ssrc(), data, en);
  return u_stat_naive(spec_for(stat, data.r(), data.s()), data, en);
}

}  // namespace

Algorithm parse_algorithm(const std::string& name) {
  if (name == "auto") return Algorithm::kAuto;
  if (name == "naive") return Algorithm::kNaive;
  if (name == "fast") return Algorithm::kFast;
  throw InputError("unknown algorithm '" + name + "' (expected auto, naive or fast)");
}

PairMethod parse_pair_method(const std::string& name) {
  if (name == "auto") return PairMethod::kAuto;
  if (name == "pairset") return PairMethod::kPairSet;
  if (name == "bitset") return PairMethod::kBitset;
  throw InputError("unknown pair method '" + name + "' (expected auto, pairset or bitset)");
}

const std::vector<std::string>& statistic_names() {
  static const std::vector<std::string> names = {"tau", "tau2", "taustar", "spearman", "D", "R", "tauP", "tauJ"};
  return names;
}

SrcSpec spec_for(const std::string& stat, std::size_t r, std::size_t s) {
  check_split(stat, r, s);
  if (stat == "tau") return tau_spec();
  if (stat == "tau2") return tau2_spec();
  if (stat == "taustar") return taustar_spec();
  if (stat == "D") return hoeffd_spec(r, s);
  if (stat == "R") return hoeffr_spec(r, s);
  if (stat == "tauP") return taustar_p_spec(r, s);
  if (stat == "tauJ") return taustar_j_spec(r, s);
  throw InputError("statistic " + stat + " is a sum of SRCs; use the SsrcSpec entry point");
}

EstimatePlan plan_estimate(const std::string& stat, std::size_t n, std::size_t r, std::size_t s,
                           const EstimateOptions& opt) {
  check_split(stat, r, s);
  const std::size_t d = r + s, m = order_of(stat, d);
  EstimatePlan plan{stat, "naive", "none"};
  const bool has_fast = stat != "tau2" && stat != "spearman";
  if (opt.algorithm == Algorithm::kNaive) return plan;
  if (!has_fast) {
    if (opt.algorithm == Algorithm::kFast) throw InputError("statistic " + stat + " has no fast path");
    return plan;
  }
  if (stat == "tau") return {stat, "fenwick", "none"};
  if (stat == "D") return {stat, "orthant-counts", predicted_backend(n, d, opt)};
  if (stat == "R") return {stat, "cut-tuples", predicted_backend(n, d, opt)};
  if (opt.algorithm == Algorithm::kAuto && n < opt.pair_crossover && naive_fits(n, m, opt)) return plan;
  PairMethod method = opt.pair_method;
  if (method == PairMethod::kAuto) method = auto_pair_method(n, d, opt.memory_budget);
  if (method == PairMethod::kPairSet) return {stat, "pair-set", predicted_backend(n, d, opt) + "+tree"};
  return {stat, "bitset", "bitset"};
}

Estimate estimate(const std::string& stat, const Dataset& data, const EstimateOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const EstimatePlan plan = plan_estimate(stat, data.n(), data.r(), data.s(), opt);
  Estimate out;
  out.statistic = stat;
  out.n = data.n(), out.r = data.r(), out.s = data.s();
  FastDiagnostics diag;
  const FastOptions fo = fast_options(opt);
  if (plan.algorithm == "naive") {
    out.value = naive_value(stat, data, opt);
    diag.algorithm = "naive";
    diag.backend = "none";
  } else if (stat == "tau") {
    out.value = u_tau_fast(data);
    diag.algorithm = "fenwick";
    diag.backend = "none";
  } else if (stat == "D") {
    out.value = u_d_fast(data, fo, &diag);
  } else if (stat == "R") {
    out.value = u_r_fast(data, fo, &diag);
  } else {
    const PairMethod method = plan.algorithm == "pair-set" ? PairMethod::kPairSet : PairMethod::kBitset;
    out.value = stat == "tauJ" ? u_taustar_j_fast(data, method, fo, &diag) : u_taustar_p_fast(data, method, fo, &diag);
  }
  out.approx = to_double(out.value);
  out.algorithm = diag.algorithm;
  out.backend = diag.backend;
  out.build_seconds = diag.build_seconds;
  out.queries = diag.queries;
  out.memory_bytes = diag.memory_bytes;
  out.total_seconds = detail::seconds_since(t0);
  return out;
}

Estimate estimate(const SrcSpec& spec, const Dataset& data, const EstimateOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  if (opt.algorithm == Algorithm::kFast) throw InputError("custom spec " + spec.name + " has no fast path");
  Estimate out;
  out.statistic = spec.name;
  out.n = data.n(), out.r = data.r(), out.s = data.s();
  out.value = u_stat_naive(spec, data, EnumerationOptions{opt.naive_budget, opt.workers});
  out.approx = to_double(out.value);
  out.algorithm = "naive";
  out.backend = "none";
  out.total_seconds = detail::seconds_since(t0);
  return out;
}

}  // namespace symrank
