#include "symrank/cli/run.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symrank/cli/bench.hpp"
#include "symrank/cli/csv.hpp"
#include "symrank/error.hpp"
#include "symrank/fast/estimate.hpp"
#include "symrank/inference/hypothesis.hpp"
#include "symrank/inference/null_law.hpp"
#include "symrank/inference/power.hpp"
#include "symrank/version.hpp"

namespace symrank::cli {

namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json config_json(const RunConfig& c) {
  json j = {{"command", c.command}, {"seed", c.seed}, {"workers", c.workers}};
  const std::string& cmd = c.command;
  if (cmd == "compute" || cmd == "test" || cmd == "rank") j["input"] = c.input, j["roles"] = c.roles;
  if (cmd == "compute" || cmd == "test" || cmd == "bench") {
    j["statistic"] = c.statistic;
    j["backend"] = c.backend;
    j["algorithm"] = c.algorithm;
    j["pair_method"] = c.pair_method;
    j["crossover"] = c.crossover;
  }
  if (cmd == "test") {
    j["scheme"] = c.scheme;
    j["B"] = c.B;
    if (c.scheme == "marginal-reference") j["generator"] = c.generator, j["n"] = c.n;
  }
  if (cmd == "null-sample") j["law"] = c.law, j["K"] = c.K, j["count"] = c.count;
  if (cmd == "power") {
    j["generator"] = c.generator;
    j["sigma"] = c.sigma;
    j["rho"] = c.rho;
    j["statistics"] = c.statistics;
    j["n"] = c.n;
    j["trials"] = c.trials;
    j["level"] = c.level;
    j["B"] = c.B;
    j["full_permutation"] = c.full_permutation;
  }
  if (cmd == "bench") j["n_grid"] = c.n_grid, j["r"] = c.r, j["s"] = c.s, j["repeats"] = c.repeats;
  return j;
}

json envelope(const RunConfig& c) {
  return {{"tool", "symrank"}, {"version", kVersion}, {"rng", kRngName}, {"config", config_json(c)}};
}

// CSV preamble: comment lines carrying the same envelope.
std::string csv_preamble(const RunConfig& c) {
  return "# symrank " + std::string(kVersion) + "\n# " + envelope(c).dump() + "\n";
}

EstimateOptions estimate_options(const RunConfig& c) {
  EstimateOptions o;
  o.algorithm = parse_algorithm(c.algorithm);
  o.backend = parse_backend(c.backend);
  o.pair_method = parse_pair_method(c.pair_method);
  o.pair_crossover = c.crossover;
  o.workers = c.workers;
  return o;
}

GeneratorSpec generator_spec(const RunConfig& c) {
  GeneratorSpec g;
  g.name = c.generator;
  g.sigma = c.sigma;
  g.rho = c.rho;
  g.r = c.r;
  g.s = c.s;
  validate(g);
  return g;
}

std::string format_of(const RunConfig& c, const char* fallback) {
  const std::string f = c.format.empty() ? fallback : c.format;
  if (f != "json" && f != "csv") throw InputError("format must be json or csv");
  return f;
}

json estimate_json(const Estimate& e) {
  return {{"statistic", e.statistic},
          {"value", to_string(e.value)},
          {"approx", e.approx},
          {"algorithm", e.algorithm},
          {"backend", e.backend},
          {"n", e.n},
          {"r", e.r},
          {"s", e.s},
          {"build_seconds", e.build_seconds},
          {"total_seconds", e.total_seconds},
          {"queries", e.queries},
          {"memory_bytes", e.memory_bytes}};
}

std::string cmd_compute(const RunConfig& c) {
  const IngestResult in = ingest_csv(c.input, c.roles);
  const Estimate e = estimate(c.statistic, in.data, estimate_options(c));
  if (format_of(c, "json") == "json") {
    json j = envelope(c);
    j["result"] = estimate_json(e);
    return j.dump(2) + "\n";
  }
  std::ostringstream o;
  o << csv_preamble(c) << "statistic,value,approx,algorithm,backend,n,r,s,build_seconds,total_seconds,queries\n"
    << e.statistic << ',' << to_string(e.value) << ',' << num(e.approx) << ',' << e.algorithm << ',' << e.backend << ','
    << e.n << ',' << e.r << ',' << e.s << ',' << num(e.build_seconds) << ',' << num(e.total_seconds) << ','
    << e.queries << '\n';
  return o.str();
}

std::string cmd_test(const RunConfig& c) {
  EstimateOptions opt = estimate_options(c);
  opt.workers = 1;
  const Statistic stat = make_statistic(c.statistic, opt);
  TestResult t;
  if (c.scheme == "permutation") {
    const IngestResult in = ingest_csv(c.input, c.roles);
    t = permutation_test(in.data, c.statistic, stat, c.B, c.seed, c.workers);
  } else if (c.scheme == "marginal-reference") {
    t = marginal_reference_test(generator_spec(c), c.statistic, stat, c.B, c.n, c.seed, c.workers);
  } else {
    throw InputError("scheme must be permutation or marginal-reference");
  }
  if (format_of(c, "json") == "json") {
    json j = envelope(c);
    j["result"] = {{"statistic", t.statistic}, {"scheme", t.scheme},       {"observed", t.observed},
                   {"p_value", t.p_value},     {"raw_proportion", t.raw_proportion},
                   {"B", t.reference.size()},  {"seed", t.seed},           {"seconds", t.seconds},
                   {"reference", t.reference}};
    return j.dump(2) + "\n";
  }
  std::ostringstream o;
  o << csv_preamble(c) << "# observed " << num(t.observed) << " p_value " << num(t.p_value) << " raw_proportion "
    << num(t.raw_proportion) << "\nreplicate,value\n";
  for (std::size_t k = 0; k < t.reference.size(); ++k) o << k << ',' << num(t.reference[k]) << '\n';
  return o.str();
}

std::string cmd_null_sample(const RunConfig& c) {
  const NullLawSpec spec = null_law_for(c.law, c.K);
  const auto draws = sample_null_Z(spec, c.count, c.seed, c.workers);
  if (format_of(c, "csv") == "json") {
    json j = envelope(c);
    j["result"] = {{"scale", spec.scale()},
                   {"variance", null_law_variance(spec)},
                   {"truncation_variance", truncation_variance(spec)},
                   {"draws", draws}};
    return j.dump(2) + "\n";
  }
  std::ostringstream o;
  o << csv_preamble(c) << "# scale " << num(spec.scale()) << " variance " << num(null_law_variance(spec))
    << " truncation_variance " << num(truncation_variance(spec)) << "\ndraw,value\n";
  for (std::size_t k = 0; k < draws.size(); ++k) o << k << ',' << num(draws[k]) << '\n';
  return o.str();
}

std::string cmd_power(const RunConfig& c) {
  PowerOptions opt;
  opt.reference_size = c.B;
  opt.full_permutation = c.full_permutation;
  opt.workers = c.workers;
  opt.estimate.backend = parse_backend(c.backend);
  opt.estimate.pair_method = parse_pair_method(c.pair_method);
  const std::vector<std::string> stats = c.statistics.empty() ? std::vector<std::string>{c.statistic} : c.statistics;
  const auto rows = power_sim(generator_spec(c), stats, c.n, c.trials, c.level, c.seed, opt);
  if (format_of(c, "csv") == "json") {
    json j = envelope(c);
    j["result"] = json::array();
    for (const auto& r : rows)
      j["result"].push_back({{"generator", r.generator}, {"sigma", r.sigma}, {"rho", r.rho},
                             {"statistic", r.statistic}, {"scheme", r.scheme}, {"n", r.n},
                             {"trials", r.trials},       {"rejections", r.rejections},
                             {"level", r.level},         {"power", r.power}, {"se", r.se}});
    return j.dump(2) + "\n";
  }
  std::ostringstream o;
  o << csv_preamble(c) << "generator,sigma,rho,statistic,scheme,n,trials,rejections,level,power,se\n";
  for (const auto& r : rows)
    o << r.generator << ',' << num(r.sigma) << ',' << num(r.rho) << ',' << r.statistic << ',' << r.scheme << ','
      << r.n << ',' << r.trials << ',' << r.rejections << ',' << num(r.level) << ',' << num(r.power) << ','
      << num(r.se) << '\n';
  return o.str();
}

std::string cmd_bench(const RunConfig& c) {
  BenchOptions opt;
  opt.r = c.r;
  opt.s = c.s;
  opt.seed = c.seed;
  opt.with_naive = !c.no_naive;
  opt.repeats = c.repeats;
  opt.estimate = estimate_options(c);
  if (c.generator != "gaussian-indep") opt.generator = generator_spec(c);
  const std::vector<std::size_t> grid = c.n_grid.empty() ? std::vector<std::size_t>{c.n} : c.n_grid;
  const auto rows = run_bench(c.statistic, grid, opt);
  auto opt_num = [](const std::optional<double>& v) { return v ? num(*v) : std::string("NA"); };
  if (format_of(c, "csv") == "json") {
    json j = envelope(c);
    j["result"] = json::array();
    for (const auto& r : rows) {
      json row = {{"statistic", r.statistic}, {"n", r.n}, {"r", r.r}, {"s", r.s}, {"fast_seconds", r.fast_seconds},
                  {"fast_algorithm", r.fast_algorithm}, {"backend", r.backend}};
      row["naive_seconds"] = r.naive_seconds ? json(*r.naive_seconds) : json(nullptr);
      row["agree"] = r.agree ? json(*r.agree) : json(nullptr);
      row["doubling_ratio"] = r.doubling_ratio ? json(*r.doubling_ratio) : json(nullptr);
      j["result"].push_back(row);
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream o;
  o << csv_preamble(c) << "statistic,n,r,s,naive_seconds,fast_seconds,fast_algorithm,backend,agree,doubling_ratio\n";
  for (const auto& r : rows)
    o << r.statistic << ',' << r.n << ',' << r.r << ',' << r.s << ',' << opt_num(r.naive_seconds) << ','
      << num(r.fast_seconds) << ',' << r.fast_algorithm << ',' << r.backend << ','
      << (r.agree ? (*r.agree ? "true" : "false") : "NA") << ',' << opt_num(r.doubling_ratio) << '\n';
  return o.str();
}

std::string cmd_rank(const RunConfig& c) {
  const IngestResult in = ingest_csv(c.input, c.roles);
  const RankTable t = joint_ranks(in.data);
  if (format_of(c, "csv") == "json") {
    json j = envelope(c);
    j["result"] = {{"x", in.x_names}, {"y", in.y_names}, {"ranks", json::array()}};
    for (std::size_t i = 0; i < t.n; ++i)
      j["result"]["ranks"].push_back(std::vector<std::int32_t>(t.point(i), t.point(i) + t.d()));
    return j.dump(2) + "\n";
  }
  std::ostringstream o;
  o << csv_preamble(c);
  std::vector<std::string> names(in.x_names);
  names.insert(names.end(), in.y_names.begin(), in.y_names.end());
  for (std::size_t k = 0; k < names.size(); ++k) o << (k ? "," : "") << names[k];
  o << '\n';
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t k = 0; k < t.d(); ++k) o << (k ? "," : "") << t(i, k);
    o << '\n';
  }
  return o.str();
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    std::string text;
    if (c.command == "compute") text = cmd_compute(c);
    else if (c.command == "test") text = cmd_test(c);
    else if (c.command == "null-sample") text = cmd_null_sample(c);
    else if (c.command == "power") text = cmd_power(c);
    else if (c.command == "bench") text = cmd_bench(c);
    else if (c.command == "rank") text = cmd_rank(c);
    else throw InputError("unknown command '" + c.command + "'");
    if (c.output.empty()) {
      out << text;
    } else {
      std::ofstream f(c.output, std::ios::binary);
      if (!f) throw InputError("cannot write '" + c.output + "'");
      f << text;
    }
    return kOk;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Symmetric rank covariance estimation and testing", "symrank"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1, 1);

  auto common = [&c](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "Seed (recorded in the output)");
    sub->add_option("--workers", c.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("-o,--output", c.output, "Output path (default stdout)");
    sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto input = [&c](CLI::App* sub) {
    sub->add_option("-i,--input", c.input, "CSV file with a header row")->required();
    sub->add_option("--roles", c.roles, "Column roles, e.g. \"x:a,b;y:c\"")->required();
  };
  auto estimator = [&c](CLI::App* sub) {
    sub->add_option("--stat", c.statistic, "tau tau2 taustar spearman D R tauP tauJ");
    sub->add_option("--backend", c.backend, "auto tree tensor scan");
    sub->add_option("--algorithm", c.algorithm, "auto naive fast");
    sub->add_option("--pair-method", c.pair_method, "auto pairset bitset");
    sub->add_option("--crossover", c.crossover, "n below which tauP/tauJ run naively");
  };
  auto generator = [&c](CLI::App* sub) {
    sub->add_option("--generator", c.generator, "Simulation design");
    sub->add_option("--sigma", c.sigma, "Noise sd");
    sub->add_option("--rho", c.rho, "Correlation of Y1, Y2");
    sub->add_option("--r", c.r, "X dimension (gaussian-indep)");
    sub->add_option("--s", c.s, "Y dimension (gaussian-indep)");
  };

  CLI::App* compute = app.add_subcommand("compute", "One statistic with diagnostics");
  input(compute), estimator(compute), common(compute);

  CLI::App* test = app.add_subcommand("test", "Permutation or marginal-reference test");
  estimator(test), common(test), generator(test);
  test->add_option("-i,--input", c.input, "CSV file (permutation scheme)");
  test->add_option("--roles", c.roles, "Column roles");
  test->add_option("--scheme", c.scheme, "permutation or marginal-reference");
  test->add_option("--B", c.B, "Reference size")->check(CLI::PositiveNumber);
  test->add_option("--n", c.n, "Sample size (marginal-reference)");

  CLI::App* null = app.add_subcommand("null-sample", "Draws from the truncated limiting law");
  common(null);
  null->add_option("--law", c.law, "taustar, D or R");
  null->add_option("--K", c.K, "Truncation")->check(CLI::PositiveNumber);
  null->add_option("--count", c.count, "Number of draws")->check(CLI::PositiveNumber);

  CLI::App* power = app.add_subcommand("power", "Power simulation table");
  common(power), generator(power);
  power->add_option("--stats", c.statistics, "Comma-separated statistics")->delimiter(',');
  power->add_option("--stat", c.statistic, "Single statistic");
  power->add_option("--backend", c.backend, "auto tree tensor scan");
  power->add_option("--pair-method", c.pair_method, "auto pairset bitset");
  power->add_option("--n", c.n, "Sample size");
  power->add_option("--trials", c.trials, "Simulated data sets")->check(CLI::PositiveNumber);
  power->add_option("--level", c.level, "Test level");
  power->add_option("--B", c.B, "Reference size")->check(CLI::PositiveNumber);
  power->add_flag("--full-permutation", c.full_permutation, "Permutation test per trial");

  CLI::App* bench = app.add_subcommand("bench", "Naive vs fast timings");
  estimator(bench), common(bench), generator(bench);
  bench->add_option("--n-grid", c.n_grid, "Comma-separated sample sizes")->delimiter(',');
  bench->add_option("--n", c.n, "Single sample size");
  bench->add_option("--repeats", c.repeats, "Fast timing repeats (minimum kept)");
  bench->add_flag("--no-naive", c.no_naive, "Skip the naive column");

  CLI::App* rank = app.add_subcommand("rank", "Emit joint ranks");
  input(rank), common(rank);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
  c.command = app.get_subcommands().front()->get_name();
  return run(c, out, err);
}

}  // namespace symrank::cli
