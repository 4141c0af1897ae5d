// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "consistat/consistency.hpp"
#include "consistat/dataset.hpp"
#include "consistat/distributions.hpp"
#include "consistat/errors.hpp"
#include "consistat/rank_distributions.hpp"
#include "consistat/report.hpp"
#include "consistat/serde.hpp"
#include "consistat/simulate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitInputError = 2;

void print_value(double v) { std::printf("%.12g\n", v); }

consistat::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw consistat::Error("cannot open file: " + path);
  return consistat::json::parse(in);
}

void apply_config_json(consistat::AnalysisConfig& config, const consistat::json& j) {
  if (j.contains("alpha")) config.alpha = j.at("alpha").get<double>();
  if (j.contains("correlation") && !j.at("correlation").is_null()) {
    config.correlation_kind =
        consistat::correlation_kind_from_string(j.at("correlation").get<std::string>());
  }
  if (j.contains("strong_r")) config.strong_r = j.at("strong_r").get<double>();
  if (j.contains("lilliefors")) config.lilliefors = j.at("lilliefors").get<bool>();
  if (j.contains("format")) {
    const auto f = j.at("format").get<std::string>();
    if (f == "text") config.format = consistat::OutputFormat::Text;
    else if (f == "json") config.format = consistat::OutputFormat::Json;
    else throw consistat::DomainError("config: unknown format '" + f + "'");
  }
}

struct AnalyzeOptions {
  std::string csv_path;
  std::string config_path;
  std::string format;
  std::string dump_records_path;
  std::optional<double> alpha;
  std::optional<double> strong_r;
  std::string correlation;
  bool lilliefors = false;
  bool fail_on_inconsistent = false;
};

int run_analyze(const AnalyzeOptions& opts) {
  consistat::AnalysisConfig config;
  if (!opts.config_path.empty()) apply_config_json(config, load_json_file(opts.config_path));
  if (opts.alpha) config.alpha = *opts.alpha;
  if (opts.strong_r) config.strong_r = *opts.strong_r;
  if (!opts.correlation.empty()) {
    config.correlation_kind = consistat::correlation_kind_from_string(opts.correlation);
  }
  if (opts.lilliefors) config.lilliefors = true;
  if (opts.format == "json") config.format = consistat::OutputFormat::Json;
  else if (opts.format == "text") config.format = consistat::OutputFormat::Text;
  else if (!opts.format.empty()) {
    throw consistat::DomainError("unknown format '" + opts.format + "'");
  }
  config.validate();

  const auto ds = consistat::parse_csv_file(opts.csv_path);
  if (!opts.dump_records_path.empty()) {
    std::ofstream out(opts.dump_records_path);
    if (!out) throw consistat::Error("cannot write file: " + opts.dump_records_path);
    out << consistat::to_json(ds).dump(2) << "\n";
  }
  const auto report = consistat::run_analysis(ds, config);
  if (config.format == consistat::OutputFormat::Json) {
    std::cout << consistat::to_json(report).dump(2) << "\n";
  } else {
    std::cout << consistat::render_text(report);
  }
  if (opts.fail_on_inconsistent) {
    for (const auto& e : report.interrater) {
      if (e.verdict.kind == consistat::VerdictKind::MoreConsistent) return kExitInconsistent;
    }
  }
  return kExitOk;
}

struct SimulateOptions {
  std::string spec_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int projects = 0;
  std::vector<std::string> methods;  // id:tau1:tau2:sigma
  std::string sizes;                 // uniform:lo:hi | lognormal:m:s
  std::string emit_dataset;
  std::string calibrate;
  std::string power;
  std::vector<double> effects;
  std::uint64_t replications = 5000;
  double alpha = 0.05;
  int n1 = 0;
  int n2 = 0;
  double rho = 0.5;
  unsigned threads = 1;
  std::string format;
};

consistat::MethodModel parse_method_flag(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, colon - start));
    start = colon + 1;
  }
  if (parts.size() != 4) {
    throw consistat::DomainError("--method expects id:tau1:tau2:sigma, got '" + text + "'");
  }
  consistat::MethodModel m;
  m.method_id = parts[0];
  m.tau1 = std::stod(parts[1]);
  m.tau2 = std::stod(parts[2]);
  m.sigma = std::stod(parts[3]);
  return m;
}

consistat::SizeDistribution parse_sizes_flag(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw consistat::DomainError("--sizes expects uniform:low:high or lognormal:mean:sd");
  }
  const std::string kind = text.substr(0, c1);
  const double first = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  const double second = std::stod(text.substr(c2 + 1));
  if (kind == "uniform") return consistat::UniformSizes{first, second};
  if (kind == "lognormal") return consistat::LogNormalSizes{first, second};
  throw consistat::DomainError("unknown size distribution '" + kind + "'");
}

int run_simulate(const SimulateOptions& opts) {
  consistat::SimulationSpec spec = consistat::default_null_spec();
  if (!opts.spec_path.empty()) {
    spec = consistat::simulation_spec_from_json(load_json_file(opts.spec_path));
  }
  if (opts.projects > 0) spec.n_projects = opts.projects;
  if (!opts.methods.empty()) {
    spec.methods.clear();
    for (const auto& m : opts.methods) spec.methods.push_back(parse_method_flag(m));
  }
  if (!opts.sizes.empty()) spec.sizes = parse_sizes_flag(opts.sizes);
  if (opts.seed_set) spec.seed = opts.seed;
  spec.validate();

  const bool json_out = opts.format != "text";
  int modes = 0;
  if (!opts.emit_dataset.empty()) ++modes;
  if (!opts.calibrate.empty()) ++modes;
  if (!opts.power.empty()) ++modes;
  if (modes != 1) {
    throw consistat::DomainError(
        "choose exactly one of --emit-dataset, --calibrate, --power");
  }

  if (!opts.emit_dataset.empty()) {
    const auto sim = consistat::generate_dataset(spec);
    std::ofstream out(opts.emit_dataset);
    if (!out) throw consistat::Error("cannot write file: " + opts.emit_dataset);
    out << consistat::to_csv(sim.dataset);
    consistat::json summary;
    summary["spec"] = consistat::to_json(spec);
    summary["records"] = sim.dataset.records().size();
    summary["resamples"] = sim.resamples;
    if (json_out) {
      std::cout << summary.dump(2) << "\n";
    } else {
      std::cout << "wrote " << sim.dataset.records().size() << " records to "
                << opts.emit_dataset << " (resamples: " << sim.resamples << ")\n";
    }
    return kExitOk;
  }

  consistat::CalibrationSpec cal;
  cal.replications = opts.replications;
  cal.alpha = opts.alpha;
  cal.seed = opts.seed_set ? opts.seed : spec.seed;
  cal.n1 = opts.n1;
  cal.n2 = opts.n2;
  cal.rho = opts.rho;
  cal.threads = opts.threads;
  if (!opts.spec_path.empty() || opts.projects > 0 || !opts.methods.empty() ||
      !opts.sizes.empty()) {
    cal.measurement = spec;
  }

  if (!opts.calibrate.empty()) {
    const auto id = consistat::test_id_from_string(opts.calibrate);
    const auto result = consistat::calibrate_type1(id, cal);
    if (json_out) {
      std::cout << consistat::to_json(result).dump(2) << "\n";
    } else {
      std::printf("%s: rate=%.6g (se=%.6g) at alpha=%.6g over %llu replications\n",
                  opts.calibrate.c_str(), result.rejection_rate, result.standard_error,
                  result.alpha, static_cast<unsigned long long>(result.replications));
    }
    return kExitOk;
  }

  const auto id = consistat::test_id_from_string(opts.power);
  if (opts.effects.empty()) {
    throw consistat::DomainError("--power requires --effects e1,e2,...");
  }
  const auto points = consistat::power_curve(id, opts.effects, cal);
  if (json_out) {
    consistat::json arr = consistat::json::array();
    for (const auto& p : points) {
      consistat::json entry;
      entry["effect"] = consistat::double_to_json(p.effect);
      entry["rejection_rate"] = consistat::double_to_json(p.rejection_rate);
      entry["standard_error"] = consistat::double_to_json(p.standard_error);
      arr.push_back(std::move(entry));
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& p : points) {
      std::printf("effect=%.6g rate=%.6g se=%.6g\n", p.effect, p.rejection_rate,
                  p.standard_error);
    }
  }
  return kExitOk;
}

struct DistOptions {
  std::string query;
  std::optional<double> p;
  std::optional<double> x;
  std::optional<int> df;
  std::optional<int> d1;
  std::optional<int> d2;
  std::optional<int> na;
  std::optional<int> nb;
  std::optional<int> n;
  std::optional<int> u;
  std::optional<int> t;
  double alpha = 0.05;
};

template <class T>
T require_opt(const std::optional<T>& opt, const char* flag) {
  if (!opt) throw consistat::DomainError(std::string("missing required option ") + flag);
  return *opt;
}

int run_dist(const DistOptions& o) {
  const std::string& q = o.query;
  if (q == "normal-cdf") {
    print_value(consistat::std_normal_cdf(require_opt(o.x, "--x")));
  } else if (q == "normal-quantile") {
    print_value(consistat::std_normal_quantile(require_opt(o.p, "--p")));
  } else if (q == "t-cdf") {
    print_value(consistat::student_t_cdf(require_opt(o.x, "--x"), require_opt(o.df, "--df")));
  } else if (q == "t-quantile") {
    print_value(consistat::student_t_quantile(require_opt(o.p, "--p"), require_opt(o.df, "--df")));
  } else if (q == "f-cdf") {
    print_value(consistat::f_cdf(require_opt(o.x, "--x"), require_opt(o.d1, "--d1"),
                                 require_opt(o.d2, "--d2")));
  } else if (q == "f-quantile") {
    print_value(consistat::f_quantile(require_opt(o.p, "--p"), require_opt(o.d1, "--d1"),
                                      require_opt(o.d2, "--d2")));
  } else if (q == "chi2-cdf") {
    print_value(consistat::chi_square_cdf(require_opt(o.x, "--x"), require_opt(o.df, "--df")));
  } else if (q == "chi2-quantile") {
    print_value(
        consistat::chi_square_quantile(require_opt(o.p, "--p"), require_opt(o.df, "--df")));
  } else if (q == "u-pmf") {
    const auto pmf = consistat::exact_u_pmf(require_opt(o.na, "--na"), require_opt(o.nb, "--nb"));
    if (o.u) {
      if (*o.u < 0 || *o.u > pmf.max_value()) throw consistat::DomainError("--u out of support");
      print_value(pmf.probabilities[*o.u]);
    } else {
      for (int v = 0; v <= pmf.max_value(); ++v) {
        std::printf("%d %.12g\n", v, pmf.probabilities[v]);
      }
    }
  } else if (q == "u-critical") {
    const auto crit = consistat::u_critical(require_opt(o.na, "--na"), require_opt(o.nb, "--nb"),
                                            o.alpha);
    if (crit) std::printf("%d\n", *crit);
    else std::printf("none\n");
  } else if (q == "w-pmf") {
    const auto pmf = consistat::exact_t_pmf(require_opt(o.n, "--n"));
    if (o.t) {
      if (*o.t < 0 || *o.t > pmf.max_value()) throw consistat::DomainError("--t out of support");
      print_value(pmf.probabilities[*o.t]);
    } else {
      for (int v = 0; v <= pmf.max_value(); ++v) {
        std::printf("%d %.12g\n", v, pmf.probabilities[v]);
      }
    }
  } else if (q == "w-critical") {
    const auto crit = consistat::t_critical(require_opt(o.n, "--n"), o.alpha);
    if (crit) std::printf("%d\n", *crit);
    else std::printf("none\n");
  } else {
    throw consistat::DomainError("unknown dist query '" + q + "'");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"consistency analysis for software measurement methods"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "run the full reliability analysis on a CSV file");
  analyze->add_option("csv", analyze_opts.csv_path, "input CSV (project,method,rater,value)")
      ->required();
  analyze->add_option("--config", analyze_opts.config_path, "JSON config file");
  double alpha_flag = -1.0;
  analyze->add_option("--alpha", alpha_flag, "significance level (default 0.05)");
  double strong_r_flag = -1.0;
  analyze->add_option("--strong-r", strong_r_flag, "calibration correlation threshold");
  analyze->add_option("--correlation", analyze_opts.correlation,
                      "independence-gate coefficient: pearson|spearman|kendall");
  analyze->add_flag("--lilliefors", analyze_opts.lilliefors,
                    "parameter-estimation-corrected KS critical values");
  analyze->add_option("--format", analyze_opts.format, "text|json (default text)");
  analyze->add_option("--dump-records", analyze_opts.dump_records_path,
                      "write the parsed records as a JSON array to this path");
  analyze->add_flag("--fail-on-inconsistent", analyze_opts.fail_on_inconsistent,
                    "exit 1 when any method is found more consistent than another");

  SimulateOptions sim_opts;
  auto* simulate = app.add_subcommand("simulate", "generate synthetic data and run calibrations");
  simulate->add_option("--spec", sim_opts.spec_path, "JSON simulation spec");
  auto* seed_opt = simulate->add_option("--seed", sim_opts.seed, "RNG seed");
  simulate->add_option("--projects", sim_opts.projects, "number of projects");
  simulate->add_option("--method", sim_opts.methods,
                       "method model id:tau1:tau2:sigma (repeatable)");
  simulate->add_option("--sizes", sim_opts.sizes, "uniform:low:high or lognormal:mean:sd");
  simulate->add_option("--emit-dataset", sim_opts.emit_dataset, "write a generated CSV here");
  simulate->add_option("--calibrate", sim_opts.calibrate, "type-I calibration for a test id");
  simulate->add_option("--power", sim_opts.power, "power curve for a test id");
  simulate->add_option("--effects", sim_opts.effects, "effect grid for --power")->delimiter(',');
  simulate->add_option("--replications", sim_opts.replications, "Monte Carlo replications");
  simulate->add_option("--alpha", sim_opts.alpha, "significance level");
  simulate->add_option("--n1", sim_opts.n1, "first sample size (0 = per-test default)");
  simulate->add_option("--n2", sim_opts.n2, "second sample size (0 = per-test default)");
  simulate->add_option("--rho", sim_opts.rho, "pair correlation for related-sample nulls");
  simulate->add_option("--threads", sim_opts.threads, "worker threads (results are identical)");
  simulate->add_option("--format", sim_opts.format, "text|json (default json)");

  DistOptions dist_opts;
  auto* dist = app.add_subcommand("dist", "query the reference distributions");
  dist->add_option("query", dist_opts.query,
                   "one of: normal-cdf normal-quantile t-cdf t-quantile f-cdf f-quantile "
                   "chi2-cdf chi2-quantile u-pmf u-critical w-pmf w-critical")
      ->required();
  dist->add_option("--p", dist_opts.p, "probability");
  dist->add_option("--x", dist_opts.x, "evaluation point");
  dist->add_option("--df", dist_opts.df, "degrees of freedom");
  dist->add_option("--d1", dist_opts.d1, "numerator degrees of freedom");
  dist->add_option("--d2", dist_opts.d2, "denominator degrees of freedom");
  dist->add_option("--na", dist_opts.na, "first sample size");
  dist->add_option("--nb", dist_opts.nb, "second sample size");
  dist->add_option("--n", dist_opts.n, "sample size");
  dist->add_option("--u", dist_opts.u, "U value for u-pmf");
  dist->add_option("--t", dist_opts.t, "T value for w-pmf");
  dist->add_option("--alpha", dist_opts.alpha, "significance level (default 0.05)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      if (alpha_flag >= 0.0) analyze_opts.alpha = alpha_flag;
      if (strong_r_flag >= 0.0) analyze_opts.strong_r = strong_r_flag;
      return run_analyze(analyze_opts);
    }
    if (*simulate) {
      sim_opts.seed_set = seed_opt->count() > 0;
      return run_simulate(sim_opts);
    }
    if (*dist) {
      return run_dist(dist_opts);
    }
  } catch (const consistat::ParseError& e) {
    std::cerr << "error (line " << e.line() << "): " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
