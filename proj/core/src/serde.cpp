// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#include "consistat/serde.hpp"

#include <cmath>
#include <limits>

#include "consistat/errors.hpp"

namespace consistat {

namespace {

json optional_double(const std::optional<double>& v) {
  return v ? double_to_json(*v) : json(nullptr);
}

std::optional<double> optional_double_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return double_from_json(j);
}

json detail_to_json(const TestDetail& detail) {
  return std::visit(
      [](const auto& d) -> json {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return json(nullptr);
        } else if constexpr (std::is_same_v<T, RankTestDetail>) {
          json j;
          j["R_A"] = double_to_json(d.rank_sum_a);
          j["R_B"] = double_to_json(d.rank_sum_b);
          j["U_A"] = double_to_json(d.u_a);
          j["U_B"] = double_to_json(d.u_b);
          j["tie_groups"] = d.tie_groups;
          j["mu_U"] = optional_double(d.mu_u);
          j["sigma_U"] = optional_double(d.sigma_u);
          return j;
        } else if constexpr (std::is_same_v<T, SignedRankDetail>) {
          json j;
          j["T_p"] = double_to_json(d.t_positive);
          j["T_N"] = double_to_json(d.t_negative);
          j["n_effective"] = d.n_effective;
          j["T_bar"] = optional_double(d.t_mean);
          j["sigma_T"] = optional_double(d.sigma_t);
          return j;
        } else if constexpr (std::is_same_v<T, RelatedVarianceDetail>) {
          json j;
          j["s11"] = double_to_json(d.s11);
          j["s22"] = double_to_json(d.s22);
          j["s12"] = double_to_json(d.s12);
          j["det_S"] = double_to_json(d.det_s);
          j["sigma2_hat"] = double_to_json(d.sigma2_hat);
          j["rho_hat"] = double_to_json(d.rho_hat);
          j["multiplier"] = double_to_json(d.multiplier);
          j["df"] = d.df;
          return j;
        } else if constexpr (std::is_same_v<T, MeansDetail>) {
          json j;
          j["a"] = to_json(d.a);
          j["b"] = to_json(d.b);
          j["r12"] = optional_double(d.r12);
          return j;
        } else if constexpr (std::is_same_v<T, KsDetail>) {
          json j;
          j["n"] = d.n;
          j["mean"] = double_to_json(d.mean);
          j["sd"] = double_to_json(d.sd);
          j["lilliefors"] = d.lilliefors;
          return j;
        } else if constexpr (std::is_same_v<T, OneSampleDetail>) {
          json j;
          j["n"] = d.n;
          j["mean"] = double_to_json(d.mean);
          j["sd"] = double_to_json(d.sd);
          return j;
        } else {
          static_assert(std::is_same_v<T, CorrelationOutcome>);
          return to_json(d);
        }
      },
      detail);
}

TestDetail detail_from_json(TestId id, const json& j) {
  if (j.is_null()) return std::monostate{};
  switch (id) {
    case TestId::RaterInfluence:
    case TestId::InterMethodT: {
      OneSampleDetail d;
      d.n = j.at("n").get<std::size_t>();
      d.mean = double_from_json(j.at("mean"));
      d.sd = double_from_json(j.at("sd"));
      return d;
    }
    case TestId::KSNormality: {
      KsDetail d;
      d.n = j.at("n").get<std::size_t>();
      d.mean = double_from_json(j.at("mean"));
      d.sd = double_from_json(j.at("sd"));
      d.lilliefors = j.at("lilliefors").get<bool>();
      return d;
    }
    case TestId::Correlation:
      return correlation_outcome_from_json(j);
    case TestId::MeansIndepZ:
    case TestId::MeansIndepT:
    case TestId::VarIndepF:
    case TestId::MeansRelatedZ: {
      MeansDetail d;
      d.a = sample_summary_from_json(j.at("a"));
      d.b = sample_summary_from_json(j.at("b"));
      d.r12 = optional_double_from(j.at("r12"));
      return d;
    }
    case TestId::VarRelatedChi2: {
      RelatedVarianceDetail d;
      d.s11 = double_from_json(j.at("s11"));
      d.s22 = double_from_json(j.at("s22"));
      d.s12 = double_from_json(j.at("s12"));
      d.det_s = double_from_json(j.at("det_S"));
      d.sigma2_hat = double_from_json(j.at("sigma2_hat"));
      d.rho_hat = double_from_json(j.at("rho_hat"));
      d.multiplier = double_from_json(j.at("multiplier"));
      d.df = j.at("df").get<int>();
      return d;
    }
    case TestId::MannWhitneySmall:
    case TestId::MannWhitneyLarge: {
      RankTestDetail d;
      d.rank_sum_a = double_from_json(j.at("R_A"));
      d.rank_sum_b = double_from_json(j.at("R_B"));
      d.u_a = double_from_json(j.at("U_A"));
      d.u_b = double_from_json(j.at("U_B"));
      d.tie_groups = j.at("tie_groups").get<int>();
      d.mu_u = optional_double_from(j.at("mu_U"));
      d.sigma_u = optional_double_from(j.at("sigma_U"));
      return d;
    }
    case TestId::WilcoxonSmall:
    case TestId::WilcoxonLarge: {
      SignedRankDetail d;
      d.t_positive = double_from_json(j.at("T_p"));
      d.t_negative = double_from_json(j.at("T_N"));
      d.n_effective = j.at("n_effective").get<std::size_t>();
      d.t_mean = optional_double_from(j.at("T_bar"));
      d.sigma_t = optional_double_from(j.at("sigma_T"));
      return d;
    }
  }
  throw DomainError("detail_from_json: unknown test id");
}

}  // namespace

json double_to_json(double v) {
  if (std::isnan(v)) return json("nan");
  if (std::isinf(v)) return json(v > 0 ? "inf" : "-inf");
  return json(v);
}

double double_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw DomainError("unexpected numeric string: " + s);
  }
  return j.get<double>();
}

json to_json(const MeasurementDataset& ds) {
  json arr = json::array();
  for (const auto& r : ds.records()) {
    json rec;
    rec["project"] = r.project_id;
    rec["method"] = r.method_id;
    rec["rater"] = r.rater_id;
    rec["value"] = double_to_json(r.value);
    arr.push_back(std::move(rec));
  }
  return arr;
}

json to_json(const TailDecision& d) {
  json j;
  j["statistic"] = double_to_json(d.statistic);
  j["critical_value"] = double_to_json(d.critical_value);
  j["p_value"] = double_to_json(d.p_value);
  j["alpha"] = double_to_json(d.alpha);
  j["reject"] = d.reject;
  return j;
}

TailDecision tail_decision_from_json(const json& j) {
  TailDecision d;
  d.statistic = double_from_json(j.at("statistic"));
  d.critical_value = double_from_json(j.at("critical_value"));
  d.p_value = double_from_json(j.at("p_value"));
  d.alpha = double_from_json(j.at("alpha"));
  d.reject = j.at("reject").get<bool>();
  return d;
}

json to_json(const SampleSummary& s) {
  json j;
  j["n"] = s.n;
  j["mean"] = double_to_json(s.mean);
  j["var_n"] = double_to_json(s.var_n);
  j["var_unbiased"] = double_to_json(s.var_unbiased);
  return j;
}

SampleSummary sample_summary_from_json(const json& j) {
  SampleSummary s;
  s.n = j.at("n").get<std::size_t>();
  s.mean = double_from_json(j.at("mean"));
  s.var_n = double_from_json(j.at("var_n"));
  s.var_unbiased = double_from_json(j.at("var_unbiased"));
  return s;
}

json to_json(const CorrelationOutcome& c) {
  json j;
  j["coefficient_kind"] = to_string(c.coefficient_kind);
  j["r"] = double_to_json(c.r);
  j["p_value"] = double_to_json(c.p_value);
  return j;
}

CorrelationOutcome correlation_outcome_from_json(const json& j) {
  CorrelationOutcome c;
  c.coefficient_kind = correlation_kind_from_string(j.at("coefficient_kind").get<std::string>());
  c.r = double_from_json(j.at("r"));
  c.p_value = double_from_json(j.at("p_value"));
  return c;
}

json to_json(const TestOutcome& o) {
  json j;
  j["test_id"] = to_string(o.test_id);
  j["statistic"] = double_to_json(o.statistic);
  j["df_or_sizes"] = o.df_or_sizes;
  j["decision"] = to_json(o.decision);
  j["detail"] = detail_to_json(o.detail);
  j["warnings"] = o.warnings;
  return j;
}

TestOutcome test_outcome_from_json(const json& j) {
  TestOutcome o;
  o.test_id = test_id_from_string(j.at("test_id").get<std::string>());
  o.statistic = double_from_json(j.at("statistic"));
  o.df_or_sizes = j.at("df_or_sizes").get<std::vector<int>>();
  o.decision = tail_decision_from_json(j.at("decision"));
  o.detail = detail_from_json(o.test_id, j.at("detail"));
  o.warnings = j.at("warnings").get<std::vector<std::string>>();
  return o;
}

json to_json(const ConsistencyVerdict& v) {
  json j;
  j["kind"] = to_string(v.kind);
  j["method"] = v.method ? json(*v.method) : json(nullptr);
  j["branch_taken"] = v.branch_taken ? json(to_string(*v.branch_taken)) : json(nullptr);
  json gates;
  gates["ks"] = json::array();
  for (const auto& g : v.gates.ks) {
    json entry;
    entry["method"] = g.method_id;
    entry["outcome"] = to_json(g.outcome);
    gates["ks"].push_back(std::move(entry));
  }
  gates["correlation"] = v.gates.correlation ? to_json(*v.gates.correlation) : json(nullptr);
  gates["related"] = v.gates.related;
  j["gates"] = std::move(gates);
  j["evidence"] = json::array();
  for (const auto& e : v.evidence) {
    json entry;
    entry["label"] = e.label;
    entry["outcome"] = to_json(e.outcome);
    j["evidence"].push_back(std::move(entry));
  }
  j["diagnostics"] = v.diagnostics;
  j["warnings"] = v.warnings;
  return j;
}

ConsistencyVerdict verdict_from_json(const json& j) {
  ConsistencyVerdict v;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "MoreConsistent") v.kind = VerdictKind::MoreConsistent;
  else if (kind == "NoDifference") v.kind = VerdictKind::NoDifference;
  else if (kind == "Inconclusive") v.kind = VerdictKind::Inconclusive;
  else throw DomainError("unknown verdict kind: " + kind);
  if (!j.at("method").is_null()) v.method = j.at("method").get<std::string>();
  if (!j.at("branch_taken").is_null()) {
    const std::string b = j.at("branch_taken").get<std::string>();
    if (b.size() != 1 || b[0] < 'a' || b[0] > 'h') throw DomainError("unknown branch: " + b);
    v.branch_taken = static_cast<Branch>(b[0] - 'a');
  }
  const json& gates = j.at("gates");
  for (const auto& entry : gates.at("ks")) {
    v.gates.ks.push_back(
        {entry.at("method").get<std::string>(), test_outcome_from_json(entry.at("outcome"))});
  }
  if (!gates.at("correlation").is_null()) {
    v.gates.correlation = correlation_outcome_from_json(gates.at("correlation"));
  }
  v.gates.related = gates.at("related").get<bool>();
  for (const auto& entry : j.at("evidence")) {
    v.evidence.push_back(
        {entry.at("label").get<std::string>(), test_outcome_from_json(entry.at("outcome"))});
  }
  v.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  v.warnings = j.at("warnings").get<std::vector<std::string>>();
  return v;
}

json to_json(const CalibrationFit& f) {
  json j;
  j["slope"] = double_to_json(f.slope);
  j["intercept"] = double_to_json(f.intercept);
  j["r"] = double_to_json(f.r);
  j["r_squared"] = double_to_json(f.r_squared);
  j["residual_sd"] = double_to_json(f.residual_sd);
  return j;
}

CalibrationFit calibration_fit_from_json(const json& j) {
  CalibrationFit f;
  f.slope = double_from_json(j.at("slope"));
  f.intercept = double_from_json(j.at("intercept"));
  f.r = double_from_json(j.at("r"));
  f.r_squared = double_from_json(j.at("r_squared"));
  f.residual_sd = double_from_json(j.at("residual_sd"));
  return f;
}

json to_json(const AnalysisReport& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["alpha"] = double_to_json(r.alpha);
  json digest;
  digest["n_records"] = r.dataset.n_records;
  digest["projects"] = r.dataset.projects;
  digest["methods"] = r.dataset.methods;
  json raters = json::object();
  for (const auto& m : r.dataset.methods) {
    const auto it = r.dataset.raters.find(m);
    raters[m] = it != r.dataset.raters.end() ? json(it->second) : json(json::array());
  }
  digest["raters"] = std::move(raters);
  j["dataset"] = std::move(digest);
  j["rater_influence"] = json::array();
  for (const auto& e : r.rater_influence) {
    json entry;
    entry["method"] = e.method_id;
    entry["outcome"] = e.outcome ? to_json(*e.outcome) : json(nullptr);
    entry["skipped_reason"] = e.skipped_reason;
    j["rater_influence"].push_back(std::move(entry));
  }
  j["interrater"] = json::array();
  for (const auto& e : r.interrater) {
    json entry;
    entry["method_a"] = e.method_a;
    entry["method_b"] = e.method_b;
    entry["verdict"] = to_json(e.verdict);
    j["interrater"].push_back(std::move(entry));
  }
  j["intermethod"] = json::array();
  for (const auto& e : r.intermethod) {
    json entry;
    entry["method_a"] = e.method_a;
    entry["method_b"] = e.method_b;
    entry["equality"] = e.equality ? to_json(*e.equality) : json(nullptr);
    entry["calibration"] = e.calibration ? to_json(*e.calibration) : json(nullptr);
    entry["calibration_note"] = e.calibration_note;
    entry["skipped_reason"] = e.skipped_reason;
    j["intermethod"].push_back(std::move(entry));
  }
  j["warnings"] = r.warnings;
  return j;
}

AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  r.schema_version = j.at("schema_version").get<int>();
  r.alpha = double_from_json(j.at("alpha"));
  const json& digest = j.at("dataset");
  r.dataset.n_records = digest.at("n_records").get<std::size_t>();
  r.dataset.projects = digest.at("projects").get<std::vector<std::string>>();
  r.dataset.methods = digest.at("methods").get<std::vector<std::string>>();
  for (const auto& [key, value] : digest.at("raters").items()) {
    r.dataset.raters[key] = value.get<std::vector<std::string>>();
  }
  for (const auto& entry : j.at("rater_influence")) {
    RaterInfluenceEntry e;
    e.method_id = entry.at("method").get<std::string>();
    if (!entry.at("outcome").is_null()) e.outcome = test_outcome_from_json(entry.at("outcome"));
    e.skipped_reason = entry.at("skipped_reason").get<std::string>();
    r.rater_influence.push_back(std::move(e));
  }
  for (const auto& entry : j.at("interrater")) {
    InterraterEntry e;
    e.method_a = entry.at("method_a").get<std::string>();
    e.method_b = entry.at("method_b").get<std::string>();
    e.verdict = verdict_from_json(entry.at("verdict"));
    r.interrater.push_back(std::move(e));
  }
  for (const auto& entry : j.at("intermethod")) {
    InterMethodEntry e;
    e.method_a = entry.at("method_a").get<std::string>();
    e.method_b = entry.at("method_b").get<std::string>();
    if (!entry.at("equality").is_null()) e.equality = test_outcome_from_json(entry.at("equality"));
    if (!entry.at("calibration").is_null()) {
      e.calibration = calibration_fit_from_json(entry.at("calibration"));
    }
    e.calibration_note = entry.at("calibration_note").get<std::string>();
    e.skipped_reason = entry.at("skipped_reason").get<std::string>();
    r.intermethod.push_back(std::move(e));
  }
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

json to_json(const CalibrationResult& r) {
  json j;
  j["test_id"] = to_string(r.test_id);
  j["replications"] = r.replications;
  j["rejection_rate"] = double_to_json(r.rejection_rate);
  j["alpha"] = double_to_json(r.alpha);
  j["standard_error"] = double_to_json(r.standard_error);
  j["seed"] = r.seed;
  return j;
}

CalibrationResult calibration_result_from_json(const json& j) {
  CalibrationResult r;
  r.test_id = test_id_from_string(j.at("test_id").get<std::string>());
  r.replications = j.at("replications").get<std::uint64_t>();
  r.rejection_rate = double_from_json(j.at("rejection_rate"));
  r.alpha = double_from_json(j.at("alpha"));
  r.standard_error = double_from_json(j.at("standard_error"));
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

json to_json(const SimulationSpec& s) {
  json j;
  j["n_projects"] = s.n_projects;
  j["seed"] = s.seed;
  json sizes;
  if (const auto* u = std::get_if<UniformSizes>(&s.sizes)) {
    sizes["kind"] = "uniform";
    sizes["low"] = double_to_json(u->low);
    sizes["high"] = double_to_json(u->high);
  } else {
    const auto& ln = std::get<LogNormalSizes>(s.sizes);
    sizes["kind"] = "lognormal";
    sizes["log_mean"] = double_to_json(ln.log_mean);
    sizes["log_sd"] = double_to_json(ln.log_sd);
  }
  j["sizes"] = std::move(sizes);
  j["methods"] = json::array();
  for (const auto& m : s.methods) {
    json method;
    method["id"] = m.method_id;
    method["tau1"] = double_to_json(m.tau1);
    method["tau2"] = double_to_json(m.tau2);
    method["sigma"] = double_to_json(m.sigma);
    j["methods"].push_back(std::move(method));
  }
  return j;
}

SimulationSpec simulation_spec_from_json(const json& j) {
  SimulationSpec s;
  s.n_projects = j.at("n_projects").get<int>();
  s.seed = j.at("seed").get<std::uint64_t>();
  const json& sizes = j.at("sizes");
  const std::string kind = sizes.at("kind").get<std::string>();
  if (kind == "uniform") {
    UniformSizes u;
    u.low = double_from_json(sizes.at("low"));
    u.high = double_from_json(sizes.at("high"));
    s.sizes = u;
  } else if (kind == "lognormal") {
    LogNormalSizes ln;
    ln.log_mean = double_from_json(sizes.at("log_mean"));
    ln.log_sd = double_from_json(sizes.at("log_sd"));
    s.sizes = ln;
  } else {
    throw DomainError("unknown size distribution kind: " + kind);
  }
  s.methods.clear();
  for (const auto& method : j.at("methods")) {
    MethodModel m;
    m.method_id = method.at("id").get<std::string>();
    m.tau1 = double_from_json(method.at("tau1"));
    m.tau2 = double_from_json(method.at("tau2"));
    m.sigma = double_from_json(method.at("sigma"));
    s.methods.push_back(std::move(m));
  }
  s.validate();
  return s;
}

}  // namespace consistat
