// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#include "consistat/consistency.hpp"

#include <cmath>
#include <cstdio>

#include "consistat/errors.hpp"

namespace consistat {

namespace {

TestOutcome wrap_correlation(const CorrelationOutcome& corr, double alpha, std::size_t n,
                             double r_critical) {
  TestOutcome out;
  out.test_id = TestId::Correlation;
  out.statistic = corr.r;
  out.df_or_sizes = {static_cast<int>(n)};
  out.detail = corr;
  out.decision = make_decision(corr.r, r_critical, corr.p_value, alpha);
  return out;
}

// |r| threshold at which the t-transformed p-value crosses alpha.
double r_critical_for(double alpha, std::size_t n) {
  if (!(alpha > 0.0)) return 1.0;
  const int df = static_cast<int>(n) - 2;
  const double tc = student_t_quantile(1.0 - alpha / 2.0, df);
  return tc / std::sqrt(df + tc * tc);
}

}  // namespace

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::MoreConsistent: return "MoreConsistent";
    case VerdictKind::NoDifference: return "NoDifference";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  throw DomainError("unknown VerdictKind");
}

std::string to_string(Branch branch) {
  switch (branch) {
    case Branch::a: return "a";
    case Branch::b: return "b";
    case Branch::c: return "c";
    case Branch::d: return "d";
    case Branch::e: return "e";
    case Branch::f: return "f";
    case Branch::g: return "g";
    case Branch::h: return "h";
  }
  throw DomainError("unknown Branch");
}

double ca2(double m1, double m2) {
  if (!(m1 > 0.0) || !(m2 > 0.0)) {
    throw NonPositiveInputError("ca2 requires strictly positive measurements");
  }
  return std::fabs(m1 - m2) / ((m1 + m2) / 2.0);
}

ConsistencySample consistency_sample(const MeasurementDataset& ds, const std::string& method) {
  const auto pair = extract_pair(ds, method);
  ConsistencySample sample;
  sample.method_id = method;
  sample.projects = pair.projects;
  sample.values.reserve(pair.projects.size());
  for (std::size_t i = 0; i < pair.projects.size(); ++i) {
    sample.values.push_back(ca2(pair.first[i], pair.second[i]));
  }
  sample.summary = summarize(sample.values);
  return sample;
}

ConsistencyVerdict compare_methods_interrater(const MeasurementDataset& ds,
                                              const std::string& method_a,
                                              const std::string& method_b,
                                              const AnalysisConfig& config) {
  const double alpha = config.alpha;
  ConsistencyVerdict verdict;

  // Rater-influence gate per method; anomalous raters must be resolved
  // before the methods can be compared.
  std::vector<std::string> influenced;
  for (const auto& m : {method_a, method_b}) {
    const auto pair = extract_pair(ds, m);
    std::vector<double> diffs(pair.first.size());
    for (std::size_t i = 0; i < diffs.size(); ++i) diffs[i] = pair.first[i] - pair.second[i];
    auto outcome = rater_influence_test(diffs, alpha);
    if (outcome.decision.reject) influenced.push_back(m);
    verdict.evidence.push_back({"rater_influence(" + m + ")", std::move(outcome)});
  }
  if (!influenced.empty()) {
    verdict.kind = VerdictKind::Inconclusive;
    for (const auto& m : influenced) {
      verdict.diagnostics.push_back("rater influence differs for method " + m +
                                    "; eliminate or retrain the anomalous rater before comparing");
    }
    return verdict;
  }

  auto sample_a = consistency_sample(ds, method_a);
  auto sample_b = consistency_sample(ds, method_b);
  if (sample_a.values.size() < 3 || sample_b.values.size() < 3) {
    verdict.kind = VerdictKind::Inconclusive;
    verdict.diagnostics.push_back("fewer than 3 projects per method; the normality gate needs n >= 3");
    return verdict;
  }

  // Normality gates.
  for (auto* sample : {&sample_a, &sample_b}) {
    auto outcome = ks_normality(sample->values, alpha, config.lilliefors);
    sample->normal = !outcome.decision.reject;
    verdict.gates.ks.push_back({sample->method_id, outcome});
    verdict.evidence.push_back({"ks(" + sample->method_id + ")", std::move(outcome)});
  }
  const bool both_normal = *sample_a.normal && *sample_b.normal;
  if (*sample_a.normal != *sample_b.normal) {
    verdict.warnings.push_back(
        "mixed normality between the samples; the non-parametric branch is used");
  }

  // Independence gate: correlation of the project-aligned samples.
  bool related = false;
  if (sample_a.projects == sample_b.projects) {
    const CorrelationKind kind = config.correlation_kind.value_or(
        both_normal ? CorrelationKind::Pearson : CorrelationKind::Spearman);
    try {
      const auto corr = correlation(sample_a.values, sample_b.values, kind, alpha);
      related = corr.p_value <= alpha;
      verdict.gates.correlation = corr;
      const double r_crit = kind == CorrelationKind::Kendall
                                ? 1.0
                                : r_critical_for(alpha, sample_a.values.size());
      verdict.evidence.push_back(
          {"correlation", wrap_correlation(corr, alpha, sample_a.values.size(), r_crit)});
    } catch (const ZeroVarianceError&) {
      verdict.warnings.push_back(
          "correlation gate unresolvable (zero-variance sample); samples treated as independent");
    }
  } else {
    verdict.warnings.push_back(
        "methods measured on different project sets; samples treated as independent");
  }
  verdict.gates.related = related;

  const auto conclude = [&](const TestOutcome& decisive, Branch branch, bool by_variance) {
    verdict.branch_taken = branch;
    if (!decisive.decision.reject) {
      verdict.kind = VerdictKind::NoDifference;
      return;
    }
    verdict.kind = VerdictKind::MoreConsistent;
    double score_a;
    double score_b;
    if (by_variance) {
      score_a = sample_a.summary.var_unbiased;
      score_b = sample_b.summary.var_unbiased;
    } else {
      score_a = sample_a.summary.mean;
      score_b = sample_b.summary.mean;
    }
    if (score_a == score_b) {
      verdict.warnings.push_back("decisive test rejected but the summary values tie exactly");
    }
    verdict.method = score_a <= score_b ? method_a : method_b;
  };

  if (both_normal && !related) {
    const bool large = sample_a.values.size() > 30 && sample_b.values.size() > 30;
    auto means = large ? means_indep_large(sample_a.summary, sample_b.summary, alpha)
                       : means_indep_small(sample_a.summary, sample_b.summary, alpha);
    const bool rejected = means.decision.reject;
    verdict.evidence.push_back({"means(a)", std::move(means)});
    if (rejected) {
      conclude(verdict.evidence.back().outcome, Branch::a, /*by_variance=*/false);
      return verdict;
    }
    auto vars = var_indep_f(sample_a.summary, sample_b.summary, alpha);
    verdict.evidence.push_back({"variances(b)", std::move(vars)});
    conclude(verdict.evidence.back().outcome, Branch::b, /*by_variance=*/true);
    return verdict;
  }

  if (both_normal && related) {
    auto means = means_related_z(sample_a.values, sample_b.values, alpha);
    const bool rejected = means.decision.reject;
    verdict.evidence.push_back({"means(c)", std::move(means)});
    if (rejected) {
      conclude(verdict.evidence.back().outcome, Branch::c, /*by_variance=*/false);
      return verdict;
    }
    if (sample_a.values.size() < 4) {
      verdict.branch_taken = Branch::c;
      verdict.kind = VerdictKind::Inconclusive;
      verdict.diagnostics.push_back("the related-samples variance test needs n >= 4 projects");
      return verdict;
    }
    try {
      auto vars = var_related_chi2(sample_a.values, sample_b.values, alpha);
      verdict.evidence.push_back({"variances(d)", std::move(vars)});
      conclude(verdict.evidence.back().outcome, Branch::d, /*by_variance=*/true);
    } catch (const ZeroVarianceError& e) {
      verdict.branch_taken = Branch::d;
      verdict.kind = VerdictKind::Inconclusive;
      verdict.diagnostics.push_back(std::string("related variance test not computable: ") +
                                    e.what());
    }
    return verdict;
  }

  if (!related) {
    auto rank_test = mann_whitney(sample_a.values, sample_b.values, alpha);
    const Branch branch = rank_test.test_id == TestId::MannWhitneySmall ? Branch::e : Branch::f;
    verdict.evidence.push_back(
        {std::string("rank(") + to_string(branch) + ")", std::move(rank_test)});
    conclude(verdict.evidence.back().outcome, branch, /*by_variance=*/false);
    return verdict;
  }

  auto signed_rank = wilcoxon_signed_rank(sample_a.values, sample_b.values, alpha);
  const Branch branch = signed_rank.test_id == TestId::WilcoxonSmall ? Branch::g : Branch::h;
  verdict.evidence.push_back(
      {std::string("signed_rank(") + to_string(branch) + ")", std::move(signed_rank)});
  conclude(verdict.evidence.back().outcome, branch, /*by_variance=*/false);
  return verdict;
}

}  // namespace consistat
