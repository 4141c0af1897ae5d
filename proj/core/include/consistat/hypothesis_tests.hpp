// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "consistat/distributions.hpp"
#include "consistat/summary.hpp"

namespace consistat {

enum class TestId {
  RaterInfluence,
  KSNormality,
  Correlation,
  MeansIndepZ,
  MeansIndepT,
  VarIndepF,
  MeansRelatedZ,
  VarRelatedChi2,
  MannWhitneySmall,
  MannWhitneyLarge,
  WilcoxonSmall,
  WilcoxonLarge,
  InterMethodT,
};

std::string to_string(TestId id);
TestId test_id_from_string(const std::string& name);

enum class CorrelationKind { Pearson, Spearman, Kendall };

std::string to_string(CorrelationKind kind);
CorrelationKind correlation_kind_from_string(const std::string& name);

struct CorrelationOutcome {
  CorrelationKind coefficient_kind = CorrelationKind::Pearson;
  double r = 0.0;
  double p_value = 1.0;
};

/// Rank-sum bookkeeping for the Mann-Whitney test. Midranks are used
/// for ties, so rank sums may be half-integers; U_A + U_B = N_A * N_B
/// holds exactly either way. mu_u / sigma_u are set only when the
/// normal approximation ran.
struct RankTestDetail {
  double rank_sum_a = 0.0;
  double rank_sum_b = 0.0;
  double u_a = 0.0;
  double u_b = 0.0;
  int tie_groups = 0;
  std::optional<double> mu_u;
  std::optional<double> sigma_u;
};

/// Signed-rank bookkeeping: T_p + T_N = n(n+1)/2 over the n_effective
/// non-zero differences.
struct SignedRankDetail {
  double t_positive = 0.0;
  double t_negative = 0.0;
  std::size_t n_effective = 0;
  std::optional<double> t_mean;
  std::optional<double> sigma_t;
};

/// Covariance-matrix bookkeeping for the related-variances test.
/// All entries use divisor n-1.
struct RelatedVarianceDetail {
  double s11 = 0.0;
  double s22 = 0.0;
  double s12 = 0.0;
  double det_s = 0.0;
  double sigma2_hat = 0.0;
  double rho_hat = 0.0;
  double multiplier = 0.0;
  int df = 1;
};

struct MeansDetail {
  SampleSummary a;
  SampleSummary b;
  std::optional<double> r12;  // related-samples variant only
};

struct KsDetail {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;  // divisor-n standard deviation
  bool lilliefors = false;
};

struct OneSampleDetail {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;  // divisor-n
};

using TestDetail = std::variant<std::monostate, RankTestDetail, SignedRankDetail,
                                RelatedVarianceDetail, MeansDetail, KsDetail, OneSampleDetail,
                                CorrelationOutcome>;

/// Audit record of one hypothesis-test evaluation.
struct TestOutcome {
  TestId test_id = TestId::RaterInfluence;
  double statistic = 0.0;
  std::vector<int> df_or_sizes;
  TailDecision decision;
  TestDetail detail;
  std::vector<std::string> warnings;
};

// ---------------------------------------------------------------------------
// Rater-influence gate: one-sample location test on per-project
// differences between two raters of the same method (H0: zero mean).
// Degenerate inputs resolve without a reference distribution: an
// all-zero series accepts with p = 1; a constant non-zero series
// rejects with p = 0.
TestOutcome rater_influence_test(std::span<const double> differences, double alpha);

// Kolmogorov-Smirnov normality gate against N(mean, sd) with both
// parameters estimated from the sample (sd uses divisor n). The plain
// asymptotic Kolmogorov p-value is used by default; `lilliefors`
// switches to critical values corrected for the estimated parameters.
// A zero-variance sample is classified non-normal with p = 0.
TestOutcome ks_normality(std::span<const double> sample, double alpha, bool lilliefors = false);

// Two-sided association test; requires equal lengths n >= 3. Throws
// ZeroVarianceError when either series is constant.
CorrelationOutcome correlation(std::span<const double> x, std::span<const double> y,
                               CorrelationKind kind, double alpha);

// Equality of means, independent samples, large-sample Z variant.
TestOutcome means_indep_large(const SampleSummary& a, const SampleSummary& b, double alpha);

// Equality of means, independent samples, pooled t variant with
// n1 + n2 - 2 degrees of freedom. The <= 30 sample-size bound is a
// regime selector, not a domain bound; callers may exceed it.
TestOutcome means_indep_small(const SampleSummary& a, const SampleSummary& b, double alpha);

// Equality of variances, independent samples, F with (n1-1, n2-1) df.
TestOutcome var_indep_f(const SampleSummary& a, const SampleSummary& b, double alpha);

// Equality of means, related samples: the large-sample Z with the
// paired-correlation term removed from the standard error.
TestOutcome means_related_z(std::span<const double> x, std::span<const double> y, double alpha);

// Equality of variances, related samples: likelihood-ratio statistic
// against chi-square(1); requires n >= 4. Throws ZeroVarianceError when
// the covariance matrix is singular (the test is not computable).
TestOutcome var_related_chi2(std::span<const double> x, std::span<const double> y, double alpha);

// Mann-Whitney U with midranks. Exact null distribution when either
// sample has <= 10 observations (falling back to the normal
// approximation, with a warning, when ties or the pmf size cap make the
// exact route invalid); otherwise the normal approximation.
TestOutcome mann_whitney(std::span<const double> a, std::span<const double> b, double alpha);

// Wilcoxon signed rank on paired series; zero differences are
// discarded. Exact null distribution for n_effective <= 30 (same
// fallback rule as mann_whitney for tied absolute differences);
// otherwise the normal approximation.
TestOutcome wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                 double alpha);

// Paired-methods equality test on the rater-averaged differences:
// one-sample t with n-1 df after a KS normality gate; a non-normal
// series falls back to the signed-rank test (flagged in warnings).
TestOutcome intermethod_t_test(std::span<const double> dab, double alpha,
                               bool lilliefors = false);

/// Midranks of `values` (average rank across tied runs), 1-based.
std::vector<double> midranks(std::span<const double> values);

}  // namespace consistat
