// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace consistat {

/// One two-sided accept/reject decision.
///
/// Invariant: reject <=> p_value < alpha. The critical value is carried
/// for the audit trail; for continuous statistics the comparison against
/// it agrees with the p-value rule except on measure-zero boundaries.
struct TailDecision {
  double statistic = 0.0;
  double critical_value = 0.0;
  double p_value = 1.0;
  double alpha = 0.05;
  bool reject = false;
};

/// Builds a TailDecision enforcing the reject <=> p < alpha invariant.
TailDecision make_decision(double statistic, double critical_value, double p_value, double alpha);

double std_normal_cdf(double x);
/// Inverse standard normal CDF; requires 0 < p < 1.
double std_normal_quantile(double p);

/// Student t CDF with df degrees of freedom (df >= 1).
double student_t_cdf(double x, int df);
double student_t_quantile(double p, int df);

/// Snedecor F CDF; requires x >= 0 and d1, d2 >= 1.
double f_cdf(double x, int d1, int d2);
double f_quantile(double p, int d1, int d2);

/// Chi-square CDF; requires x >= 0 and df >= 1.
double chi_square_cdf(double x, int df);
double chi_square_quantile(double p, int df);

}  // namespace consistat
