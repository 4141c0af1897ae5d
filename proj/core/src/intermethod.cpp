// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#include "consistat/intermethod.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "consistat/errors.hpp"

namespace consistat {

InterMethodSeries dab_series(const MeasurementDataset& ds, const std::string& method_a,
                             const std::string& method_b) {
  const auto pair_a = extract_pair(ds, method_a);
  const auto pair_b = extract_pair(ds, method_b);
  if (pair_a.projects != pair_b.projects) {
    throw ProjectSetMismatchError("methods " + method_a + " and " + method_b +
                                  " were not measured on the identical project set");
  }
  InterMethodSeries series;
  series.method_a = method_a;
  series.method_b = method_b;
  series.projects = pair_a.projects;
  const std::size_t n = pair_a.projects.size();
  series.d1ab.resize(n);
  series.d2ab.resize(n);
  series.dab.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    series.d1ab[i] = pair_a.first[i] - pair_b.first[i];
    series.d2ab[i] = pair_a.second[i] - pair_b.second[i];
    series.dab[i] = (series.d1ab[i] + series.d2ab[i]) / 2.0;
  }
  series.summary = summarize(series.dab);
  return series;
}

TestOutcome intermethod_equality_test(const InterMethodSeries& series, double alpha,
                                      bool lilliefors) {
  return intermethod_t_test(series.dab, alpha, lilliefors);
}

CalibrationResultOrReason fit_calibration_regression(const MeasurementDataset& ds,
                                                     const std::string& method_a,
                                                     const std::string& method_b,
                                                     const AnalysisConfig& config) {
  const auto pair_a = extract_pair(ds, method_a);
  const auto pair_b = extract_pair(ds, method_b);
  CalibrationResultOrReason result;
  if (pair_a.projects != pair_b.projects) {
    throw ProjectSetMismatchError("calibration requires an identical project set for " +
                                  method_a + " and " + method_b);
  }
  const std::size_t n = pair_a.projects.size();
  if (n < 3) {
    result.reason = "fewer than 3 projects; no regression fitted";
    return result;
  }
  // Rater-averaged method-level values.
  std::vector<double> x(n);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = 0.5 * (pair_a.first[i] + pair_a.second[i]);
    y[i] = 0.5 * (pair_b.first[i] + pair_b.second[i]);
  }
  const auto sx = summarize(x);
  const auto sy = summarize(y);
  if (sx.var_n == 0.0) {
    result.reason = "zero variance in the predictor method; no regression fitted";
    return result;
  }
  if (sy.var_n == 0.0) {
    result.reason = "zero variance in the response method; no regression fitted";
    return result;
  }
  const double cov = covariance_n(x, y);
  const double r = std::clamp(cov / std::sqrt(sx.var_n * sy.var_n), -1.0, 1.0);
  if (std::fabs(r) < config.strong_r) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "correlation too weak for calibration (|r| = %.4g < %.4g)",
                  std::fabs(r), config.strong_r);
    result.reason = buf;
    return result;
  }
  CalibrationFit fit;
  fit.slope = cov / sx.var_n;
  fit.intercept = sy.mean - fit.slope * sx.mean;
  fit.r = r;
  fit.r_squared = r * r;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double resid = y[i] - (fit.slope * x[i] + fit.intercept);
    ss_res += resid * resid;
  }
  fit.residual_sd = n > 2 ? std::sqrt(ss_res / static_cast<double>(n - 2)) : 0.0;
  result.fit = fit;
  return result;
}

}  // namespace consistat
