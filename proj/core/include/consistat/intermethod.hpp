// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "consistat/config.hpp"
#include "consistat/dataset.hpp"
#include "consistat/hypothesis_tests.hpp"

namespace consistat {

/// Per-project differences between two methods with the rater
/// influence averaged out: d1 = first raters' difference, d2 = second
/// raters' difference, dab = (d1 + d2) / 2.
struct InterMethodSeries {
  std::string method_a;
  std::string method_b;
  std::vector<std::string> projects;
  std::vector<double> d1ab;
  std::vector<double> d2ab;
  std::vector<double> dab;
  SampleSummary summary;  // of dab
};

/// Requires both methods measured by two raters on the identical
/// project set; throws ProjectSetMismatchError otherwise.
InterMethodSeries dab_series(const MeasurementDataset& ds, const std::string& method_a,
                             const std::string& method_b);

/// H0: dab = 0, i.e. the two methods measure alike. KS-gated one-sample
/// t (signed-rank fallback for non-normal dab).
TestOutcome intermethod_equality_test(const InterMethodSeries& series, double alpha,
                                      bool lilliefors = false);

/// Least-squares line mapping method A's rater-averaged values to
/// method B's scale.
struct CalibrationFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r = 0.0;
  double r_squared = 0.0;
  double residual_sd = 0.0;
};

/// Outcome of a calibration attempt: either a fit or the reason none
/// was produced (correlation below config.strong_r, or a degenerate
/// predictor).
struct CalibrationResultOrReason {
  std::optional<CalibrationFit> fit;
  std::string reason;  // empty when fit is present
};

/// Fits B ~ slope * A + intercept on per-project rater-averaged values,
/// only when |Pearson r| >= config.strong_r. Meant to be called after
/// intermethod_equality_test rejected (a calibration is pointless
/// otherwise).
CalibrationResultOrReason fit_calibration_regression(const MeasurementDataset& ds,
                                                     const std::string& method_a,
                                                     const std::string& method_b,
                                                     const AnalysisConfig& config);

}  // namespace consistat
