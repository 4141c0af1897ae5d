// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "consistat/dataset.hpp"
#include "consistat/hypothesis_tests.hpp"

namespace consistat {

struct UniformSizes {
  double low = 100.0;
  double high = 1000.0;
};

struct LogNormalSizes {
  double log_mean = 5.5;
  double log_sd = 0.5;
};

using SizeDistribution = std::variant<UniformSizes, LogNormalSizes>;

/// One simulated method: measurement = true size + N(tau_j, sigma^2)
/// noise for rater j.
struct MethodModel {
  std::string method_id = "A";
  double tau1 = 0.0;
  double tau2 = 0.0;
  double sigma = 27.5;
};

/// Generative model for synthetic studies: per-project true sizes drawn
/// from `sizes`, then per method and rater an additive normal error.
struct SimulationSpec {
  int n_projects = 30;
  SizeDistribution sizes = UniformSizes{};
  std::vector<MethodModel> methods = {MethodModel{}};
  std::uint64_t seed = 0;

  void validate() const;
};

/// Two-method spec under the full null (equal rater influences, equal
/// noise): the workhorse for pipeline-level calibration.
SimulationSpec default_null_spec(int n_projects = 30, std::uint64_t seed = 0);

struct SimulatedDataset {
  MeasurementDataset dataset;
  std::uint64_t resamples = 0;  // non-positive draws redrawn
};

/// Deterministic given spec.seed. Non-positive measurement draws are
/// rejected and resampled (so the noise stays exactly normal
/// conditional on acceptance); throws ImpossiblePositivityError when a
/// cell needs more than 10000 attempts.
SimulatedDataset generate_dataset(const SimulationSpec& spec);

/// Empirical rejection rate of one test under its null hypothesis.
struct CalibrationResult {
  TestId test_id = TestId::RaterInfluence;
  std::uint64_t replications = 0;
  double rejection_rate = 0.0;
  double alpha = 0.05;
  double standard_error = 0.0;
  std::uint64_t seed = 0;
};

/// Monte Carlo controls. n1/n2 of 0 pick per-test defaults; `rho` is
/// the pair correlation for related-sample nulls; `measurement`
/// replaces the default measurement model for the model-based nulls
/// (RaterInfluence, InterMethodT). Results are bit-identical for any
/// `threads` value because replication r always uses substream r.
struct CalibrationSpec {
  std::uint64_t replications = 5000;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  int n1 = 0;
  int n2 = 0;
  double rho = 0.5;
  unsigned threads = 1;
  std::optional<SimulationSpec> measurement;
};

/// Type-I error calibration: runs `test_id` on data generated under its
/// null and reports the rejection rate with its binomial standard
/// error.
CalibrationResult calibrate_type1(TestId test_id, const CalibrationSpec& spec);

struct PowerPoint {
  double effect = 0.0;
  double rejection_rate = 0.0;
  double standard_error = 0.0;
};

/// Rejection rate along a grid of standardized effects (location shift
/// in sigma units for mean/rank tests, multiplicative sd factor
/// 1 + effect for variance tests, target correlation for the
/// association test). Effect 0 reproduces calibrate_type1.
std::vector<PowerPoint> power_curve(TestId test_id, std::span<const double> effects,
                                    const CalibrationSpec& spec);

}  // namespace consistat
