// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "consistat/config.hpp"
#include "consistat/dataset.hpp"
#include "consistat/hypothesis_tests.hpp"

namespace consistat {

/// Per-project consistency level of a pair of measurements:
/// |m1 - m2| / ((m1 + m2) / 2). Lies in [0, 2); 0 iff the measurements
/// agree exactly; invariant under scaling both inputs. Throws
/// NonPositiveInputError unless both inputs are > 0.
double ca2(double m1, double m2);

/// One method's consistency-level sample, project-aligned.
struct ConsistencySample {
  std::string method_id;
  std::vector<std::string> projects;
  std::vector<double> values;
  SampleSummary summary;
  std::optional<bool> normal;  // unset until the KS gate ran
};

ConsistencySample consistency_sample(const MeasurementDataset& ds, const std::string& method);

enum class VerdictKind { MoreConsistent, NoDifference, Inconclusive };

std::string to_string(VerdictKind kind);

/// Decision-tree branches: a/b means (normal, independent) means and
/// variances, c/d the related-sample counterparts, e/f Mann-Whitney
/// small/large, g/h Wilcoxon small/large.
enum class Branch { a, b, c, d, e, f, g, h };

std::string to_string(Branch branch);

struct KsGate {
  std::string method_id;
  TestOutcome outcome;
};

struct VerdictGates {
  std::vector<KsGate> ks;
  std::optional<CorrelationOutcome> correlation;
  bool related = false;  // outcome of the independence gate
};

struct LabeledOutcome {
  std::string label;
  TestOutcome outcome;
};

/// End-to-end result of one pairwise inter-rater comparison, with the
/// full audit trail: every gate and test that executed appears exactly
/// once in `evidence`, in execution order.
struct ConsistencyVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<std::string> method;  // set for MoreConsistent
  std::optional<Branch> branch_taken;
  VerdictGates gates;
  std::vector<LabeledOutcome> evidence;
  std::vector<std::string> diagnostics;
  std::vector<std::string> warnings;
};

/// Runs the full inter-rater decision tree for methods A and B:
/// rater-influence gates, KS normality gates, the independence gate,
/// then the means/variances cascade (parametric branches) or the rank
/// test (non-parametric branches). A decisive rejection names the
/// method with the lower consistency-level mean (lower variance when
/// the variance test decided); full acceptance yields NoDifference;
/// degeneracies yield Inconclusive with diagnostics.
ConsistencyVerdict compare_methods_interrater(const MeasurementDataset& ds,
                                              const std::string& method_a,
                                              const std::string& method_b,
                                              const AnalysisConfig& config);

}  // namespace consistat
