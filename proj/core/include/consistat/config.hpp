// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "consistat/hypothesis_tests.hpp"

namespace consistat {

enum class OutputFormat { Text, Json };

/// Knobs of the decision pipeline. alpha applies globally to every gate
/// and test so a report stays interpretable as one procedure.
struct AnalysisConfig {
  double alpha = 0.05;
  /// Overrides the automatic Pearson/Spearman choice for the
  /// independence gate when set.
  std::optional<CorrelationKind> correlation_kind;
  /// |r| threshold above which an inter-method calibration line is fit.
  double strong_r = 0.8;
  /// Use parameter-estimation-corrected critical values in the KS gate.
  bool lilliefors = false;
  OutputFormat format = OutputFormat::Text;

  /// Throws DomainError unless 0 < alpha < 1 and 0 < strong_r <= 1.
  void validate() const;
};

}  // namespace consistat
