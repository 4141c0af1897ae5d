// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "consistat/config.hpp"
#include "consistat/consistency.hpp"
#include "consistat/dataset.hpp"
#include "consistat/intermethod.hpp"

namespace consistat {

/// Bump when the JSON report layout changes incompatibly.
inline constexpr int kReportSchemaVersion = 1;

struct DatasetDigest {
  std::size_t n_records = 0;
  std::vector<std::string> projects;
  std::vector<std::string> methods;
  std::map<std::string, std::vector<std::string>> raters;
};

struct RaterInfluenceEntry {
  std::string method_id;
  std::optional<TestOutcome> outcome;  // absent when the method is not two-rater
  std::string skipped_reason;          // set when outcome is absent
};

struct InterraterEntry {
  std::string method_a;
  std::string method_b;
  ConsistencyVerdict verdict;
};

struct InterMethodEntry {
  std::string method_a;
  std::string method_b;
  std::optional<TestOutcome> equality;
  std::optional<CalibrationFit> calibration;
  std::string calibration_note;  // why no fit was produced
  std::string skipped_reason;    // set when the pair could not be analyzed
};

/// Complete audit of one `analyze` run: inter-rater reliability per
/// method pair and inter-method reliability per method pair, plus the
/// per-method rater gates.
struct AnalysisReport {
  int schema_version = kReportSchemaVersion;
  double alpha = 0.05;
  DatasetDigest dataset;
  std::vector<RaterInfluenceEntry> rater_influence;
  std::vector<InterraterEntry> interrater;
  std::vector<InterMethodEntry> intermethod;
  std::vector<std::string> warnings;
};

/// Runs the full pipeline over every method pair.
AnalysisReport run_analysis(const MeasurementDataset& ds, const AnalysisConfig& config);

/// Human-readable rendering; includes every p-value the JSON carries.
std::string render_text(const AnalysisReport& report);

}  // namespace consistat
