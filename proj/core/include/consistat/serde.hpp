// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "consistat/consistency.hpp"
#include "consistat/dataset.hpp"
#include "consistat/hypothesis_tests.hpp"
#include "consistat/intermethod.hpp"
#include "consistat/report.hpp"
#include "consistat/simulate.hpp"

namespace consistat {

/// Insertion-ordered JSON keeps report field order stable across runs.
using json = nlohmann::ordered_json;

// Doubles are emitted as numbers except the non-finite values, which
// JSON cannot carry; those round-trip through the strings "inf",
// "-inf", "nan".
json double_to_json(double v);
double double_from_json(const json& j);

// dataset
json to_json(const MeasurementDataset& ds);  // array of record objects

// statistics
json to_json(const TailDecision& d);
TailDecision tail_decision_from_json(const json& j);
json to_json(const SampleSummary& s);
SampleSummary sample_summary_from_json(const json& j);
json to_json(const CorrelationOutcome& c);
CorrelationOutcome correlation_outcome_from_json(const json& j);
json to_json(const TestOutcome& o);
TestOutcome test_outcome_from_json(const json& j);

// verdicts and reports
json to_json(const ConsistencyVerdict& v);
ConsistencyVerdict verdict_from_json(const json& j);
json to_json(const CalibrationFit& f);
CalibrationFit calibration_fit_from_json(const json& j);
json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const json& j);

// simulation
json to_json(const CalibrationResult& r);
CalibrationResult calibration_result_from_json(const json& j);
json to_json(const SimulationSpec& s);
SimulationSpec simulation_spec_from_json(const json& j);

}  // namespace consistat
