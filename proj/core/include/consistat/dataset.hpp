// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace consistat {

/// One measurement of one project by one rater with one method.
/// value is strictly positive (software size in whatever unit the
/// method produces, e.g. function points).
struct MeasurementRecord {
  std::string project_id;
  std::string method_id;
  std::string rater_id;
  double value = 0.0;

  bool operator==(const MeasurementRecord&) const = default;
};

/// Two project-aligned measurement series for one method: the method's
/// first- and second-appearing rater, over the method's project list.
struct PairedSeries {
  std::vector<std::string> projects;
  std::vector<double> first;
  std::vector<double> second;
};

/// Immutable container for a measurement study. Projects, methods and
/// raters keep first-appearance order; "first rater" in pair-based
/// analyses means first appearance in the source.
class MeasurementDataset {
 public:
  MeasurementDataset() = default;

  /// Appends a record, enforcing value > 0 and cell uniqueness.
  /// `line` feeds error messages (0 when not file-backed).
  void add(MeasurementRecord record, std::size_t line = 0);

  const std::vector<MeasurementRecord>& records() const { return records_; }
  const std::vector<std::string>& projects() const { return projects_; }
  const std::vector<std::string>& methods() const { return methods_; }

  /// Ordered rater list for a method; throws UnknownMethodError.
  const std::vector<std::string>& raters(const std::string& method) const;

  bool has_method(const std::string& method) const;

  /// Projects with at least one record for the method, in dataset
  /// project order.
  std::vector<std::string> projects_of(const std::string& method) const;

  /// Value of one cell; throws Error when the cell is absent.
  double value(const std::string& project, const std::string& method,
               const std::string& rater) const;

  bool has_value(const std::string& project, const std::string& method,
                 const std::string& rater) const;

 private:
  std::vector<MeasurementRecord> records_;
  std::vector<std::string> projects_;
  std::vector<std::string> methods_;
  std::map<std::string, std::vector<std::string>> raters_per_method_;
  std::map<std::string, double> cells_;  // key: project \x1f method \x1f rater
};

/// Parses `project,method,rater,value` CSV (exact header, '.' decimal
/// point, UTF-8). Throws MalformedLineError / NonPositiveValueError /
/// DuplicateCellError with 1-based line numbers.
MeasurementDataset parse_csv(std::istream& in);
MeasurementDataset parse_csv_string(const std::string& text);
MeasurementDataset parse_csv_file(const std::string& path);

/// Serializes back to the same CSV dialect, records in insertion order.
std::string to_csv(const MeasurementDataset& ds);

/// Paired series of a two-rater method over its complete project set.
/// Throws TooManyRatersError for r > 2 and IncompleteDesignError
/// listing the offending projects.
PairedSeries extract_pair(const MeasurementDataset& ds, const std::string& method);

}  // namespace consistat
