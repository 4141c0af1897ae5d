// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#include "consistat/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "consistat/errors.hpp"

namespace consistat {

namespace {

constexpr char kCellSep = '\x1f';
constexpr const char* kHeader = "project,method,rater,value";

std::string cell_key(const std::string& project, const std::string& method,
                     const std::string& rater) {
  std::string key;
  key.reserve(project.size() + method.size() + rater.size() + 2);
  key += project;
  key += kCellSep;
  key += method;
  key += kCellSep;
  key += rater;
  return key;
}

void push_unique(std::vector<std::string>& list, const std::string& value) {
  if (std::find(list.begin(), list.end(), value) == list.end()) {
    list.push_back(value);
  }
}

// Renders a double with the fewest digits that round-trip.
std::string format_value(double v) {
  for (int prec = 1; prec <= 16; ++prec) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    double back = 0.0;
    std::from_chars(buf, buf + std::strlen(buf), back);
    if (back == v) return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void MeasurementDataset::add(MeasurementRecord record, std::size_t line) {
  if (record.project_id.empty() || record.method_id.empty() || record.rater_id.empty()) {
    throw MalformedLineError("empty identifier", line);
  }
  if (!std::isfinite(record.value) || record.value <= 0.0) {
    throw NonPositiveValueError("measurement value must be a positive finite number", line);
  }
  const std::string key = cell_key(record.project_id, record.method_id, record.rater_id);
  if (cells_.contains(key)) {
    throw DuplicateCellError("duplicate measurement cell", line, record.project_id,
                             record.method_id, record.rater_id);
  }
  push_unique(projects_, record.project_id);
  push_unique(methods_, record.method_id);
  push_unique(raters_per_method_[record.method_id], record.rater_id);
  cells_[key] = record.value;
  records_.push_back(std::move(record));
}

const std::vector<std::string>& MeasurementDataset::raters(const std::string& method) const {
  const auto it = raters_per_method_.find(method);
  if (it == raters_per_method_.end()) {
    throw UnknownMethodError("unknown method: " + method);
  }
  return it->second;
}

bool MeasurementDataset::has_method(const std::string& method) const {
  return raters_per_method_.contains(method);
}

std::vector<std::string> MeasurementDataset::projects_of(const std::string& method) const {
  const auto& rs = raters(method);
  std::vector<std::string> result;
  for (const auto& p : projects_) {
    for (const auto& r : rs) {
      if (cells_.contains(cell_key(p, method, r))) {
        result.push_back(p);
        break;
      }
    }
  }
  return result;
}

double MeasurementDataset::value(const std::string& project, const std::string& method,
                                 const std::string& rater) const {
  const auto it = cells_.find(cell_key(project, method, rater));
  if (it == cells_.end()) {
    throw Error("missing measurement: project=" + project + " method=" + method +
                " rater=" + rater);
  }
  return it->second;
}

bool MeasurementDataset::has_value(const std::string& project, const std::string& method,
                                   const std::string& rater) const {
  return cells_.contains(cell_key(project, method, rater));
}

MeasurementDataset parse_csv(std::istream& in) {
  MeasurementDataset ds;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header_seen) {
      if (line != kHeader) {
        throw MalformedLineError("expected header '" + std::string(kHeader) + "'", line_no);
      }
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (fields.size() != 4) {
      throw MalformedLineError("expected 4 comma-separated fields, found " +
                                   std::to_string(fields.size()),
                               line_no);
    }
    const std::string& value_text = fields[3];
    double value = 0.0;
    const char* begin = value_text.data();
    const char* end = begin + value_text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || value_text.empty() || !std::isfinite(value)) {
      throw MalformedLineError("malformed numeric value '" + value_text + "'", line_no);
    }
    if (value <= 0.0) {
      throw NonPositiveValueError("non-positive value " + value_text, line_no);
    }
    ds.add(MeasurementRecord{fields[0], fields[1], fields[2], value}, line_no);
  }
  if (!header_seen) {
    throw MalformedLineError("empty input: missing header", 1);
  }
  return ds;
}

MeasurementDataset parse_csv_string(const std::string& text) {
  std::istringstream in(text);
  return parse_csv(in);
}

MeasurementDataset parse_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  return parse_csv(in);
}

std::string to_csv(const MeasurementDataset& ds) {
  std::string out = kHeader;
  out += '\n';
  for (const auto& r : ds.records()) {
    out += r.project_id;
    out += ',';
    out += r.method_id;
    out += ',';
    out += r.rater_id;
    out += ',';
    out += format_value(r.value);
    out += '\n';
  }
  return out;
}

PairedSeries extract_pair(const MeasurementDataset& ds, const std::string& method) {
  const auto& raters = ds.raters(method);
  if (raters.size() > 2) {
    throw TooManyRatersError("method " + method + " has " + std::to_string(raters.size()) +
                                 " raters; pair-based analysis requires exactly 2",
                             raters.size());
  }
  const auto projects = ds.projects_of(method);
  std::vector<std::string> incomplete;
  if (raters.size() < 2) {
    throw IncompleteDesignError("method " + method + " has fewer than 2 raters", projects);
  }
  PairedSeries pair;
  for (const auto& p : projects) {
    if (!ds.has_value(p, method, raters[0]) || !ds.has_value(p, method, raters[1])) {
      incomplete.push_back(p);
    }
  }
  if (!incomplete.empty()) {
    std::string msg = "incomplete design for method " + method + ": missing rater values for";
    for (const auto& p : incomplete) {
      msg += ' ';
      msg += p;
    }
    throw IncompleteDesignError(msg, incomplete);
  }
  pair.projects = projects;
  pair.first.reserve(projects.size());
  pair.second.reserve(projects.size());
  for (const auto& p : projects) {
    pair.first.push_back(ds.value(p, method, raters[0]));
    pair.second.push_back(ds.value(p, method, raters[1]));
  }
  return pair;
}

}  // namespace consistat
