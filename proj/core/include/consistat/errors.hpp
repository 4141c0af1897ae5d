// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace consistat {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An argument is outside the mathematical domain of a function
/// (e.g. a quantile probability outside (0,1)).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A requested exact rank distribution exceeds the configured size cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// Input file could not be parsed. `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line) : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class MalformedLineError : public ParseError {
 public:
  using ParseError::ParseError;
};

class NonPositiveValueError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// The same (project, method, rater) cell appears more than once.
class DuplicateCellError : public ParseError {
 public:
  DuplicateCellError(const std::string& what, std::size_t line, std::string project,
                     std::string method, std::string rater)
      : ParseError(what, line),
        project_(std::move(project)),
        method_(std::move(method)),
        rater_(std::move(rater)) {}
  const std::string& project() const { return project_; }
  const std::string& method() const { return method_; }
  const std::string& rater() const { return rater_; }

 private:
  std::string project_;
  std::string method_;
  std::string rater_;
};

/// A method does not have both raters' measurements for every project.
class IncompleteDesignError : public Error {
 public:
  IncompleteDesignError(const std::string& what, std::vector<std::string> projects)
      : Error(what), projects_(std::move(projects)) {}
  const std::vector<std::string>& projects() const { return projects_; }

 private:
  std::vector<std::string> projects_;
};

/// Pair-based operations require exactly two raters per method.
class TooManyRatersError : public Error {
 public:
  TooManyRatersError(const std::string& what, std::size_t count) : Error(what), count_(count) {}
  std::size_t count() const { return count_; }

 private:
  std::size_t count_;
};

class UnknownMethodError : public Error {
 public:
  using Error::Error;
};

/// Two methods were measured on different project sets where identical
/// sets are required (paired analyses).
class ProjectSetMismatchError : public Error {
 public:
  using Error::Error;
};

class NonPositiveInputError : public Error {
 public:
  using Error::Error;
};

/// A statistic's input series carries no variation where some is required.
class ZeroVarianceError : public Error {
 public:
  using Error::Error;
};

/// Positivity rejection-resampling exceeded its retry bound, i.e. the
/// configured noise scale is incompatible with the size distribution.
class ImpossiblePositivityError : public Error {
 public:
  using Error::Error;
};

}  // namespace consistat
