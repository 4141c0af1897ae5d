// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>

namespace consistat {

/// Moments of one sample, carrying both variance conventions so the
/// two never get mixed silently: var_n divides by n (the convention the
/// mean-equality statistics use), var_unbiased divides by n-1 (the
/// convention the covariance-matrix statistics use).
struct SampleSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double var_n = 0.0;
  double var_unbiased = 0.0;
};

SampleSummary summarize(std::span<const double> values);

/// Pearson covariance of two equal-length series, divisor n.
double covariance_n(std::span<const double> x, std::span<const double> y);

}  // namespace consistat
