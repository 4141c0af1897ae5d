// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#include "consistat/summary.hpp"

#include "consistat/errors.hpp"

namespace consistat {

SampleSummary summarize(std::span<const double> values) {
  if (values.empty()) throw DomainError("summarize requires a non-empty sample");
  SampleSummary s;
  s.n = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.n);
  double ss = 0.0;
  for (double v : values) {
    const double d = v - s.mean;
    ss += d * d;
  }
  s.var_n = ss / static_cast<double>(s.n);
  s.var_unbiased = s.n >= 2 ? ss / static_cast<double>(s.n - 1) : 0.0;
  return s;
}

double covariance_n(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) {
    throw DomainError("covariance_n requires equal-length non-empty series");
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += (x[i] - mx) * (y[i] - my);
  }
  return acc / static_cast<double>(x.size());
}

}  // namespace consistat
