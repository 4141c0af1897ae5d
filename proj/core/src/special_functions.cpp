// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#include "consistat/special_functions.hpp"

#include <cmath>
#include <limits>

#include "consistat/errors.hpp"

namespace consistat::sf {

namespace {

const double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIter = 20000;
const double kFpMin = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
constexpr double kInvSqrtPi = 0.5641895835477562869;  // 1/sqrt(pi)

// Maclaurin series for erf, |x| <= 2.
double erf_series(double x) {
  double sum = x;
  double term = x;
  const double x2 = x * x;
  for (int n = 1; n < kMaxIter; ++n) {
    term *= -x2 / n;
    const double add = term / (2 * n + 1);
    sum += add;
    if (std::fabs(add) < kEps * std::fabs(sum)) break;
  }
  return 2.0 * kInvSqrtPi * sum;
}

// Continued fraction for erfc, x > 2 (modified Lentz):
// sqrt(pi) exp(x^2) erfc(x) = 1/K with
// K = x + (1/2)/(x + 1/(x + (3/2)/(x + 2/(x + ...))))
double erfc_cf(double x) {
  double f = x;
  double c = x;
  double d = 0.0;
  for (int n = 1; n < kMaxIter; ++n) {
    const double a = 0.5 * n;
    d = x + a * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = x + a / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = c * d;
    f *= del;
    if (std::fabs(del - 1.0) <= kEps) break;
  }
  return std::exp(-x * x) * kInvSqrtPi / f;
}

// Series for the regularized lower incomplete gamma, x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < kMaxIter; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - lgamma(a));
}

// Continued fraction for the regularized upper incomplete gamma,
// x >= a + 1 (modified Lentz).
double gamma_q_cf(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kFpMin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = b + an / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) break;
  }
  return std::exp(-x + a * std::log(x) - lgamma(a)) * h;
}

// Continued fraction for the incomplete beta (modified Lentz).
double betacf(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m < kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) break;
  }
  return h;
}

}  // namespace

double erf(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) return -erf(-x);
  if (x <= 2.0) return erf_series(x);
  return 1.0 - erfc_cf(x);
}

double erfc(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) return 2.0 - erfc(-x);
  if (x <= 2.0) return 1.0 - erf_series(x);
  if (x > 27.3) return 0.0;  // underflows double
  return erfc_cf(x);
}

double lgamma(double x) {
  if (!(x > 0.0)) throw DomainError("lgamma requires x > 0");
  return std::lgamma(x);
}

double reg_inc_gamma_p(double a, double x) {
  if (!(a > 0.0) || x < 0.0 || std::isnan(x)) {
    throw DomainError("reg_inc_gamma_p requires a > 0, x >= 0");
  }
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double reg_inc_gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0 || std::isnan(x)) {
    throw DomainError("reg_inc_gamma_q requires a > 0, x >= 0");
  }
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double reg_inc_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || x < 0.0 || x > 1.0 || std::isnan(x)) {
    throw DomainError("reg_inc_beta requires a, b > 0 and x in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double ln_bt =
      lgamma(a + b) - lgamma(a) - lgamma(b) + a * std::log(x) + b * std::log1p(-x);
  const double bt = std::exp(ln_bt);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return bt * betacf(a, b, x) / a;
  }
  return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

}  // namespace consistat::sf
