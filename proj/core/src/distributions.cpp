// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#include "consistat/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "consistat/errors.hpp"
#include "consistat/special_functions.hpp"

namespace consistat {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kSqrt2Pi = 2.5066282746310005024;

void require_prob_open(double p) {
  if (!(p > 0.0) || !(p < 1.0)) throw DomainError("quantile requires 0 < p < 1");
}

void require_df(int df, const char* what) {
  if (df < 1) throw DomainError(std::string(what) + " requires df >= 1");
}

// Rational initial guess for the inverse normal CDF (Acklam), refined
// below with one Halley step to full double precision.
double inverse_normal_guess(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// Safeguarded Newton inversion of a monotone CDF. `lo`/`hi` bracket the
// root (cdf(lo) <= p <= cdf(hi)); x0 is the initial guess.
double invert_cdf(const std::function<double(double)>& cdf, const std::function<double(double)>& pdf,
                  double p, double lo, double hi, double x0) {
  double x = std::clamp(x0, lo, hi);
  for (int i = 0; i < 200; ++i) {
    const double f = cdf(x) - p;
    if (f > 0.0) {
      hi = x;
    } else if (f < 0.0) {
      lo = x;
    } else {
      return x;
    }
    double step_to = x;
    const double dens = pdf(x);
    if (dens > 0.0 && std::isfinite(dens)) {
      step_to = x - f / dens;
    }
    if (!(step_to > lo) || !(step_to < hi)) {
      step_to = 0.5 * (lo + hi);  // Newton left the bracket
    }
    if (std::fabs(step_to - x) <= 1e-15 * (std::fabs(x) + 1e-300)) {
      return step_to;
    }
    x = step_to;
    if (hi - lo <= 1e-15 * (std::fabs(lo) + std::fabs(hi)) + 1e-300) break;
  }
  return x;
}

// Expands [lo, hi] geometrically until cdf brackets p.
void expand_bracket(const std::function<double(double)>& cdf, double p, double& lo, double& hi,
                    bool lo_fixed) {
  for (int i = 0; i < 200 && cdf(hi) < p; ++i) {
    const double width = hi - lo;
    hi += std::max(width, 1.0) * 2.0;
  }
  if (!lo_fixed) {
    for (int i = 0; i < 200 && cdf(lo) > p; ++i) {
      const double width = hi - lo;
      lo -= std::max(width, 1.0) * 2.0;
    }
  }
}

double student_t_pdf(double x, int df) {
  const double v = df;
  const double ln =
      sf::lgamma(0.5 * (v + 1.0)) - sf::lgamma(0.5 * v) - 0.5 * std::log(v * M_PI) -
      0.5 * (v + 1.0) * std::log1p(x * x / v);
  return std::exp(ln);
}

double f_pdf(double x, int d1, int d2) {
  if (x <= 0.0) return 0.0;
  const double a = 0.5 * d1;
  const double b = 0.5 * d2;
  const double ln = sf::lgamma(a + b) - sf::lgamma(a) - sf::lgamma(b) + a * std::log(d1) +
                    b * std::log(d2) + (a - 1.0) * std::log(x) -
                    (a + b) * std::log(d2 + d1 * x);
  return std::exp(ln);
}

double chi_square_pdf(double x, int df) {
  if (x <= 0.0) return 0.0;
  const double a = 0.5 * df;
  const double ln = -sf::lgamma(a) - a * std::log(2.0) + (a - 1.0) * std::log(x) - 0.5 * x;
  return std::exp(ln);
}

}  // namespace

TailDecision make_decision(double statistic, double critical_value, double p_value, double alpha) {
  TailDecision d;
  d.statistic = statistic;
  d.critical_value = critical_value;
  d.p_value = std::clamp(p_value, 0.0, 1.0);
  d.alpha = alpha;
  d.reject = d.p_value < alpha;
  return d;
}

double std_normal_cdf(double x) { return 0.5 * sf::erfc(-x / kSqrt2); }

double std_normal_quantile(double p) {
  require_prob_open(p);
  double x = inverse_normal_guess(p);
  // One Halley step against the erfc-based CDF.
  const double e = std_normal_cdf(x) - p;
  const double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

double student_t_cdf(double x, int df) {
  require_df(df, "student_t_cdf");
  if (std::isnan(x)) throw DomainError("student_t_cdf: x is NaN");
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  if (x == 0.0) return 0.5;
  const double v = df;
  const double tail = 0.5 * sf::reg_inc_beta(v / (v + x * x), 0.5 * v, 0.5);
  return x > 0.0 ? 1.0 - tail : tail;
}

double student_t_quantile(double p, int df) {
  require_df(df, "student_t_quantile");
  require_prob_open(p);
  if (p == 0.5) return 0.0;
  double lo = -2.0;
  double hi = 2.0;
  auto cdf = [df](double x) { return student_t_cdf(x, df); };
  expand_bracket(cdf, p, lo, hi, false);
  return invert_cdf(cdf, [df](double x) { return student_t_pdf(x, df); }, p, lo, hi,
                    inverse_normal_guess(p));
}

double f_cdf(double x, int d1, int d2) {
  require_df(d1, "f_cdf");
  require_df(d2, "f_cdf");
  if (!(x >= 0.0)) throw DomainError("f_cdf requires x >= 0");
  if (std::isinf(x)) return 1.0;
  if (x == 0.0) return 0.0;
  return sf::reg_inc_beta(d1 * x / (d1 * x + d2), 0.5 * d1, 0.5 * d2);
}

double f_quantile(double p, int d1, int d2) {
  require_df(d1, "f_quantile");
  require_df(d2, "f_quantile");
  require_prob_open(p);
  double lo = 0.0;
  double hi = 4.0;
  auto cdf = [d1, d2](double x) { return f_cdf(x, d1, d2); };
  expand_bracket(cdf, p, lo, hi, true);
  return invert_cdf(cdf, [d1, d2](double x) { return f_pdf(x, d1, d2); }, p, lo, hi, 1.0);
}

double chi_square_cdf(double x, int df) {
  require_df(df, "chi_square_cdf");
  if (!(x >= 0.0)) throw DomainError("chi_square_cdf requires x >= 0");
  if (std::isinf(x)) return 1.0;
  return sf::reg_inc_gamma_p(0.5 * df, 0.5 * x);
}

double chi_square_quantile(double p, int df) {
  require_df(df, "chi_square_quantile");
  require_prob_open(p);
  // Wilson-Hilferty starting point.
  const double z = inverse_normal_guess(p);
  const double v = df;
  const double h = 2.0 / (9.0 * v);
  double guess = v * std::pow(1.0 - h + z * std::sqrt(h), 3.0);
  if (!(guess > 0.0)) guess = 0.5;
  double lo = 0.0;
  double hi = std::max(2.0 * guess, 4.0);
  auto cdf = [df](double x) { return chi_square_cdf(x, df); };
  expand_bracket(cdf, p, lo, hi, true);
  return invert_cdf(cdf, [df](double x) { return chi_square_pdf(x, df); }, p, lo, hi, guess);
}

}  // namespace consistat
