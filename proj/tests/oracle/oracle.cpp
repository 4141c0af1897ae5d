// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

namespace {

constexpr long double kEps = 1e-19L;
constexpr int kMaxIter = 100000;

long double lgamma_ld(long double x) { return std::lgamma(x); }

long double gamma_p_series_ld(long double a, long double x) {
  long double ap = a;
  long double sum = 1.0L / a;
  long double del = sum;
  for (int i = 0; i < kMaxIter; ++i) {
    ap += 1.0L;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - lgamma_ld(a));
}

long double gamma_q_cf_ld(long double a, long double x) {
  const long double fpmin = 1e-4900L;
  long double b = x + 1.0L - a;
  long double c = 1.0L / fpmin;
  long double d = 1.0L / b;
  long double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const long double an = -static_cast<long double>(i) * (i - a);
    b += 2.0L;
    d = an * d + b;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = b + an / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0L / d;
    const long double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0L) <= kEps) break;
  }
  return std::exp(-x + a * std::log(x) - lgamma_ld(a)) * h;
}

long double betacf_ld(long double a, long double b, long double x) {
  const long double fpmin = 1e-4900L;
  const long double qab = a + b;
  const long double qap = a + 1.0L;
  const long double qam = a - 1.0L;
  long double c = 1.0L;
  long double d = 1.0L - qab * x / qap;
  if (std::fabs(d) < fpmin) d = fpmin;
  d = 1.0L / d;
  long double h = d;
  for (int m = 1; m < kMaxIter; ++m) {
    const long double m2 = 2.0L * m;
    long double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0L + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0L + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0L / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0L + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0L + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0L / d;
    const long double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0L) <= kEps) break;
  }
  return h;
}

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double mean_of(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

double pearson_r(std::span<const double> x, std::span<const double> y) {
  const double mx = mean_of(x);
  const double my = mean_of(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

long double erfc_ld(long double x) { return ::erfcl(x); }

long double reg_inc_gamma_p_ld(long double a, long double x) {
  if (x <= 0.0L) return 0.0L;
  if (x < a + 1.0L) return gamma_p_series_ld(a, x);
  return 1.0L - gamma_q_cf_ld(a, x);
}

long double reg_inc_beta_ld(long double x, long double a, long double b) {
  if (x <= 0.0L) return 0.0L;
  if (x >= 1.0L) return 1.0L;
  const long double ln_bt =
      lgamma_ld(a + b) - lgamma_ld(a) - lgamma_ld(b) + a * std::log(x) + b * std::log1p(-x);
  const long double bt = std::exp(ln_bt);
  if (x < (a + 1.0L) / (a + b + 2.0L)) {
    return bt * betacf_ld(a, b, x) / a;
  }
  return 1.0L - bt * betacf_ld(b, a, 1.0L - x) / b;
}

double normal_cdf(double x) {
  return static_cast<double>(0.5L * erfc_ld(-static_cast<long double>(x) / std::sqrt(2.0L)));
}

double t_cdf(double x, int df) {
  if (x == 0.0) return 0.5;
  const long double v = df;
  const long double xl = x;
  const long double tail = 0.5L * reg_inc_beta_ld(v / (v + xl * xl), 0.5L * v, 0.5L);
  return static_cast<double>(x > 0.0 ? 1.0L - tail : tail);
}

double f_cdf(double x, int d1, int d2) {
  if (x <= 0.0) return 0.0;
  const long double xl = x;
  return static_cast<double>(
      reg_inc_beta_ld(d1 * xl / (d1 * xl + d2), 0.5L * d1, 0.5L * d2));
}

double chi2_cdf(double x, int df) {
  if (x <= 0.0) return 0.0;
  return static_cast<double>(reg_inc_gamma_p_ld(0.5L * df, 0.5L * static_cast<long double>(x)));
}

double invert(const std::function<double(double)>& cdf, double p, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double t1_cdf(double x) { return 0.5 + std::atan(x) / M_PI; }

double t2_cdf(double x) { return 0.5 + x / (2.0 * std::sqrt(2.0 + x * x)); }

double chi2_cdf_2(double x) { return 1.0 - std::exp(-0.5 * x); }

double chi2_cdf_4(double x) { return 1.0 - std::exp(-0.5 * x) * (1.0 + 0.5 * x); }

double f_cdf_d1_2(double x, int d2) {
  return 1.0 - std::pow(d2 / (2.0 * x + d2), 0.5 * d2);
}

std::vector<double> brute_force_u_pmf(int n_a, int n_b) {
  const int n = n_a + n_b;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n_a) * n_b + 1, 0);
  std::uint64_t total = 0;
  combinations(n, n_a, [&](const std::vector<int>& idx) {
    long long rank_sum = 0;
    for (int i : idx) rank_sum += i + 1;
    const long long u = static_cast<long long>(n_a) * n_b +
                        static_cast<long long>(n_a) * (n_a + 1) / 2 - rank_sum;
    ++counts[static_cast<std::size_t>(u)];
    ++total;
  });
  std::vector<double> pmf(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    pmf[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return pmf;
}

std::vector<double> brute_force_t_pmf(int n) {
  if (n > 25) throw std::invalid_argument("brute_force_t_pmf: n too large");
  const int max_t = n * (n + 1) / 2;
  std::vector<std::uint64_t> counts(max_t + 1, 0);
  const std::uint64_t patterns = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    int t = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) t += i + 1;
    }
    ++counts[t];
  }
  std::vector<double> pmf(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    pmf[i] = static_cast<double>(counts[i]) / static_cast<double>(patterns);
  }
  return pmf;
}

std::optional<int> critical_from_pmf(const std::vector<double>& pmf, double alpha) {
  std::optional<int> best;
  double cum = 0.0;
  for (std::size_t v = 0; v < pmf.size(); ++v) {
    cum += pmf[v];
    if (2.0 * cum <= alpha) best = static_cast<int>(v);
    else break;
  }
  return best;
}

double brute_force_ks_d(std::span<const double> sample, double mean, double sd) {
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = normal_cdf((sorted[i] - mean) / sd);
    d = std::max(d, std::fabs((static_cast<double>(i) + 1.0) / n - f));
    d = std::max(d, std::fabs(static_cast<double>(i) / n - f));
  }
  return d;
}

double pooled_t(std::span<const double> a, std::span<const double> b) {
  const double ma = mean_of(a);
  const double mb = mean_of(b);
  double ssa = 0.0, ssb = 0.0;
  for (double v : a) ssa += (v - ma) * (v - ma);
  for (double v : b) ssb += (v - mb) * (v - mb);
  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  const double sp2 = (ssa + ssb) / (n1 + n2 - 2.0);
  return (ma - mb) / std::sqrt(sp2 * (1.0 / n1 + 1.0 / n2));
}

double pitman_morgan_p(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  std::vector<double> sums(n), diffs(n);
  for (std::size_t i = 0; i < n; ++i) {
    sums[i] = x[i] + y[i];
    diffs[i] = x[i] - y[i];
  }
  const double r = pearson_r(sums, diffs);
  const int df = static_cast<int>(n) - 2;
  if (std::fabs(r) >= 1.0) return 0.0;
  const double t = r * std::sqrt(df / (1.0 - r * r));
  return 2.0 * t_cdf(-std::fabs(t), df);
}

OlsFit normal_equations_ols(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  OlsFit fit;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  return fit;
}

}  // namespace oracle
