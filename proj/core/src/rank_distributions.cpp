// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#include "consistat/rank_distributions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "consistat/errors.hpp"

namespace consistat {

namespace {

// Arrangement counts a(u; m, n) for the Mann-Whitney statistic follow
//   a(u; m, n) = a(u - n; m - 1, n) + a(u; m, n - 1)
// with a(0; m, 0) = a(0; 0, n) = 1. With the m * n <= 400 cap the
// total count C(m + n, m) stays far below 2^64.
std::vector<std::uint64_t> u_counts(int m, int n) {
  std::vector<std::vector<std::uint64_t>> prev(n + 1), cur(n + 1);
  for (int j = 0; j <= n; ++j) prev[j] = {1};  // m = 0
  for (int mi = 1; mi <= m; ++mi) {
    cur[0] = {1};
    for (int j = 1; j <= n; ++j) {
      cur[j].assign(static_cast<std::size_t>(mi) * j + 1, 0);
      for (int u = 0; u <= mi * j; ++u) {
        std::uint64_t total = 0;
        if (u >= j) total += prev[j][u - j];
        if (u < static_cast<int>(cur[j - 1].size())) total += cur[j - 1][u];
        cur[j][u] = total;
      }
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

}  // namespace

double ExactRankPmf::cdf(int value) const {
  if (value < 0) return 0.0;
  if (value >= max_value()) return 1.0;
  double sum = 0.0;
  for (int v = 0; v <= value; ++v) sum += probabilities[v];
  return std::min(sum, 1.0);
}

ExactRankPmf exact_u_pmf(int n_a, int n_b, int cap) {
  if (n_a < 1 || n_b < 1) throw DomainError("exact_u_pmf requires n_a, n_b >= 1");
  if (static_cast<long long>(n_a) * n_b > cap) {
    throw CapExceededError("exact_u_pmf: n_a * n_b = " + std::to_string(n_a * n_b) +
                           " exceeds cap " + std::to_string(cap));
  }
  const auto counts = u_counts(n_a, n_b);
  double total = 0.0;
  for (auto c : counts) total += static_cast<double>(c);
  ExactRankPmf pmf;
  pmf.n_a = n_a;
  pmf.n_b = n_b;
  pmf.probabilities.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    pmf.probabilities[i] = static_cast<double>(counts[i]) / total;
  }
  return pmf;
}

std::optional<int> u_critical(int n_a, int n_b, double alpha, int cap) {
  const auto pmf = exact_u_pmf(n_a, n_b, cap);
  std::optional<int> best;
  double cum = 0.0;
  for (int u = 0; u <= pmf.max_value(); ++u) {
    cum += pmf.probabilities[u];
    if (2.0 * cum <= alpha) {
      best = u;
    } else {
      break;
    }
  }
  return best;
}

ExactRankPmf exact_t_pmf(int n, int cap) {
  if (n < 1) throw DomainError("exact_t_pmf requires n >= 1");
  if (n > cap) {
    throw CapExceededError("exact_t_pmf: n = " + std::to_string(n) + " exceeds cap " +
                           std::to_string(cap));
  }
  const int max_t = n * (n + 1) / 2;
  // Subset-sum counts over ranks 1..n; 2^n fits in uint64 for n <= 60.
  std::vector<std::uint64_t> counts(max_t + 1, 0);
  counts[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int t = max_t; t >= k; --t) counts[t] += counts[t - k];
  }
  const double total = std::ldexp(1.0, n);
  ExactRankPmf pmf;
  pmf.n_a = n;
  pmf.probabilities.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    pmf.probabilities[i] = static_cast<double>(counts[i]) / total;
  }
  return pmf;
}

std::optional<int> t_critical(int n, double alpha, int cap) {
  const auto pmf = exact_t_pmf(n, cap);
  std::optional<int> best;
  double cum = 0.0;
  for (int t = 0; t <= pmf.max_value(); ++t) {
    cum += pmf.probabilities[t];
    if (2.0 * cum <= alpha) {
      best = t;
    } else {
      break;
    }
  }
  return best;
}

}  // namespace consistat
