// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace consistat {

/// Exact null distribution of an integer-valued rank statistic.
///
/// For Mann-Whitney U the support is 0..n_a*n_b; for the Wilcoxon
/// signed-rank T it is 0..n(n+1)/2. Both null pmfs are symmetric about
/// the midpoint of their support and sum to 1 within 1e-12.
struct ExactRankPmf {
  std::vector<double> probabilities;  // indexed by the statistic value
  int n_a = 0;                        // first sample size (U) or series length (T)
  int n_b = 0;                        // second sample size (U); 0 for T

  int max_value() const { return static_cast<int>(probabilities.size()) - 1; }
  /// P(statistic <= value), clamped to the support.
  double cdf(int value) const;
};

inline constexpr int kDefaultUCap = 400;  // cap on n_a * n_b
inline constexpr int kDefaultTCap = 60;   // cap on n

/// Exact pmf of Mann-Whitney U under the null (all rank arrangements
/// equally likely), by dynamic programming over arrangement counts.
/// Requires n_a, n_b >= 1 and n_a * n_b <= cap.
ExactRankPmf exact_u_pmf(int n_a, int n_b, int cap = kDefaultUCap);

/// Largest u with 2 * P(U <= u) <= alpha, or nullopt when even u = 0
/// exceeds the level.
std::optional<int> u_critical(int n_a, int n_b, double alpha, int cap = kDefaultUCap);

/// Exact pmf of the Wilcoxon signed-rank statistic over all 2^n
/// equiprobable sign patterns on ranks 1..n. Requires 1 <= n <= cap.
ExactRankPmf exact_t_pmf(int n, int cap = kDefaultTCap);

/// Largest t with 2 * P(T <= t) <= alpha, or nullopt.
std::optional<int> t_critical(int n, double alpha, int cap = kDefaultTCap);

}  // namespace consistat
