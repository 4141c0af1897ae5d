// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace consistat {

/// Counter-based splittable PRNG (splitmix64 finalizer over a keyed
/// counter). Substreams derived from (seed, stream) are independent, so
/// per-replication streams make parallel and serial Monte Carlo runs
/// bit-identical.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  /// Uniform draw strictly inside (0, 1).
  double next_uniform();

  /// N(mean, sd^2) draw via the inverse CDF, one uniform per variate.
  double next_normal(double mean, double sd);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Stable 64-bit substream seed for (seed, stream); used to hand a
/// replication its own SimulationSpec seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace consistat
