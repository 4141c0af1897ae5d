// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace consistat::sf {

// Series / continued-fraction implementations with absolute error
// targets around 1e-15; each is unit-tested on its own against an
// independent reference.

/// Error function.
double erf(double x);

/// Complementary error function, accurate in the far tail.
double erfc(double x);

/// Natural log of the gamma function, x > 0.
double lgamma(double x);

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
/// Requires a > 0, x >= 0.
double reg_inc_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double reg_inc_gamma_q(double a, double x);

/// Regularized incomplete beta I_x(a, b). Requires a, b > 0, x in [0, 1].
double reg_inc_beta(double x, double a, double b);

}  // namespace consistat::sf
