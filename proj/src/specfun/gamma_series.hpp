// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace laurent {

// Taylor coefficients of the entire function 1/Gamma(s) = sum_{n>=1} c_n s^n.
// Returns {c_1, ..., c_n_max} (result[i] is c_{i+1}); c_1 = 1, c_2 = gamma,
// c_3 = gamma^2/2 - pi^2/12. Computed by the classical recurrence
//   (n-1) c_n = gamma c_{n-1} - zeta(2) c_{n-2} + zeta(3) c_{n-3} - ...
// with the fixed zeta(2..16) constant table. Each coefficient is accurate to
// better than 1e-13 absolute. Requires 1 <= n_max <= 16.
std::vector<double> reciprocal_gamma_taylor(int n_max);

// 1/Gamma(s) on the real line, finite everywhere (zero at s = 0, -1, -2, ...).
// Uses the Taylor series above for |s| <= 0.25, direct 1/tgamma for
// s >= 0.25, and the reflection 1/Gamma(s) = sin(pi s) Gamma(1-s)/pi for
// s <= -0.25 with the sine reduced modulo pi so integer zeros are exact.
// Requires s >= -170 (Gamma(1-s) overflows beyond).
double reciprocal_gamma(double s);

// Coefficients B(n) of (2pi)^s / Gamma(s) = sum_{n>=1} B(n) s^n / n!,
// returned as {B(1), ..., B(n_max)} (result[i] is B(i+1)). Cauchy product of
// the exponential series for (2pi)^s with reciprocal_gamma_taylor, including
// the n! normalization: B(n) = n! sum_{m=1}^{n} c_m log^{n-m}(2pi)/(n-m)!.
// B(1) = 1 and B(2) = 2(gamma + log 2pi). Requires 1 <= n_max <= 16.
std::vector<double> b_coefficients(int n_max);

}  // namespace laurent
