// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "specfun/quadrature.hpp"

namespace laurent {

enum class GammaMethod {
  closed_form_finite_sum,  // exact finite sum (integer s); also the small-a E1 series
  continued_fraction,      // Legendre continued fraction, modified Lentz
  quadrature,              // semi-infinite double-exponential quadrature
};

struct IncompleteGammaResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  GammaMethod method = GammaMethod::quadrature;
};

// Gamma(s) for s > 0, relative accuracy <= 1e-14 (delegates to the platform
// tgamma, which is correctly rounded to within a few ulp on glibc).
double complete_gamma(double s);

// Upper incomplete gamma Gamma(s, a) = integral_a^inf e^{-y} y^{s-1} dy,
// defined for all real s when a > 0. Method selection:
//   - positive integer s:   closed form (s-1)! e^{-a} sum_{j<s} a^j/j!
//   - s = 0:                exp_integral_e1 (Gamma(0,a) = E1(a))
//   - a > s+1 and a >= 0.7: continued fraction
//   - otherwise:            quadrature
// Relative accuracy <= 1e-13.
IncompleteGammaResult upper_incomplete_gamma(double s, double a,
                                             const QuadratureSpec& spec = {});

// Gamma(s, a) by direct double-exponential quadrature regardless of what the
// dispatcher above would pick. Slower; kept public as the independent
// cross-check for the closed-form and continued-fraction paths.
IncompleteGammaResult upper_incomplete_gamma_by_quadrature(double s, double a,
                                                           const QuadratureSpec& spec = {});

// Exponential integral E1(a) = Gamma(0, a), a > 0. Power series
// E1(a) = -gamma - log a + sum_{n>=1} (-1)^{n+1} a^n / (n * n!) for a < 1.2,
// continued fraction at or above that crossover (where the alternating series
// starts losing digits to cancellation and the fraction converges quickly).
IncompleteGammaResult exp_integral_e1(double a);

// Log-weighted upper incomplete gamma
//   Gamma_ell(s, a) = integral_a^inf e^{-y} log^ell(y) y^{s-1} dy,
// computed by direct quadrature (ell = 0 reduces to upper_incomplete_gamma).
// Equals the ell-th s-derivative of Gamma(s, a); finite differencing that
// derivative is kept as a test oracle only.
IncompleteGammaResult log_weighted_incomplete_gamma(int ell, double s, double a,
                                                    const QuadratureSpec& spec = {});

}  // namespace laurent
