// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "stieltjes/euler_constants.hpp"

namespace laurent {

// One function's Laurent expansion about a point:
//   F(s) = principal_coefficient/(s - center) [if pole_order = 1]
//          + sum_{j>=0} coefficients[j] (s - center)^j.
// Coefficients are stored complex; expansions of real-valued functions carry
// zero imaginary parts. coefficient_error_bounds[j] is an absolute error
// estimate for coefficients[j] propagated from the underlying summations.
struct LaurentExpansion {
  double center = 1.0;
  int pole_order = 0;  // 0 or 1
  double principal_coefficient = 0.0;
  std::vector<std::complex<double>> coefficients;
  std::vector<double> coefficient_error_bounds;
  std::vector<long> terms_used;
  std::string meta;

  // Truncated evaluation (pole part plus stored series, Horner order).
  // Throws domain_error at s == center when pole_order = 1.
  std::complex<double> evaluate(double s) const;
};

// Laurent expansion of zeta(s) at s = 1: pole residue 1 and
// c_j = (-1)^j gamma_j / j! for 0 <= j <= k_max (k_max <= 20).
LaurentExpansion laurent_zeta(int k_max, const SummationControl& ctl = {});

// Laurent expansion of the Hurwitz zeta zeta(s, a) at s = 1 (0 < a <= 1):
// pole residue 1 for every a, c_j = (-1)^j gamma_j(a) / j!.
LaurentExpansion laurent_hurwitz(double a, int k_max, const SummationControl& ctl = {});

}  // namespace laurent
