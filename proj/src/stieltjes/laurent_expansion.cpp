// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#include "stieltjes/laurent_expansion.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace laurent {

std::complex<double> LaurentExpansion::evaluate(double s) const {
  const double dx = s - center;
  if (pole_order == 1 && dx == 0.0) {
    throw domain_error("LaurentExpansion: evaluation at the pole");
  }
  std::complex<double> series{0.0, 0.0};
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    series = series * dx + *it;
  }
  if (pole_order == 1) series += principal_coefficient / dx;
  return series;
}

namespace {

LaurentExpansion expansion_from_constants(double a, int k_max,
                                          const SummationControl& ctl,
                                          const char* label) {
  if (k_max < 0 || k_max > 20) {
    throw domain_error("laurent expansion: k_max must be in [0, 20]");
  }
  LaurentExpansion exp;
  exp.center = 1.0;
  exp.pole_order = 1;
  exp.principal_coefficient = 1.0;
  exp.coefficients.reserve(k_max + 1);
  exp.coefficient_error_bounds.reserve(k_max + 1);
  exp.terms_used.reserve(k_max + 1);
  double inv_factorial = 1.0;
  long total_terms = 0;
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) inv_factorial /= k;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const EulerConstant g = hurwitz_euler_constant(k, a, ctl);
    exp.coefficients.emplace_back(sign * inv_factorial * g.value, 0.0);
    exp.coefficient_error_bounds.push_back(inv_factorial * g.abs_error_estimate);
    exp.terms_used.push_back(g.terms_used);
    total_terms += g.terms_used;
  }
  exp.meta = std::string(label) +
             ": Euler-Maclaurin accelerated defining limits, order " +
             std::to_string(ctl.em_order) + ", " + std::to_string(total_terms) +
             " summed terms across " + std::to_string(k_max + 1) + " coefficients";
  return exp;
}

}  // namespace

LaurentExpansion laurent_zeta(int k_max, const SummationControl& ctl) {
  return expansion_from_constants(1.0, k_max, ctl, "zeta at s=1");
}

LaurentExpansion laurent_hurwitz(double a, int k_max, const SummationControl& ctl) {
  return expansion_from_constants(a, k_max, ctl, "hurwitz zeta at s=1");
}

}  // namespace laurent
