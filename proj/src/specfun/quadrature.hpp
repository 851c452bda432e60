// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

namespace laurent {

struct QuadratureSpec {
  double rel_tolerance = 1e-15;
  double abs_tolerance = 1e-300;
  int max_refinement_levels = 12;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int levels_used = 0;
  long evaluations = 0;
};

// Integrates f over [a, infinity) for integrands that decay at least
// exponentially. Uses the substitution y = a + exp(u - exp(-u)) (the
// exponential-decay member of the double-exponential family), under which
// the trapezoid rule on a uniform u-grid converges geometrically in the
// refinement level for smooth integrands. Levels halve the step; the error
// estimate is the difference between the last two levels.
//
// Throws accuracy_error carrying the best estimate if the tolerances are not
// met within spec.max_refinement_levels.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double a,
                                         const QuadratureSpec& spec = {});

}  // namespace laurent
