// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace laurent {

// Knobs shared by every accelerated limit/series evaluation in the library.
struct SummationControl {
  long max_terms = 100000;      // hard ceiling on summed lattice terms
  int em_order = 6;             // Euler-Maclaurin correction depth p (0..10)
  double target_abs_tol = 1e-12;
};

struct EulerConstant {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long terms_used = 0;
};

// Stieltjes constant gamma_k, the k-th coefficient (up to (-1)^k/k!) of the
// Laurent expansion of zeta(s) at s = 1:
//   gamma_k = lim_{m->inf} ( sum_{i=1}^{m} log^k(i)/i - log^{k+1}(m)/(k+1) ).
// The raw limit converges like log^{k+1}(m)/m, far too slowly to use, so the
// partial sum is corrected by the Euler-Maclaurin formula applied to
// f(x) = log^k(x)/x with analytically differentiated correction terms; the
// cutoff is chosen adaptively (see euler_constants.cpp). Requires 0 <= k <= 20:
// beyond k = 20 the correction terms outgrow binary64.
EulerConstant stieltjes_constant(int k, const SummationControl& ctl = {});

// Generalized Euler constant gamma_k(a) for the Hurwitz zeta function,
//   gamma_k(a) = lim ( sum_{i=0}^{m} log^k(i+a)/(i+a) - log^{k+1}(m+a)/(k+1) ),
// the k-th Laurent coefficient of zeta(s, a) at s = 1 up to (-1)^k/k!.
// The sum starts at i = 0 (it includes the log^k(a)/a term). Same acceleration
// as stieltjes_constant; gamma_k(1) = gamma_k exactly (identical code path).
// Requires 0 < a <= 1 and 0 <= k <= 20.
EulerConstant hurwitz_euler_constant(int k, double a, const SummationControl& ctl = {});

}  // namespace laurent
