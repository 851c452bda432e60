// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "cuspform/cusp_form.hpp"

namespace laurent {

// Taylor expansion of L(f, s) about s = 0. L(f, 0) = 0, so the series starts
// at order 1: L(f, s) = sum_{n>=1} orders[n-1] s^n.
struct CuspFormLaurent {
  std::vector<double> orders;              // C(1,k) .. C(n_orders,k)
  std::vector<double> order_error_bounds;  // propagated absolute estimates
  long terms_used = 0;                     // Fourier terms per integral sum
  double term_tail_bound = 0.0;            // envelope bound on the dropped m-tail
};

// A(n,k) = integral_1^inf W(y)/y ((-1)^n y^k + 1) log^n(y) dy, evaluated by
// expanding W termwise: the substitution y -> y/(2 pi m) turns each Fourier
// term into binomial combinations of log-weighted incomplete gammas,
//   sum_j C(n,j) (-log 2 pi m)^{n-j} Gamma_j(s, 2 pi m)  at s = k and s = 0.
// The m-sum is truncated at n_terms (>= 8 so the dropped tail is provably
// inside the Deligne envelope sum_{m>n_terms} m^{(k+1)/2} e^{-2 pi m}).
// Requires 0 <= n <= 12.
double a_coefficient(int n, const CuspForm& f, long n_terms);

// The same A(n,k) by direct double-exponential quadrature of the defining
// integral with W evaluated adaptively inside the integrand. Slower and
// entirely independent of the incomplete-gamma reduction; kept as an oracle.
double a_coefficient_by_quadrature(int n, const CuspForm& f);

// Taylor coefficient C(n,k) of L(f, s) at s = 0 through the convolution
//   C(n,k) = sum_{i+j=n, j>=1} A(i,k)/i! * B(j)/j!
// with B(j) from b_coefficients. In particular C(1,k) = A(0,k) and
// C(2,k) = A(0,k)(gamma + log 2 pi) + A(1,k). Requires 1 <= n <= 8.
double c_coefficient(int n, const CuspForm& f, long n_terms);

// C(1..n_orders, k) with shared A(i,k) evaluations, plus the envelope bound
// on the truncated Fourier tail. Requires 1 <= n_orders <= 8.
CuspFormLaurent laurent_cuspform(const CuspForm& f, int n_orders, long n_terms);

// L(f, s) for any real s in [-170, 15] via the integral representation
//   (2 pi)^{-s} Gamma(s) L(f, s) = integral_1^inf W(y) (y^{k-1-s} + y^{s-1}) dy,
// valid on all of C; the 1/Gamma(s) factor is evaluated so the trivial zeros
// at s = 0, -1, -2, ... come out exact. Absolute accuracy ~1e-13 for |s| <= 15.
double l_f_direct(double s, const CuspForm& f);

// The completed-function integral I(s) = integral above by itself. The
// integrand is symmetric under s <-> k-s, giving the reflection
// Lambda(s) = (-1)^{k/2} Lambda(k-s) identically; exposed for that check.
double completed_l_integral(double s, const CuspForm& f);

}  // namespace laurent
