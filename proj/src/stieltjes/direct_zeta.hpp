// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace laurent {

// Direct evaluation of zeta(s) for s > 0, s != 1, from the integral
// representation
//   zeta(s) = s/(s-1) - s * integral_1^inf frac(x) x^{-s-1} dx,
// with the integral accumulated as exact per-unit-interval closed forms plus
// a rigorously bounded tail. Absolute error <= 1e-11. Independent of the
// Laurent/Stieltjes machinery, so it serves as a cross-check oracle.
double zeta_direct(double s);

// Direct Hurwitz zeta evaluation for s > 0, s != 1, 0 < a <= 1:
//   zeta(s, a) = sum_{n=0}^{N} (n+a)^{-s} + (N+a)^{1-s}/(s-1)
//                - s * integral_N^inf frac(x) (x+a)^{-s-1} dx
// for any split point N = n_split >= 0; the result is N-independent to
// <= 1e-11, which the tests assert. Same per-interval machinery as
// zeta_direct (zeta_direct is the a = 0, N = 1 specialization).
double hurwitz_direct(double s, double a, long n_split = 10);

}  // namespace laurent
