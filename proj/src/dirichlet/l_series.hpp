// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include "dirichlet/character.hpp"
#include "stieltjes/euler_constants.hpp"
#include "stieltjes/laurent_expansion.hpp"

namespace laurent {

// Generalized Euler constant on an arithmetic progression,
//   gamma_k(a, q) = lim_{x->inf} ( sum_{n<=x, n=a (mod q)} log^k(n)/n
//                                  - log^{k+1}(x)/(q(k+1)) ),
// with the logarithmic correction applied once, outside the restricted sum
// (the only reading under which summing over all residues a recovers
// gamma_k). Accelerated by the substitution n = qm + a, which reduces the
// restricted sum to Hurwitz-type sums:
//   gamma_k(a, q) = (1/q) [ sum_{j=0}^{k} C(k,j) log^j(q) gamma_{k-j}(a/q)
//                           - log^{k+1}(q)/(k+1) ].
// Requires 1 <= a <= q, 0 <= k <= 20.
EulerConstant residue_euler_constant(int k, long a, long q,
                                     const SummationControl& ctl = {});

// Character Euler constant gamma_k(chi) = sum_{a=1}^{q} chi(a) gamma_k(a,q);
// equals (-1)^k L^{(k)}(1, chi) for non-principal chi.
struct CharacterConstant {
  std::complex<double> value;
  double abs_error_estimate = 0.0;
  long terms_used = 0;
};
CharacterConstant dirichlet_euler_constant(const DirichletCharacter& chi, int k,
                                           const SummationControl& ctl = {});

// Taylor expansion of the entire function L(s, chi) about s = 1:
// pole_order 0, c_k = (-1)^k gamma_k(chi)/k!. Requires 0 <= k_max <= 20.
LaurentExpansion laurent_dirichlet(const DirichletCharacter& chi, int k_max,
                                   const SummationControl& ctl = {});

// Direct L(s, chi) for s > 0 by Abel summation against the bounded partial
// sums A(x) = sum_{n<=x} chi(n):
//   L(s, chi) = sum_{n<=M} A_n (n^{-s} - (n+1)^{-s}) + tail,
// where the tail is resolved exactly for the period-mean component of A and
// rigorously bounded for the rest (see l_series.cpp). Absolute error
// <= abs_tol (default 1e-10, floor ~1e-13 at the interval cap).
std::complex<double> l_direct(double s, const DirichletCharacter& chi,
                              double abs_tol = 1e-10);

// Both sides of the periodic-sum identity
//   sum_{n>=1} g(n) log^k(n)/n = sum_{a=1}^{q} g(a) gamma_k(a, q),
// valid for q-periodic g with zero mean. g is passed as its value table
// g(1..q) (index q = residue 0). lhs is computed by Abel summation with a
// bounded tail, rhs from residue_euler_constant; both independent paths.
struct PeriodicSumCheck {
  std::complex<double> lhs;
  std::complex<double> rhs;
  double abs_diff = 0.0;
};
PeriodicSumCheck periodic_sum_check(const std::vector<std::complex<double>>& g,
                                    int k, const SummationControl& ctl = {});

}  // namespace laurent
