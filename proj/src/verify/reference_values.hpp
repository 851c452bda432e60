// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace laurent::reference {

// Reference constants for the verification suites. The kPublished* values are
// quoted digit-for-digit from the published table for the weight-12
// discriminant form. Everything else was evaluated independently at 50-digit
// working precision (defining limits and integrals, not this library's code
// paths) and rounded to binary64.

// Published Taylor coefficients of L(Delta, s) at s = 0: the series column
// and the numerically differentiated column, both as printed.
inline constexpr double kPublishedC112Series = 0.01048627312924116;
inline constexpr double kPublishedC112Derivative = 0.01048627312924115;
inline constexpr double kPublishedC212Series = 0.01894525791618929;
inline constexpr double kPublishedC212Derivative = 0.01894504907238154;

// Stieltjes constants gamma_k (Laurent coefficients of zeta at s = 1).
inline constexpr double kGamma0 = 0.577215664901532861;
inline constexpr double kGamma1 = -0.072815845483676725;
inline constexpr double kGamma2 = -0.00969036319287231848453038603521;
inline constexpr double kGamma3 = 0.00205383442030334586616004654275;

// Generalized Euler constants gamma_k(a) for the Hurwitz zeta function.
inline constexpr double kHurwitzGamma0Half = 1.96351002602142347944097633300;   // = gamma + 2 log 2
inline constexpr double kHurwitzGamma1Half = -1.35345968080494151770868716918;
inline constexpr double kHurwitzGamma0Quarter = 4.22745353337626540808953014610;
inline constexpr double kHurwitzGamma1Quarter = -5.51807635019940375269401104478;

// gamma_0(1/4) - gamma_0(3/4) collapses to pi exactly.
inline constexpr double kPiReference = 3.14159265358979323846264338328;

// First Laurent coefficients of Dirichlet L-functions at s = 1.
inline constexpr double kGamma0Chi4 = 0.785398163397448309615660845820;   // pi/4
inline constexpr double kGamma0Chi3 = 0.604599788078072616864692752547;   // pi/(3 sqrt 3)
inline constexpr double kGamma1Chi4 = -0.192901316796912429363189764028;
inline constexpr double kCatalan = 0.915965594177219015054603514932;      // L(2, chi mod 4)

}  // namespace laurent::reference
