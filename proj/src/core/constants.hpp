// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0
//
// Source-of-truth mathematical constants for the library. Every literal is
// given to 30 significant digits (binary64 keeps ~17; the compiler rounds to
// nearest) and was cross-checked against a 50-digit arbitrary-precision
// computation before being frozen here. Keep this the only place such
// constants are spelled out.

#pragma once

namespace laurent {

inline constexpr double kPi = 3.14159265358979323846264338328;
inline constexpr double kTwoPi = 6.28318530717958647692528676656;

// Euler-Mascheroni constant gamma = gamma_0.
inline constexpr double kEulerGamma = 0.577215664901532860606512090082;

// log(2*pi), the expansion variable of the (2pi)^s/Gamma(s) power series.
inline constexpr double kLog2Pi = 1.83787706640934548356065947281;

// Riemann zeta at the integers 2..16, indexed by argument (entries 0 and 1
// are unused padding). Consumed by the reciprocal-gamma Taylor recurrence.
inline constexpr double kZetaAtIntegers[17] = {
    0.0,
    0.0,
    1.64493406684822643647241516665,   // zeta(2) = pi^2/6
    1.20205690315959428539973816151,   // zeta(3)
    1.08232323371113819151600369654,   // zeta(4) = pi^4/90
    1.03692775514336992633136548646,   // zeta(5)
    1.01734306198444913971451792979,   // zeta(6) = pi^6/945
    1.00834927738192282683979754985,   // zeta(7)
    1.00407735619794433937868523851,   // zeta(8)
    1.00200839282608221441785276923,   // zeta(9)
    1.00099457512781808533714595890,   // zeta(10)
    1.00049418860411946455870228253,   // zeta(11)
    1.00024608655330804829863799805,   // zeta(12)
    1.00012271334757848914675183653,   // zeta(13)
    1.00006124813505870482925854511,   // zeta(14)
    1.00003058823630702049355172851,   // zeta(15)
    1.00001528225940865187173257149,   // zeta(16)
};

// Bernoulli numbers B_2, B_4, ..., B_26 as exact rationals, indexed by j with
// kBernoulliEven[j] = B_{2j}. Used by the Euler-Maclaurin correction terms
// and their first-omitted-term error estimates (em_order <= 10 uses B_22 for
// the estimate; two spares beyond that keep the table from being the limit).
inline constexpr double kBernoulliEven[14] = {
    1.0,                           // B_0
    1.0 / 6.0,                     // B_2
    -1.0 / 30.0,                   // B_4
    1.0 / 42.0,                    // B_6
    -1.0 / 30.0,                   // B_8
    5.0 / 66.0,                    // B_10
    -691.0 / 2730.0,               // B_12
    7.0 / 6.0,                     // B_14
    -3617.0 / 510.0,               // B_16
    43867.0 / 798.0,               // B_18
    -174611.0 / 330.0,             // B_20
    854513.0 / 138.0,              // B_22
    -236364091.0 / 2730.0,         // B_24
    8553103.0 / 6.0,               // B_26
};

}  // namespace laurent
