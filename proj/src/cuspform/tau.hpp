// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace laurent {

// 128-bit integers carry the tau values exactly: |tau(n)| can pass 2^63 near
// n ~ 3000, and the Deligne envelope d(n) n^{11/2} stays under 2^127 for
// every n <= 100000.
using WideInt = __int128;

std::string wide_int_to_string(WideInt v);

// Ramanujan tau(1..n_max) from Delta(z) = q prod_{m>=1} (1 - q^m)^24. The
// pentagonal-number theorem gives prod (1 - q^m) as a sparse +-1 series; the
// 24th power is built as ((P^2 * P)^2)^2)^2, three dense convolution squarings
// on top of one sparse pass, all in exact integer arithmetic.
// Requires 1 <= n_max <= 100000.
std::vector<WideInt> delta_coefficients(long n_max);

// Same tau values by a deliberately different route: 24 successive sparse
// multiplications by the pentagonal series. Quadratic in the number of
// multiplications rather than logarithmic, kept as an independent cross-check
// of delta_coefficients. Requires 1 <= n_max <= 100000.
std::vector<WideInt> tau_by_repeated_multiplication(long n_max);

// Number of divisors of n (trial division). Requires n >= 1.
long divisor_count(long n);

// Exact check of |tau(n)| <= d(n) n^{11/2} for all n <= n_max, compared as
// tau(n)^2 <= d(n)^2 n^11 in 128-bit arithmetic. Returns 0 when the bound
// holds everywhere, otherwise the first violating n. The squared comparison
// stays inside 128 bits only for n_max <= 1500.
long deligne_first_violation(long n_max);

}  // namespace laurent
