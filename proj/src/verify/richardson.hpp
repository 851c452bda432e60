// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

namespace laurent {

// Central-difference derivative of fn at s0, Richardson-extrapolated: the
// order-h^2 stencil is evaluated at steps h0 and h0/2 and combined as
// (4 D(h0/2) - D(h0))/3 to cancel the h^2 term. order = 1 returns fn'(s0)
// from the two-point stencil, order = 2 returns fn''(s0) from the three-point
// stencil. Requires order in {1, 2} and 1e-5 <= h0 <= 1e-2.
double richardson_derivative(const std::function<double(double)>& fn, double s0,
                             int order, double h0 = 1e-3);

}  // namespace laurent
