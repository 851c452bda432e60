// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#include "verify/richardson.hpp"

#include "core/errors.hpp"

namespace laurent {

double richardson_derivative(const std::function<double(double)>& fn, double s0,
                             int order, double h0) {
  if (order != 1 && order != 2) {
    throw domain_error("richardson_derivative: order must be 1 or 2");
  }
  if (!(h0 >= 1e-5 && h0 <= 1e-2)) {
    throw domain_error("richardson_derivative: h0 must be in [1e-5, 1e-2]");
  }

  const double h = h0, g = h0 / 2.0;
  double coarse, fine;
  if (order == 1) {
    coarse = (fn(s0 + h) - fn(s0 - h)) / (2.0 * h);
    fine = (fn(s0 + g) - fn(s0 - g)) / (2.0 * g);
  } else {
    const double center = fn(s0);
    coarse = (fn(s0 + h) - 2.0 * center + fn(s0 - h)) / (h * h);
    fine = (fn(s0 + g) - 2.0 * center + fn(s0 - g)) / (g * g);
  }
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace laurent
