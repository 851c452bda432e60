// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#include "specfun/gamma_series.hpp"

#include <cmath>

#include "core/compensated.hpp"
#include "core/constants.hpp"
#include "core/errors.hpp"

namespace laurent {

std::vector<double> reciprocal_gamma_taylor(int n_max) {
  if (n_max < 1 || n_max > 16) {
    throw domain_error("reciprocal_gamma_taylor: n_max must be in [1, 16]");
  }
  // c[n] holds c_n; index 0 unused (the series has no constant term).
  std::vector<double> c(n_max + 1, 0.0);
  c[1] = 1.0;
  if (n_max >= 2) c[2] = kEulerGamma;
  for (int n = 3; n <= n_max; ++n) {
    CompensatedSum acc;
    acc.add(kEulerGamma * c[n - 1]);
    double sign = -1.0;  // (-1)^{j-1} for j = 2
    for (int j = 2; j <= n - 1; ++j) {
      acc.add(sign * kZetaAtIntegers[j] * c[n - j]);
      sign = -sign;
    }
    c[n] = acc.value() / (n - 1);
  }
  return std::vector<double>(c.begin() + 1, c.end());
}

double reciprocal_gamma(double s) {
  if (s < -170.0) {
    throw domain_error("reciprocal_gamma: s must be >= -170");
  }
  if (std::abs(s) <= 0.25) {
    static const std::vector<double> c = reciprocal_gamma_taylor(16);
    double acc = 0.0;  // Horner from c_16 down; truncation < 1e-20 at |s| = 1/4
    for (int n = 15; n >= 0; --n) acc = acc * s + c[n];
    return acc * s;
  }
  if (s > 0.0) return 1.0 / std::tgamma(s);
  // Reflection with the sine argument reduced so 1/Gamma vanishes exactly at
  // the negative integers.
  const double r = std::round(s);
  const double sin_pi_s = (static_cast<long long>(r) % 2 == 0 ? 1.0 : -1.0) *
                          std::sin(kPi * (s - r));
  return sin_pi_s * std::tgamma(1.0 - s) / kPi;
}

std::vector<double> b_coefficients(int n_max) {
  if (n_max < 1 || n_max > 16) {
    throw domain_error("b_coefficients: n_max must be in [1, 16]");
  }
  const std::vector<double> c = reciprocal_gamma_taylor(n_max);
  std::vector<double> log_pow(n_max, 1.0);       // log^j(2pi)
  std::vector<double> factorial(n_max + 1, 1.0);
  for (int j = 1; j < n_max; ++j) log_pow[j] = log_pow[j - 1] * kLog2Pi;
  for (int j = 1; j <= n_max; ++j) factorial[j] = factorial[j - 1] * j;

  std::vector<double> b(n_max);
  for (int n = 1; n <= n_max; ++n) {
    CompensatedSum acc;
    for (int m = 1; m <= n; ++m) {
      acc.add(c[m - 1] * log_pow[n - m] / factorial[n - m]);
    }
    b[n - 1] = factorial[n] * acc.value();
  }
  return b;
}

}  // namespace laurent
