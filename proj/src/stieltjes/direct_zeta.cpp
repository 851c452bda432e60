// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#include "stieltjes/direct_zeta.hpp"

#include <algorithm>
#include <cmath>

#include "core/compensated.hpp"
#include "core/errors.hpp"

namespace laurent {

namespace {

constexpr long kMaxIntervals = 30000000;

// s * integral over [i, i+1) of (x - i)(x + a)^{-s-1} dx in closed form.
// With c = i + a and L = log1p(1/c):
//   s/(1-s) * (c^{1-s} expm1((1-s)L)) + c^{1-s} expm1(-sL),
// grouped so the two near-cancelling power differences are each computed
// stably via expm1/log1p.
double interval_term(double s, double c) {
  const double L = std::log1p(1.0 / c);
  const double scale = std::pow(c, 1.0 - s);
  return scale * (s / (1.0 - s) * std::expm1((1.0 - s) * L) + std::expm1(-s * L));
}

// s * integral_start^inf frac(x) (x + a)^{-s-1} dx. The tail beyond M unit
// intervals is (M+a)^{-s}/2 plus a remainder bounded by s (M+a)^{-s-1}/6
// (integrate frac - 1/2 by parts against the periodic Bernoulli P2, |P2|<=1/6).
double frac_integral(double s, long start, double a) {
  // Pick M so the tail remainder bound s (M+a)^{-s-1}/6 is under ~4e-12.
  const double want = std::exp(std::log(s / (6.0 * 4e-12)) / (s + 1.0));
  long m = std::clamp(static_cast<long>(want) + 1, start + 1, kMaxIntervals);

  const double bound = s * std::pow(m + a, -s - 1.0) / 6.0;
  if (bound > 5e-12) {
    throw accuracy_error("zeta_direct: tail bound above target at interval cap",
                         0.0, bound);
  }
  CompensatedSum sum;
  for (long i = start; i < m; ++i) {
    sum.add(interval_term(s, i + a));
  }
  sum.add(0.5 * std::pow(m + a, -s));
  return sum.value();
}

void check_domain(double s) {
  if (!(s > 0.0) || s == 1.0) {
    throw domain_error("direct zeta evaluation requires s > 0, s != 1");
  }
}

}  // namespace

double zeta_direct(double s) {
  check_domain(s);
  return s / (s - 1.0) - frac_integral(s, 1, 0.0);
}

double hurwitz_direct(double s, double a, long n_split) {
  check_domain(s);
  if (!(a > 0.0) || a > 1.0) {
    throw domain_error("hurwitz_direct: a must satisfy 0 < a <= 1");
  }
  if (n_split < 0 || n_split > 1000000) {
    throw domain_error("hurwitz_direct: n_split must be in [0, 1000000]");
  }

  CompensatedSum head;
  for (long n = 0; n <= n_split; ++n) {
    head.add(std::pow(n + a, -s));
  }
  const double x = n_split + a;
  return head.value() + std::pow(x, 1.0 - s) / (s - 1.0) - frac_integral(s, n_split, a);
}

}  // namespace laurent
