// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0
//
// Euler-Maclaurin acceleration of the defining limits of gamma_k and
// gamma_k(a). With f(x) = log^k(x)/x and X = N + a:
//
//   gamma_k(a) = sum_{i=0}^{N} f(i+a) - log^{k+1}(X)/(k+1)
//                - f(X)/2 - sum_{j=1}^{p} B_{2j}/(2j)! f^{(2j-1)}(X)  - R_p
//
// where the omitted remainder R_p is of the order of the first dropped
// correction term. The derivatives follow from the closed form
//   f^{(d)}(x) = ( sum_{t=0}^{k} c[d][t] log^t(x) ) / x^{d+1}
// whose integer coefficient table obeys the recurrence (differentiate once)
//   c[d+1][t] = (t+1) c[d][t+1] - (d+1) c[d][t],  c[0][k] = 1.
//
// Accuracy is bounded below by a cancellation floor: the partial sum and the
// subtracted log^{k+1}(X)/(k+1) term are both of size log^{k+1}(X)/(k+1), so
// roundoff costs ~ eps * log^{k+1}(X)/(k+1) and GROWS with N, while the
// Euler-Maclaurin remainder shrinks with N. The cutoff N is therefore chosen
// adaptively to sit near the minimum of the combined estimate.

#include "stieltjes/euler_constants.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "core/compensated.hpp"
#include "core/constants.hpp"
#include "core/errors.hpp"

namespace laurent {

namespace {

constexpr double kEps = 2.22e-16;

double ipow(double base, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

// Coefficient table for the derivatives of log^k(x)/x, rows d = 0..d_max.
std::vector<std::vector<double>> derivative_coefficients(int k, int d_max) {
  std::vector<std::vector<double>> c(d_max + 1, std::vector<double>(k + 1, 0.0));
  c[0][k] = 1.0;
  for (int d = 0; d < d_max; ++d) {
    for (int t = 0; t <= k; ++t) {
      double v = -(d + 1.0) * c[d][t];
      if (t + 1 <= k) v += (t + 1.0) * c[d][t + 1];
      c[d + 1][t] = v;
    }
  }
  return c;
}

// f^{(d)}(X) with |.|-summed variant alongside for a rounding estimate.
struct DerivativeValue {
  double value;
  double abs_sum;  // same polynomial with all coefficients made positive
};

DerivativeValue derivative_at(const std::vector<std::vector<double>>& c, int k,
                              int d, double x, double log_x) {
  double num = 0.0, abs_num = 0.0;
  for (int t = k; t >= 0; --t) {
    num = num * log_x + c[d][t];
    abs_num = abs_num * std::abs(log_x) + std::abs(c[d][t]);
  }
  const double denom = ipow(x, d + 1);
  return {num / denom, abs_num / denom};
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

struct EmOutcome {
  double value;
  double est;        // total absolute error estimate
};

EmOutcome em_evaluate(int k, double a, long n_cut, int p,
                      const std::vector<std::vector<double>>& coeffs) {
  CompensatedSum sum;
  double sum_abs = 0.0;
  for (long i = 0; i <= n_cut; ++i) {
    const double x = i + a;
    const double term = ipow(std::log(x), k) / x;
    sum.add(term);
    sum_abs += std::abs(term);
  }
  const double x_end = n_cut + a;
  const double log_x = std::log(x_end);
  const double anti = ipow(log_x, k + 1) / (k + 1);
  const double f_end = ipow(log_x, k) / x_end;

  CompensatedSum value;
  value.add(sum.value());
  value.add(-anti);
  value.add(-0.5 * f_end);
  double correction_rounding = 0.0;
  for (int j = 1; j <= p; ++j) {
    const int d = 2 * j - 1;
    const auto fd = derivative_at(coeffs, k, d, x_end, log_x);
    const double w = kBernoulliEven[j] / factorial(2 * j);
    value.add(-w * fd.value);
    correction_rounding += std::abs(w) * fd.abs_sum;
  }

  // First omitted Euler-Maclaurin term bounds the truncation remainder.
  const auto f_next = derivative_at(coeffs, k, 2 * p + 1, x_end, log_x);
  const double remainder =
      std::abs(kBernoulliEven[p + 1] / factorial(2 * p + 2) * f_next.value);
  // Every term carries a k-long ipow(log x, k) product, so the rounding
  // charge grows with k (calibrated against published gamma_k for k <= 10,
  // where the flat 2 eps model falls ~10% short of the true error).
  const double rounding =
      (2.0 + 0.2 * k) * kEps * (sum_abs + anti + correction_rounding);
  return {value.value(), remainder + rounding};
}

EulerConstant accelerated_limit(int k, double a, const SummationControl& ctl) {
  if (k < 0 || k > 20) {
    throw domain_error("euler constant: k must be in [0, 20] (correction terms outgrow binary64 beyond)");
  }
  if (!(a > 0.0) || a > 1.0) {
    throw domain_error("euler constant: a must satisfy 0 < a <= 1");
  }
  if (ctl.max_terms < 10) throw domain_error("SummationControl: max_terms must be >= 10");
  if (ctl.em_order < 0 || ctl.em_order > 10) {
    throw domain_error("SummationControl: em_order must be in [0, 10]");
  }
  if (!(ctl.target_abs_tol > 0.0)) {
    throw domain_error("SummationControl: target_abs_tol must be > 0");
  }

  const int p = ctl.em_order;
  const auto coeffs = derivative_coefficients(k, 2 * p + 1);

  // Geometric-ish cutoff ladder, clipped to the term budget.
  static constexpr long kLadder[] = {8,    12,   16,   24,   32,    48,    64,
                                     96,   128,  192,  256,  384,   512,   768,
                                     1024, 1536, 2048, 3072, 4096,  6144,  8192,
                                     12288, 16384, 24576, 32768, 49152, 65536, 98304};
  std::vector<long> ladder;
  const long n_max = ctl.max_terms - 1;
  for (long n : kLadder) {
    if (n <= n_max) ladder.push_back(n);
  }
  if (ladder.empty() || ladder.back() != n_max) ladder.push_back(n_max);

  EulerConstant best;
  best.abs_error_estimate = HUGE_VAL;
  int worse_in_a_row = 0;
  for (size_t idx = 0; idx < ladder.size(); ++idx) {
    const long n_cut = ladder[idx];
    const EmOutcome r = em_evaluate(k, a, n_cut, p, coeffs);
    if (r.est < best.abs_error_estimate) {
      best = {r.value, r.est, n_cut + 1};
      worse_in_a_row = 0;
    } else if (++worse_in_a_row >= 2) {
      break;  // estimate is deteriorating (rounding floor); stop escalating
    }
    if (r.est <= ctl.target_abs_tol) return best;
  }

  if (best.abs_error_estimate <= ctl.target_abs_tol) return best;
  char msg[160];
  std::snprintf(msg, sizeof(msg),
                "euler constant: tolerance %.3g unreachable within max_terms "
                "(best estimate %.3g)",
                ctl.target_abs_tol, best.abs_error_estimate);
  throw accuracy_error(msg, best.value, best.abs_error_estimate);
}

}  // namespace

EulerConstant stieltjes_constant(int k, const SummationControl& ctl) {
  // gamma_k = gamma_k(1): with a = 1 the i = 0 term log^k(1)/1 contributes
  // 1 for k = 0 and 0 otherwise, exactly matching the sum-from-1 definition.
  return accelerated_limit(k, 1.0, ctl);
}

EulerConstant hurwitz_euler_constant(int k, double a, const SummationControl& ctl) {
  return accelerated_limit(k, a, ctl);
}

}  // namespace laurent
