// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#include "cuspform/l_series.hpp"

#include <cmath>
#include <utility>

#include "core/compensated.hpp"
#include "core/constants.hpp"
#include "core/errors.hpp"
#include "cuspform/tau.hpp"
#include "specfun/gamma_series.hpp"
#include "specfun/incomplete_gamma.hpp"
#include "specfun/quadrature.hpp"

namespace laurent {

namespace {

constexpr double kEps = 2.22e-16;

double ipow(double base, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

double binomial(int n, int j) {
  double r = 1.0;
  for (int i = 1; i <= j; ++i) r = r * (n - j + i) / i;
  return r;
}

// W(y) sized for absolute truncation error ~1e-17 e^{-2 pi y}, i.e. ~1e-17
// relative to the leading Fourier term. Identically zero once e^{-2 pi y}
// underflows, which also short-circuits the callers' power factors.
double w_adaptive(double y, const CuspForm& f) {
  const double exponent = -kTwoPi * y;
  if (exponent < -700.0) return 0.0;
  const long n = w_terms_for_tail(f.weight, y, 1e-17 * std::exp(exponent));
  return w_value(y, f, n);
}

// The Fourier m-sum of every A(n,k) drops terms beyond n_terms whose bracket
// is under e^{-2 pi m} once 2 pi m > k + n + 3 (log y <= y bounds the
// integrand by y^{k+n-1} e^{-2 pi m y}); this is the smallest cutoff for
// which that envelope argument holds.
long min_fourier_terms(int weight, int n) {
  const long geometric = static_cast<long>(std::ceil((weight + n + 3) / kTwoPi)) + 1;
  return std::max<long>(8, geometric);
}

struct ASum {
  double value = 0.0;
  double abs_error = 0.0;
};

// A(0..n_max, k) in one pass over the Fourier index so the per-m incomplete
// gammas Gamma_j(k, 2 pi m) and Gamma_j(0, 2 pi m) are computed once each.
std::vector<ASum> a_coefficients_up_to(int n_max, const CuspForm& f, long n_terms) {
  if (n_max < 0 || n_max > 12) {
    throw domain_error("a_coefficient: n must be in [0, 12]");
  }
  if (n_terms < min_fourier_terms(f.weight, n_max) || n_terms > 100000) {
    throw domain_error("a_coefficient: n_terms too small for the tail bound (need >= " +
                       std::to_string(min_fourier_terms(f.weight, n_max)) + ")");
  }

  const int k = f.weight;
  std::vector<CompensatedSum> sums(n_max + 1);
  std::vector<double> errors(n_max + 1, 0.0);
  std::vector<double> abs_mass(n_max + 1, 0.0);  // for the rounding estimate

  std::vector<IncompleteGammaResult> gk(n_max + 1), g0(n_max + 1);
  for (long m = 1; m <= n_terms; ++m) {
    const double am = f.a(m);
    const double arg = kTwoPi * m;
    const double neg_log = -std::log(arg);
    const double scale_k = std::pow(arg, -k);
    for (int j = 0; j <= n_max; ++j) {
      gk[j] = log_weighted_incomplete_gamma(j, static_cast<double>(k), arg);
      g0[j] = log_weighted_incomplete_gamma(j, 0.0, arg);
    }
    for (int n = 0; n <= n_max; ++n) {
      const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
      double s_k = 0.0, s_0 = 0.0, e_k = 0.0, e_0 = 0.0;
      for (int j = n; j >= 0; --j) {
        const double w = binomial(n, j) * ipow(neg_log, n - j);
        s_k += w * gk[j].value;
        s_0 += w * g0[j].value;
        e_k += std::abs(w) * (gk[j].abs_error_estimate + kEps * std::abs(gk[j].value));
        e_0 += std::abs(w) * (g0[j].abs_error_estimate + kEps * std::abs(g0[j].value));
      }
      const double term = am * (sign_n * scale_k * s_k + s_0);
      sums[n].add(term);
      errors[n] += std::abs(am) * (scale_k * e_k + e_0);
      abs_mass[n] += std::abs(term);
    }
  }

  const double tail = w_tail_bound(k, 1.0, n_terms);
  std::vector<ASum> out(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    out[n].value = sums[n].value();
    out[n].abs_error = errors[n] + tail + 2.0 * kEps * abs_mass[n];
  }
  return out;
}

}  // namespace

double a_coefficient(int n, const CuspForm& f, long n_terms) {
  return a_coefficients_up_to(n, f, n_terms)[n].value;
}

double a_coefficient_by_quadrature(int n, const CuspForm& f) {
  if (n < 0 || n > 12) {
    throw domain_error("a_coefficient_by_quadrature: n must be in [0, 12]");
  }
  const int k = f.weight;
  const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
  const auto integrand = [&](double y) {
    const double w = w_adaptive(y, f);
    if (w == 0.0) return 0.0;
    const double ly = std::log(y);
    return w / y * (sign_n * std::exp(k * ly) + 1.0) * ipow(ly, n);
  };
  QuadratureSpec spec;
  spec.rel_tolerance = 1e-14;
  return integrate_semi_infinite(integrand, 1.0, spec).value;
}

double c_coefficient(int n, const CuspForm& f, long n_terms) {
  if (n < 1 || n > 8) throw domain_error("c_coefficient: n must be in [1, 8]");
  const auto a = a_coefficients_up_to(n - 1, f, n_terms);
  const auto b = b_coefficients(n);
  std::vector<double> factorial(n + 1, 1.0);
  for (int i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;

  // j = n first so C(1,k) = A(0,k) and the convolution adds nothing else.
  CompensatedSum acc;
  for (int j = n; j >= 1; --j) {
    acc.add(a[n - j].value / factorial[n - j] * (b[j - 1] / factorial[j]));
  }
  return acc.value();
}

CuspFormLaurent laurent_cuspform(const CuspForm& f, int n_orders, long n_terms) {
  if (n_orders < 1 || n_orders > 8) {
    throw domain_error("laurent_cuspform: n_orders must be in [1, 8]");
  }
  const auto a = a_coefficients_up_to(n_orders - 1, f, n_terms);
  const auto b = b_coefficients(n_orders);
  std::vector<double> factorial(n_orders + 1, 1.0);
  for (int i = 1; i <= n_orders; ++i) factorial[i] = factorial[i - 1] * i;

  CuspFormLaurent out;
  out.terms_used = n_terms;
  out.term_tail_bound = w_tail_bound(f.weight, 1.0, n_terms);
  for (int n = 1; n <= n_orders; ++n) {
    CompensatedSum acc;
    double err = 0.0;
    for (int j = n; j >= 1; --j) {
      const double weight = b[j - 1] / factorial[j];
      acc.add(a[n - j].value / factorial[n - j] * weight);
      err += a[n - j].abs_error / factorial[n - j] * std::abs(weight);
    }
    out.orders.push_back(acc.value());
    out.order_error_bounds.push_back(err + 2.0 * kEps * std::abs(acc.value()));
  }
  return out;
}

double completed_l_integral(double s, const CuspForm& f) {
  if (!(s >= -30.0 && s <= 30.0)) {
    throw domain_error("completed_l_integral: s must be in [-30, 30]");
  }
  const int k = f.weight;
  const auto integrand = [&](double y) {
    const double w = w_adaptive(y, f);
    if (w == 0.0) return 0.0;
    const double ly = std::log(y);
    return w * (std::exp((k - 1 - s) * ly) + std::exp((s - 1) * ly));
  };
  QuadratureSpec spec;
  spec.rel_tolerance = 1e-13;
  return integrate_semi_infinite(integrand, 1.0, spec).value;
}

double l_f_direct(double s, const CuspForm& f) {
  if (!(s >= -30.0 && s <= 30.0)) {
    throw domain_error("l_f_direct: s must be in [-30, 30]");
  }
  // Trivial zeros: 1/Gamma(s) vanishes while the integral stays finite.
  if (s <= 0.0 && s == std::round(s)) return 0.0;
  const double factor = std::exp(s * kLog2Pi) * reciprocal_gamma(s);
  return factor * completed_l_integral(s, f);
}

}  // namespace laurent
