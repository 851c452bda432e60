// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#include "specfun/incomplete_gamma.hpp"

#include <cmath>

#include "core/compensated.hpp"
#include "core/constants.hpp"
#include "core/errors.hpp"

namespace laurent {

namespace {

constexpr double kEps = 2.22e-16;
constexpr double kE1SeriesCrossover = 1.2;

bool is_positive_integer(double s) {
  return s >= 1.0 && s <= 170.0 && s == std::floor(s);
}

// Gamma(k, a) = (k-1)! e^{-a} sum_{j=0}^{k-1} a^j/j!, exact up to rounding.
// All terms are positive, so there is no cancellation and the error is a few
// ulp. When e^{-a} underflows, each term is formed in log space instead.
IncompleteGammaResult closed_form_integer(int k, double a) {
  CompensatedSum sum;
  const double e = std::exp(-a);
  if (e > 0.0) {
    double term = e;
    sum.add(term);
    for (int j = 1; j < k; ++j) {
      term *= a / j;
      sum.add(term);
    }
  } else {
    const double la = std::log(a);
    for (int j = 0; j < k; ++j) {
      sum.add(std::exp(-a + j * la - std::lgamma(j + 1.0)));
    }
  }
  IncompleteGammaResult r;
  r.value = std::tgamma(static_cast<double>(k)) * sum.value();
  r.abs_error_estimate = 8.0 * kEps * r.value + 1e-300;
  r.method = GammaMethod::closed_form_finite_sum;
  return r;
}

// Legendre continued fraction for Gamma(s, a) by the modified Lentz method:
//   Gamma(s, a) = e^{-a} a^s * 1/(a+1-s - 1(1-s)/(a+3-s - 2(2-s)/(...)))
// Reliable for a > s+1 (and for s = 0, giving E1). See DLMF 8.9.2.
IncompleteGammaResult continued_fraction(double s, double a) {
  constexpr double kTiny = 1e-300;
  constexpr int kMaxIter = 300;
  double b = a + 1.0 - s;
  double c = 1.0 / kTiny;
  double d = 1.0 / (b == 0.0 ? kTiny : b);
  double h = d;
  int it = 1;
  for (; it <= kMaxIter; ++it) {
    const double an = -it * (it - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) <= kEps) break;
  }
  const double arg = -a + s * std::log(a);
  const double value = std::exp(arg) * h;
  if (it > kMaxIter) {
    throw accuracy_error("incomplete gamma: continued fraction did not converge",
                         value, std::abs(value) * 1e-8);
  }
  IncompleteGammaResult r;
  r.value = value;
  // exp(arg) carries relative error ~ eps * |arg| from the rounded argument,
  // on top of the fraction's own convergence tolerance.
  r.abs_error_estimate = std::abs(value) * (kEps * (std::abs(arg) + 2.0) + 1e-15);
  r.method = GammaMethod::continued_fraction;
  return r;
}

}  // namespace

IncompleteGammaResult upper_incomplete_gamma_by_quadrature(double s, double a,
                                                           const QuadratureSpec& spec) {
  if (!(a > 0.0)) {
    throw domain_error("upper_incomplete_gamma_by_quadrature: a must be > 0");
  }
  const auto q = integrate_semi_infinite(
      [s](double y) { return std::exp((s - 1.0) * std::log(y) - y); }, a, spec);
  IncompleteGammaResult r;
  r.value = q.value;
  r.abs_error_estimate = q.abs_error_estimate + kEps * std::abs(q.value);
  r.method = GammaMethod::quadrature;
  return r;
}

double complete_gamma(double s) {
  if (!(s > 0.0)) throw domain_error("complete_gamma: s must be > 0");
  return std::tgamma(s);
}

IncompleteGammaResult upper_incomplete_gamma(double s, double a,
                                             const QuadratureSpec& spec) {
  if (!(a > 0.0)) throw domain_error("upper_incomplete_gamma: a must be > 0");
  if (s == 0.0) return exp_integral_e1(a);
  if (is_positive_integer(s)) return closed_form_integer(static_cast<int>(s), a);
  if (a > s + 1.0 && a >= 0.7) return continued_fraction(s, a);
  return upper_incomplete_gamma_by_quadrature(s, a, spec);
}

IncompleteGammaResult exp_integral_e1(double a) {
  if (!(a > 0.0)) throw domain_error("exp_integral_e1: a must be > 0");
  if (a >= kE1SeriesCrossover) return continued_fraction(0.0, a);

  // E1(a) = -gamma - log a + sum_{n>=1} (-1)^{n+1} a^n/(n n!), DLMF 6.6.2.
  CompensatedSum sum;
  sum.add(-kEulerGamma);
  sum.add(-std::log(a));
  double p = 1.0;  // a^n / n!
  double last = 0.0;
  for (int n = 1; n <= 40; ++n) {
    p *= a / n;
    last = p / n;
    sum.add((n % 2 == 1) ? last : -last);
    if (last < 1e-18) break;
  }
  IncompleteGammaResult r;
  r.value = sum.value();
  r.abs_error_estimate = last + 4.0 * kEps * (kEulerGamma + std::abs(std::log(a)) + 1.0);
  r.method = GammaMethod::closed_form_finite_sum;
  return r;
}

IncompleteGammaResult log_weighted_incomplete_gamma(int ell, double s, double a,
                                                    const QuadratureSpec& spec) {
  if (ell < 0) throw domain_error("log_weighted_incomplete_gamma: ell must be >= 0");
  if (!(a > 0.0)) throw domain_error("log_weighted_incomplete_gamma: a must be > 0");
  if (ell == 0) return upper_incomplete_gamma(s, a, spec);

  const auto q = integrate_semi_infinite(
      [s, ell](double y) {
        const double ly = std::log(y);
        return std::exp((s - 1.0) * ly - y) * std::pow(ly, ell);
      },
      a, spec);
  IncompleteGammaResult r;
  r.value = q.value;
  r.abs_error_estimate = q.abs_error_estimate + kEps * std::abs(q.value);
  r.method = GammaMethod::quadrature;
  return r;
}

}  // namespace laurent
