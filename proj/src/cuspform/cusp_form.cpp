// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#include "cuspform/cusp_form.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "core/compensated.hpp"
#include "core/constants.hpp"
#include "core/errors.hpp"
#include "cuspform/tau.hpp"

namespace laurent {

namespace {

constexpr long kMaxTerms = 100000;

// exp(-2 pi n y) becomes a hard zero past this exponent; later terms cannot
// contribute and the sum loop stops early.
constexpr double kUnderflowExponent = -745.0;

}  // namespace

double CuspForm::a(long n) const {
  if (n < 1) throw domain_error("CuspForm: coefficient index must be >= 1");
  if (!built_in_delta) {
    if (n > static_cast<long>(table.size())) {
      throw domain_error("CuspForm: coefficient index beyond the supplied table");
    }
    return table[n - 1];
  }
  if (n > kMaxTerms) {
    throw domain_error("CuspForm: tau generator supports n <= 100000");
  }
  if (n > static_cast<long>(delta_cache_.size())) {
    long grow = std::max<long>(n, 2 * static_cast<long>(delta_cache_.size()));
    grow = std::min(grow, kMaxTerms);
    const auto tau = delta_coefficients(grow);
    delta_cache_.assign(tau.size(), 0.0);
    for (size_t i = 0; i < tau.size(); ++i) {
      delta_cache_[i] = static_cast<double>(tau[i]);
    }
  }
  return delta_cache_[n - 1];
}

CuspForm delta_form() { return CuspForm{}; }

CuspForm cusp_form_from_coefficients(int weight, const std::vector<double>& coefficients,
                                     const std::string& label) {
  if (weight < 12 || weight % 2 != 0) {
    throw domain_error("cusp form: weight must be an even integer >= 12");
  }
  if (coefficients.empty() || coefficients[0] != 1.0) {
    throw domain_error("cusp form: normalization requires a(1) = 1");
  }
  CuspForm f;
  f.weight = weight;
  f.label = label;
  f.built_in_delta = false;
  f.table = coefficients;

  // User data may be rounded, so a bound violation is reported, not fatal.
  const double half = (weight - 1) / 2.0;
  for (long n = 1; n <= static_cast<long>(coefficients.size()); ++n) {
    const double bound = divisor_count(n) * std::pow(static_cast<double>(n), half);
    if (std::abs(coefficients[n - 1]) > bound * (1.0 + 1e-9)) {
      f.warnings.push_back("coefficient a(" + std::to_string(n) +
                           ") exceeds the Deligne bound d(n) n^{(k-1)/2}");
    }
  }
  return f;
}

CuspForm cusp_form_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cusp form file: cannot open " + path);

  int weight = 0;
  bool have_weight = false;
  std::vector<double> coeffs;
  long expected = 1;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    if (!have_weight) {
      std::string key;
      if (!(row >> key)) continue;  // blank line before the header
      if (key != "weight" || !(row >> weight)) {
        throw io_error("cusp form file: expected 'weight <k>' header at line " +
                       std::to_string(line_no));
      }
      have_weight = true;
      continue;
    }
    long n;
    double value;
    if (!(row >> n)) continue;  // blank line
    if (!(row >> value)) {
      throw io_error("cusp form file: malformed row at line " + std::to_string(line_no));
    }
    if (n != expected) {
      throw io_error("cusp form file: coefficients must be contiguous from n = 1 (line " +
                     std::to_string(line_no) + ")");
    }
    coeffs.push_back(value);
    ++expected;
  }
  if (!have_weight) throw io_error("cusp form file: missing 'weight <k>' header");
  if (coeffs.empty()) throw io_error("cusp form file: no coefficients");
  return cusp_form_from_coefficients(weight, coeffs, path);
}

double w_tail_bound(int weight, double y, long n_terms) {
  const double half = (weight + 1) / 2.0;  // d(n) n^{(k-1)/2} <= n^{(k+1)/2}
  const double n1 = static_cast<double>(n_terms + 1);
  const double ratio = std::pow(1.0 + 1.0 / n1, half) * std::exp(-kTwoPi * y);
  if (ratio >= 1.0) return HUGE_VAL;
  const double lead_exponent = half * std::log(n1) - kTwoPi * n1 * y;
  return std::exp(lead_exponent) / (1.0 - ratio);
}

long w_terms_for_tail(int weight, double y, double abs_target) {
  for (long n = 1; n <= kMaxTerms; n = (n < 16 ? n + 1 : n + n / 8)) {
    if (w_tail_bound(weight, y, n) <= abs_target) return n;
  }
  throw accuracy_error("W(y): envelope tail still above target at 100000 terms", 0.0,
                       w_tail_bound(weight, y, kMaxTerms));
}

double w_value(double y, const CuspForm& f, long n_terms) {
  if (!(y > 0.0)) throw domain_error("w_value: y must be > 0");
  if (n_terms < 1 || n_terms > kMaxTerms) {
    throw domain_error("w_value: n_terms must be in [1, 100000]");
  }

  CompensatedSum sum;
  for (long n = 1; n <= n_terms; ++n) {
    const double exponent = -kTwoPi * n * y;
    if (exponent < kUnderflowExponent) break;
    sum.add(f.a(n) * std::exp(exponent));
  }
  const double partial = sum.value();

  const double tail = w_tail_bound(f.weight, y, n_terms);
  if (tail > 1e-16 * std::abs(partial)) {
    long needed = kMaxTerms;
    for (long n = n_terms; n <= kMaxTerms; ++n) {
      if (w_tail_bound(f.weight, y, n) <= 1e-16 * std::abs(partial)) {
        needed = n;
        break;
      }
    }
    throw accuracy_error("w_value: tail bound above 1e-16 of the partial sum, need about " +
                             std::to_string(needed) + " terms",
                         partial, tail);
  }
  return partial;
}

double functional_equation_residual(double y, const CuspForm& f) {
  if (!(y > 0.0)) throw domain_error("functional_equation_residual: y must be > 0");

  const auto side = [&f](double point) {
    long n = w_terms_for_tail(f.weight, point, 1e-18);
    // w_value also enforces its relative gate, which can ask for more terms
    // than the absolute target did when W(point) is small. e^{-2 pi y}/1000
    // underestimates |W| for any point where the series is not dominated by
    // cancellation, so the gate is sized generously in advance.
    n = std::max(n, w_terms_for_tail(f.weight, point,
                                     1e-19 * std::exp(-kTwoPi * point)));
    return w_value(point, f, n);
  };

  const double scaled = std::pow(y, f.weight) * side(y);
  return std::abs(scaled - side(1.0 / y));
}

}  // namespace laurent
