// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace laurent {

// Normalized cusp form of even weight >= 12 on the full modular group,
// represented by its Fourier coefficients a(1) = 1, a(2), ... Either the
// built-in discriminant form Delta (weight 12, a(n) = tau(n), generated
// exactly on demand) or a user-supplied finite coefficient table.
struct CuspForm {
  int weight = 12;
  std::string label = "Delta";
  bool built_in_delta = true;
  std::vector<double> table;  // user coefficients a(1..table.size()) when not built-in

  // Deligne-bound violations and similar non-fatal data issues found at
  // construction. User tables are often rounded, so these warn, not reject.
  std::vector<std::string> warnings;

  // a(n), extending the tau cache as needed for the built-in form. Throws
  // domain_error for n < 1, for n beyond a user table, or past the exact
  // tau generator's range (n > 100000).
  double a(long n) const;

 private:
  mutable std::vector<double> delta_cache_;
};

CuspForm delta_form();

// Validates weight (even, >= 12) and normalization (a(1) = 1) and attaches
// Deligne-bound warnings for any |a(n)| > d(n) n^{(k-1)/2}.
CuspForm cusp_form_from_coefficients(int weight, const std::vector<double>& coefficients,
                                     const std::string& label = "f");

// Text format: optional '#' comment lines, a "weight <k>" header, then one
// "n a_n" pair per line, contiguous from n = 1.
CuspForm cusp_form_from_file(const std::string& path);

// W(y) = sum_{n>=1} a(n) e^{-2 pi n y}, truncated at n_terms. The tail beyond
// n_terms is bounded through the Deligne envelope d(n) n^{(k-1)/2} <=
// n^{(k+1)/2} summed geometrically; if that bound exceeds 1e-16 of the
// partial sum the call fails with the term count that would suffice.
double w_value(double y, const CuspForm& f, long n_terms);

// |y^k W(y) - W(1/y)|, the defect in the modular transformation of W. Both
// evaluations pick their own term counts so the envelope tail is <= 1e-18
// absolute; the transformation is exact, so the result is pure rounding.
double functional_equation_residual(double y, const CuspForm& f);

// Smallest term count whose envelope tail bound is <= abs_target, used to
// size W sums. Throws accuracy_error if 100000 terms do not suffice.
long w_terms_for_tail(int weight, double y, double abs_target);

// Envelope tail bound itself: sum_{n > n_terms} n^{(k+1)/2} e^{-2 pi n y}
// bounded by its first term over 1 - ratio. Infinite if the ratio is >= 1.
double w_tail_bound(int weight, double y, long n_terms);

}  // namespace laurent
