// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace laurent {

// A Dirichlet character mod q as a validated value table. values[a-1] holds
// chi(a) for a = 1..q, with index q standing for residue 0. Construction
// enforces, each within 1e-12:
//   - support:          chi(a) = 0 exactly when gcd(a, q) > 1
//   - unit modulus:     |chi(a)| = 1 on the coprime residues
//   - multiplicativity: chi(ab mod q) = chi(a) chi(b) for coprime pairs
//   - non-principal:    sum_a chi(a) = 0
// Principal characters are rejected (the L-series identities implemented here
// require the character sums over a period to vanish).
struct DirichletCharacter {
  long modulus = 0;
  std::vector<std::complex<double>> values;
  std::string label;

  std::complex<double> at(long n) const {  // chi(n) for any n >= 0, by periodicity
    long r = n % modulus;
    return values[(r == 0 ? modulus : r) - 1];
  }
  bool is_real() const;
};

// Validates a raw table; throws domain_error naming the violated invariant.
DirichletCharacter character_from_table(long q,
                                        const std::vector<std::complex<double>>& values,
                                        const std::string& label = "");

// Kronecker symbol (d/n), computed by the standard binary-reciprocity
// algorithm (Cohen, "A Course in Computational Algebraic Number Theory",
// Algorithm 1.4.10). Defined for all integers d, n with n >= 0 here.
int kronecker_symbol(long d, long n);

// The real character chi(a) = (d/a) of modulus |d|. Only fundamental
// discriminants yield a character of period |d|; anything else fails table
// validation (multiplicativity or periodicity breaks) and is rejected.
DirichletCharacter kronecker_character(long d);

// Parses the character table format: a line "q = <int>" followed by q lines
// "a re im" (a = 1..q in any order, each exactly once). Throws io_error on
// malformed input and domain_error if the parsed table fails validation.
DirichletCharacter character_from_file(const std::string& path);

}  // namespace laurent
