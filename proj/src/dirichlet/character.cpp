// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#include "dirichlet/character.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "core/errors.hpp"

namespace laurent {

namespace {

constexpr double kTableTol = 1e-12;
constexpr long kMaxModulus = 100000;
// Full O(q^2) multiplicativity checking is kept below this modulus; larger
// tables fall back to a fixed deterministic sample of pairs.
constexpr long kFullPairCheckLimit = 3000;

long mod_positive(long x, long m) { return ((x % m) + m) % m; }

std::complex<double> table_at(const std::vector<std::complex<double>>& v, long q, long r) {
  return v[(r == 0 ? q : r) - 1];
}

void validate(long q, const std::vector<std::complex<double>>& v) {
  if (q < 1) throw domain_error("character table invalid: modulus must be >= 1");
  if (static_cast<long>(v.size()) != q) {
    throw domain_error("character table invalid: expected exactly q values");
  }

  // Support and unit modulus.
  for (long a = 1; a <= q; ++a) {
    const bool coprime = std::gcd(a, q) == 1;
    const double mag = std::abs(v[a - 1]);
    if (!coprime && mag > kTableTol) {
      throw domain_error("character table invalid: support (chi(a) != 0 with gcd(a,q) > 1 at a=" +
                         std::to_string(a) + ")");
    }
    if (coprime && std::abs(mag - 1.0) > kTableTol) {
      throw domain_error("character table invalid: unit modulus (| |chi(a)| - 1 | > 1e-12 at a=" +
                         std::to_string(a) + ")");
    }
  }

  // Complete multiplicativity on coprime pairs.
  std::vector<long> coprimes;
  for (long a = 1; a <= q; ++a) {
    if (std::gcd(a, q) == 1) coprimes.push_back(a);
  }
  auto check_pair = [&](long a, long b) {
    const long ab = mod_positive(a * b, q);
    const std::complex<double> lhs = table_at(v, q, ab);
    const std::complex<double> rhs = v[a - 1] * v[b - 1];
    if (std::abs(lhs - rhs) > kTableTol) {
      throw domain_error("character table invalid: multiplicativity (chi(" + std::to_string(a) +
                         "*" + std::to_string(b) + ") != chi(" + std::to_string(a) + ")chi(" +
                         std::to_string(b) + "))");
    }
  };
  if (q <= kFullPairCheckLimit) {
    for (long a : coprimes) {
      for (long b : coprimes) {
        if (b > a) break;
        check_pair(a, b);
      }
    }
  } else {
    // Deterministic sample: all pairs with one small factor, plus an LCG walk.
    for (long a : coprimes) {
      if (a > 64) break;
      for (long b : coprimes) check_pair(a, b);
    }
    unsigned long state = 0x9e3779b97f4a7c15ULL ^ static_cast<unsigned long>(q);
    const long n = static_cast<long>(coprimes.size());
    for (int i = 0; i < 4000; ++i) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      const long a = coprimes[(state >> 33) % n];
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      const long b = coprimes[(state >> 33) % n];
      check_pair(a, b);
    }
  }

  // Non-principality: the values over one period must sum to zero.
  std::complex<double> total{0.0, 0.0};
  for (const auto& x : v) total += x;
  if (std::abs(total) > kTableTol * static_cast<double>(q)) {
    throw domain_error(
        "character table invalid: principal or non-character (values over one period sum to " +
        std::to_string(total.real()) + (total.imag() < 0 ? "-" : "+") +
        std::to_string(std::abs(total.imag())) + "i, expected 0)");
  }
}

}  // namespace

bool DirichletCharacter::is_real() const {
  for (const auto& x : values) {
    if (std::abs(x.imag()) > kTableTol) return false;
  }
  return true;
}

DirichletCharacter character_from_table(long q,
                                        const std::vector<std::complex<double>>& values,
                                        const std::string& label) {
  if (q > kMaxModulus) throw domain_error("character table invalid: modulus above 100000");
  validate(q, values);
  DirichletCharacter chi;
  chi.modulus = q;
  chi.values = values;
  chi.label = label.empty() ? ("chi mod " + std::to_string(q)) : label;
  return chi;
}

int kronecker_symbol(long d, long n) {
  if (n < 0) throw domain_error("kronecker_symbol: n must be >= 0");
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  if (d % 2 == 0 && n % 2 == 0) return 0;

  // (2/a) for odd a, indexed by a mod 8.
  static constexpr int kTab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
  auto mod8 = [](long x) { return static_cast<int>(((x % 8) + 8) % 8); };
  auto mod4 = [](long x) { return static_cast<int>(((x % 4) + 4) % 4); };

  long a = d, b = n;
  int k = 1;
  int v = 0;
  while (b % 2 == 0) {
    b /= 2;
    ++v;
  }
  if (v % 2 == 1) k = kTab2[mod8(a)];

  while (true) {
    if (a == 0) return (b > 1) ? 0 : k;
    v = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++v;
    }
    if (v % 2 == 1) k *= kTab2[mod8(b)];
    // Quadratic reciprocity flip for two odd operands both = 3 (mod 4).
    if (mod4(a) == 3 && mod4(b) == 3) k = -k;
    const long r = std::abs(a);
    a = b % r;
    b = r;
    if (b == 1) return k;
  }
}

DirichletCharacter kronecker_character(long d) {
  if (d == 0) throw domain_error("kronecker_character: d must be nonzero");
  const long q = std::abs(d);
  if (q > kMaxModulus) throw domain_error("kronecker_character: |d| above 100000");
  std::vector<std::complex<double>> v(q);
  for (long a = 1; a <= q; ++a) {
    v[a - 1] = {static_cast<double>(kronecker_symbol(d, a % q == 0 ? 0 : a)), 0.0};
  }
  return character_from_table(q, v, "kronecker(" + std::to_string(d) + ")");
}

DirichletCharacter character_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("character file: cannot open " + path);

  std::string line;
  long q = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string qtok, eq;
    if (!(ls >> qtok >> eq >> q) || qtok != "q" || eq != "=" || q < 1) {
      throw io_error("character file: expected header line 'q = <int>'");
    }
    break;
  }
  if (q < 1) throw io_error("character file: missing header line 'q = <int>'");
  if (q > kMaxModulus) throw domain_error("character table invalid: modulus above 100000");

  std::vector<std::complex<double>> v(q);
  std::vector<bool> seen(q, false);
  long rows = 0;
  while (rows < q && std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long a;
    double re, im;
    if (!(ls >> a >> re >> im)) {
      throw io_error("character file: expected row 'a re im', got '" + line + "'");
    }
    if (a < 1 || a > q) throw io_error("character file: residue out of range in '" + line + "'");
    if (seen[a - 1]) throw io_error("character file: duplicate residue " + std::to_string(a));
    seen[a - 1] = true;
    v[a - 1] = {re, im};
    ++rows;
  }
  if (rows != q) throw io_error("character file: expected " + std::to_string(q) + " rows");
  return character_from_table(q, v, path);
}

}  // namespace laurent
