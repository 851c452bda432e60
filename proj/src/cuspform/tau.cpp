// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#include "cuspform/tau.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

#include "core/errors.hpp"

namespace laurent {

namespace {

// Generalized pentagonal offsets g = j(3j -+ 1)/2 with sign (-1)^j, the
// nonzero exponents of prod_{m>=1} (1 - q^m). Offset 0 (coefficient 1) is
// included so the list is directly usable as a sparse multiplier.
std::vector<std::pair<long, int>> pentagonal_terms(long len) {
  std::vector<std::pair<long, int>> terms{{0, 1}};
  for (long j = 1;; ++j) {
    const long g1 = j * (3 * j - 1) / 2;
    const long g2 = j * (3 * j + 1) / 2;
    const int sign = (j % 2 == 0) ? 1 : -1;
    if (g1 >= len && g2 >= len) break;
    if (g1 < len) terms.emplace_back(g1, sign);
    if (g2 < len) terms.emplace_back(g2, sign);
  }
  return terms;
}

std::vector<long long> eta_dense(long len,
                                 const std::vector<std::pair<long, int>>& terms) {
  std::vector<long long> e(len, 0);
  for (const auto& [g, sign] : terms) e[g] = sign;
  return e;
}

std::vector<long long> square_narrow(const std::vector<long long>& a) {
  const long len = static_cast<long>(a.size());
  std::vector<long long> c(len, 0);
  for (long m = 0; m < len; ++m) {
    WideInt acc = 0;
    for (long i = 0; 2 * i < m; ++i) acc += static_cast<WideInt>(a[i]) * a[m - i];
    acc *= 2;
    if (m % 2 == 0) acc += static_cast<WideInt>(a[m / 2]) * a[m / 2];
    if (acc > std::numeric_limits<long long>::max() ||
        acc < std::numeric_limits<long long>::min()) {
      throw std::overflow_error("eta power coefficient exceeds 64 bits");
    }
    c[m] = static_cast<long long>(acc);
  }
  return c;
}

std::vector<WideInt> square_wide(const std::vector<long long>& a) {
  const long len = static_cast<long>(a.size());
  std::vector<WideInt> c(len, 0);
  for (long m = 0; m < len; ++m) {
    WideInt acc = 0;
    for (long i = 0; 2 * i < m; ++i) acc += static_cast<WideInt>(a[i]) * a[m - i];
    acc *= 2;
    if (m % 2 == 0) acc += static_cast<WideInt>(a[m / 2]) * a[m / 2];
    c[m] = acc;
  }
  return c;
}

template <typename Int>
std::vector<Int> sparse_multiply(const std::vector<Int>& a,
                                 const std::vector<std::pair<long, int>>& terms) {
  const long len = static_cast<long>(a.size());
  std::vector<Int> c(len, 0);
  for (const auto& [g, sign] : terms) {
    if (sign > 0) {
      for (long m = g; m < len; ++m) c[m] += a[m - g];
    } else {
      for (long m = g; m < len; ++m) c[m] -= a[m - g];
    }
  }
  return c;
}

void check_n_max(long n_max) {
  if (n_max < 1 || n_max > 100000) {
    throw domain_error("tau: n_max must be in [1, 100000]");
  }
}

}  // namespace

std::string wide_int_to_string(WideInt v) {
  const bool negative = v < 0;
  unsigned __int128 u =
      negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string digits;
  do {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  } while (u != 0);
  return negative ? "-" + digits : digits;
}

std::vector<WideInt> delta_coefficients(long n_max) {
  check_n_max(n_max);
  const long len = n_max;  // degrees 0..n_max-1 of the eta product; tau(n) sits at n-1
  const auto terms = pentagonal_terms(len);
  const auto e1 = eta_dense(len, terms);
  const auto e3 = sparse_multiply(square_narrow(e1), terms);
  const auto e12 = square_narrow(square_narrow(e3));
  return square_wide(e12);
}

std::vector<WideInt> tau_by_repeated_multiplication(long n_max) {
  check_n_max(n_max);
  const auto terms = pentagonal_terms(n_max);
  std::vector<WideInt> r(n_max, 0);
  r[0] = 1;
  for (int pass = 0; pass < 24; ++pass) r = sparse_multiply(r, terms);
  return r;
}

long divisor_count(long n) {
  if (n < 1) throw domain_error("divisor_count: n must be >= 1");
  long count = 0;
  for (long i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    count += (i * i == n) ? 1 : 2;
  }
  return count;
}

long deligne_first_violation(long n_max) {
  if (n_max < 1 || n_max > 1500) {
    throw domain_error("deligne_first_violation: n_max must be in [1, 1500]");
  }
  const auto tau = delta_coefficients(n_max);
  for (long n = 1; n <= n_max; ++n) {
    const WideInt t = tau[n - 1];
    const WideInt d = divisor_count(n);
    WideInt envelope = d * d;
    for (int i = 0; i < 11; ++i) envelope *= n;
    if (t * t > envelope) return n;
  }
  return 0;
}

}  // namespace laurent
