// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

namespace laurent {

// Neumaier's variant of Kahan compensated summation. Unlike plain Kahan it
// stays accurate when an addend exceeds the running sum in magnitude, which
// happens in several of our series (log-weighted terms peak mid-stream).
//
// Canonical results throughout the library are defined by serial
// left-to-right accumulation with this class, so identical inputs produce
// bit-identical sums regardless of build host or thread count.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace laurent
