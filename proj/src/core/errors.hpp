// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace laurent {

// Argument outside an operation's documented domain (e.g. a <= 0, k > 20).
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Requested accuracy could not be met within the configured work limits.
// Carries the best value obtained and an estimate of its absolute error so
// callers can decide whether the degraded result is still usable.
struct accuracy_error : std::runtime_error {
  double best_value;
  double error_estimate;
  accuracy_error(const std::string& what, double best, double estimate)
      : std::runtime_error(what), best_value(best), error_estimate(estimate) {}
};

// File ingestion failure (missing file, malformed header, bad row).
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace laurent
