// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace laurent {

// One computed-versus-reference comparison. provenance records where the
// reference number comes from: "paper" for published table values the
// library reproduces, "trivial" for exact mathematical identities, and
// "derived" for references produced by an independent oracle in this
// repository.
struct VerificationEntry {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  double abs_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string provenance = "derived";
};

struct VerificationReport {
  std::string suite;
  std::vector<VerificationEntry> entries;
  double runtime_ms = 0.0;

  bool all_passed() const;
};

// Convenience constructor: abs_err and pass from computed vs reference.
VerificationEntry make_entry(const std::string& name, double computed,
                             double reference, double tolerance,
                             const std::string& provenance);

// Stable-field-order JSON: {"suite": ..., "entries": [...], "runtime_ms": ...}
// with each entry serialized as {name, computed, reference, abs_err,
// tolerance, pass, provenance}.
std::string render_json(const VerificationReport& report);

// Fixed-width table with one PASS/FAIL line per entry and a summary footer.
std::string render_text(const VerificationReport& report);

}  // namespace laurent
