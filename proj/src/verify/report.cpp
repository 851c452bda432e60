// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#include "verify/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace laurent {

bool VerificationReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const VerificationEntry& e) { return e.pass; });
}

VerificationEntry make_entry(const std::string& name, double computed,
                             double reference, double tolerance,
                             const std::string& provenance) {
  VerificationEntry e;
  e.name = name;
  e.computed = computed;
  e.reference = reference;
  e.abs_err = std::abs(computed - reference);
  e.tolerance = tolerance;
  e.pass = e.abs_err <= tolerance;  // NaN compares false, so NaN fails
  e.provenance = provenance;
  return e;
}

std::string render_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json entry;
    entry["name"] = e.name;
    entry["computed"] = e.computed;
    entry["reference"] = e.reference;
    entry["abs_err"] = e.abs_err;
    entry["tolerance"] = e.tolerance;
    entry["pass"] = e.pass;
    entry["provenance"] = e.provenance;
    j["entries"].push_back(entry);
  }
  j["runtime_ms"] = report.runtime_ms;
  return j.dump(2) + "\n";
}

std::string render_text(const VerificationReport& report) {
  std::string out = "suite " + report.suite + "\n";
  char line[320];
  size_t passed = 0;
  for (const auto& e : report.entries) {
    if (e.pass) ++passed;
    std::snprintf(line, sizeof(line),
                  "[%s] %-44s computed=%-24.17g reference=%-24.17g |err|=%-10.3g "
                  "tol=%-10.3g %s\n",
                  e.pass ? "PASS" : "FAIL", e.name.c_str(), e.computed, e.reference,
                  e.abs_err, e.tolerance, e.provenance.c_str());
    out += line;
  }
  std::snprintf(line, sizeof(line), "%zu/%zu passed, runtime %.1f ms\n", passed,
                report.entries.size(), report.runtime_ms);
  out += line;
  return out;
}

}  // namespace laurent
