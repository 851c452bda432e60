// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "verify/report.hpp"

namespace laurent {

// Named verification suites:
//   paper-table          published Taylor coefficients of L(Delta, s) at s = 0,
//                        series method vs numerical differentiation
//   stieltjes            Stieltjes constants and zeta reconstruction
//   hurwitz              generalized Euler constants and Hurwitz identities
//   dirichlet            residue-class constants, L-function closed forms,
//                        periodic Abel-summation checks
//   cuspform-invariants  tau generator, W(y) transformation law, completed
//                        L-function, and the incomplete-gamma engine
//   all                  the five above concatenated
// Unknown names throw domain_error (the CLI maps that to a usage error).
VerificationReport run_suite(const std::string& name);

const std::vector<std::string>& suite_names();

}  // namespace laurent
