// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

// Drives the installed CLI binary as a subprocess and checks the outward
// contract: output formats, exit codes, determinism, and the environment
// ceiling. LAURENT_CLI_PATH is injected by the build so the test always runs
// the binary it was built with.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "reference_data.hpp"

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;       // stdout
  std::string diagnostics;  // stderr
};

int g_stderr_counter = 0;

// Runs `<cli> args` through the shell with stderr siphoned to a scratch file
// so stdout stays byte-exact for the determinism checks. `prefix` lets a test
// set environment variables for the child.
CommandResult run_cli(const std::string& args, const std::string& prefix = "") {
  const std::string err_path =
      "/tmp/laurent_cli_test_stderr_" + std::to_string(g_stderr_counter++);
  const std::string cmd =
      prefix + std::string(LAURENT_CLI_PATH) + " " + args + " 2>" + err_path;
  CommandResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_path);
  std::stringstream ss;
  ss << err.rdbuf();
  result.diagnostics = ss.str();
  std::remove(err_path.c_str());
  return result;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = "/tmp/laurent_cli_test_" + name;
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("stieltjes csv output") {
  const CommandResult r = run_cli("stieltjes --k 0..3 --format csv");
  REQUIRE(r.exit_code == 0);
  const auto lines = split_lines(r.output);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "k,value,abs_error_bound");
  for (int k = 0; k <= 3; ++k) {
    const auto fields = split_fields(lines[k + 1]);
    REQUIRE(fields.size() == 3);
    CHECK(fields[0] == std::to_string(k));
    CHECK(std::abs(std::stod(fields[1]) - testref::kStieltjes[k]) <= 1e-12);
    CHECK(std::stod(fields[2]) <= 1e-12);
  }
}

TEST_CASE("json output round-trips and carries resolved parameters") {
  const CommandResult r = run_cli("stieltjes --k 0..1 --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.output);
  CHECK(doc["command"] == "stieltjes");
  CHECK(doc["params"]["k"] == "0..1");
  CHECK(doc["params"]["terms"] == 100000);
  CHECK(doc["params"]["tol"] == 1e-12);
  REQUIRE(doc["results"].size() == 2);
  CHECK(doc["results"][0]["name"] == "gamma_0");
  CHECK(std::abs(doc["results"][0]["value"].get<double>() - testref::kGamma) <= 1e-12);
  CHECK(doc["results"][0]["abs_error_bound"].get<double>() > 0.0);
}

TEST_CASE("single value is a degenerate range") {
  const CommandResult r = run_cli("stieltjes --k 2 --format csv");
  REQUIRE(r.exit_code == 0);
  const auto lines = split_lines(r.output);
  REQUIRE(lines.size() == 2);
  CHECK(std::abs(std::stod(split_fields(lines[1])[1]) - testref::kStieltjes[2]) <=
        1e-12);
}

TEST_CASE("hurwitz and residue text output name the parameters") {
  const CommandResult h = run_cli("hurwitz --k 0 --a 0.25");
  REQUIRE(h.exit_code == 0);
  CHECK(h.output.find("gamma_0(0.25)") != std::string::npos);

  const CommandResult res = run_cli("residue --k 0..1 --a 1 --q 4 --format csv");
  REQUIRE(res.exit_code == 0);
  const auto lines = split_lines(res.output);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "k,a,q,value,abs_error_bound");
  CHECK(split_fields(lines[1])[2] == "4");
}

TEST_CASE("dirichlet by kronecker discriminant") {
  const CommandResult r = run_cli("dirichlet --kronecker -4 --k 0..1 --format csv");
  REQUIRE(r.exit_code == 0);
  const auto lines = split_lines(r.output);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "k,value_re,value_im,abs_error_bound");
  const auto row0 = split_fields(lines[1]);
  CHECK(std::abs(std::stod(row0[1]) - testref::kLChi4At1) <= 1e-11);
  CHECK(std::abs(std::stod(row0[2])) <= 1e-11);
  const auto row1 = split_fields(lines[2]);
  CHECK(std::abs(std::stod(row1[1]) - testref::kGamma1Chi4) <= 1e-11);

  // JSON publishes complex values as [re, im] pairs.
  const CommandResult j = run_cli("dirichlet --kronecker -4 --k 0 --format json");
  REQUIRE(j.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(j.output);
  CHECK(doc["params"]["character"] == "kronecker(-4)");
  REQUIRE(doc["results"][0]["value"].is_array());
  CHECK(std::abs(doc["results"][0]["value"][0].get<double>() - testref::kLChi4At1) <=
        1e-11);
}

TEST_CASE("dirichlet character files, good and bad") {
  const std::string good =
      write_temp("chi4.txt", "q = 4\n1 1 0\n2 0 0\n3 -1 0\n4 0 0\n");
  const CommandResult ok = run_cli("dirichlet --char-file " + good +
                                   " --k 0 --format csv");
  REQUIRE(ok.exit_code == 0);
  CHECK(std::abs(std::stod(split_fields(split_lines(ok.output)[1])[1]) -
                 testref::kLChi4At1) <= 1e-11);

  const std::string bad =
      write_temp("chi_principal.txt", "q = 4\n1 1 0\n2 0 0\n3 1 0\n4 0 0\n");
  const CommandResult rejected = run_cli("dirichlet --char-file " + bad + " --k 0");
  CHECK(rejected.exit_code == 1);
  CHECK(rejected.diagnostics.find("principal or non-character") != std::string::npos);

  const CommandResult both =
      run_cli("dirichlet --kronecker -4 --char-file " + good + " --k 0");
  CHECK(both.exit_code == 1);
  const CommandResult neither = run_cli("dirichlet --k 0");
  CHECK(neither.exit_code == 1);
}

TEST_CASE("cuspform table output") {
  const CommandResult r = run_cli("cuspform --delta --orders 2 --terms 30");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("weight 12") != std::string::npos);
  CHECK(r.output.find("30 series terms") != std::string::npos);
  CHECK(r.output.find("C(n,12) (series)") != std::string::npos);
  // Both columns carry the shared leading digits of C(1,12).
  CHECK(r.output.find("0.010486273129241") != std::string::npos);
  CHECK(r.output.find("0.018945049072") != std::string::npos);

  const CommandResult csv = run_cli("cuspform --delta --orders 3 --format csv");
  REQUIRE(csv.exit_code == 0);
  const auto lines = split_lines(csv.output);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "n,series_value,series_abs_error_bound,derivative_value");
  CHECK(std::abs(std::stod(split_fields(lines[1])[1]) - testref::kC12[0]) <= 1e-15);
  // The central-difference column stops after order 2.
  CHECK(split_fields(lines[3]).size() == 3);

  const CommandResult json = run_cli("cuspform --delta --orders 2 --format json");
  REQUIRE(json.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(json.output);
  CHECK(doc["command"] == "cuspform");
  CHECK(doc["results"].size() == 4);  // 2 series orders + 2 derivative values
}

TEST_CASE("cuspform coefficient files") {
  std::string body = "weight 12\n";
  for (int n = 1; n <= 12; ++n) {
    body += std::to_string(n) + " " + std::to_string(testref::kTau[n - 1]) + "\n";
  }
  const std::string path = write_temp("delta12.txt", body);
  const CommandResult r =
      run_cli("cuspform --coeff-file " + path + " --orders 1 --terms 12 --format csv");
  REQUIRE(r.exit_code == 0);
  const double c1 = std::stod(split_fields(split_lines(r.output)[1])[1]);
  CHECK(std::abs(c1 - testref::kC12[0]) <= 1e-12);

  const CommandResult neither = run_cli("cuspform --orders 1");
  CHECK(neither.exit_code == 1);
}

TEST_CASE("verify subcommand exit codes and formats") {
  const CommandResult ok = run_cli("verify --suite stieltjes");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("6/6 passed") != std::string::npos);

  const CommandResult fail = run_cli("verify --suite paper-table");
  CHECK(fail.exit_code == 3);
  CHECK(fail.output.find("[FAIL]") != std::string::npos);

  const CommandResult csv = run_cli("verify --suite stieltjes --format csv");
  REQUIRE(csv.exit_code == 0);
  const auto lines = split_lines(csv.output);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "name,computed,reference,abs_err,tolerance,pass,provenance");
  CHECK(split_fields(lines[1]).back() != "");

  const CommandResult json = run_cli("verify --suite stieltjes --format json");
  REQUIRE(json.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(json.output);
  CHECK(doc["suite"] == "stieltjes");

  const CommandResult unknown = run_cli("verify --suite frobnicate");
  CHECK(unknown.exit_code == 1);
}

TEST_CASE("compute commands are byte-deterministic") {
  for (const std::string& args :
       {std::string("stieltjes --k 0..4 --format json"),
        std::string("dirichlet --kronecker -4 --k 0..2 --format json"),
        std::string("cuspform --delta --orders 4 --format csv"),
        std::string("hurwitz --k 0..2 --a 0.5 --format text")}) {
    CAPTURE(args);
    const CommandResult first = run_cli(args);
    const CommandResult second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.output == second.output);
  }
}

TEST_CASE("usage failures exit 1") {
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("stieltjes").exit_code == 1);               // missing --k
  CHECK(run_cli("stieltjes --k 2..0").exit_code == 1);      // empty range
  CHECK(run_cli("stieltjes --k x..y").exit_code == 1);      // unparseable range
  CHECK(run_cli("stieltjes --k 0 --format yaml").exit_code == 1);
  CHECK(run_cli("hurwitz --k 0 --a 1.5").exit_code == 1);   // domain error
  CHECK(run_cli("").exit_code == 1);                        // no subcommand
}

TEST_CASE("accuracy failures exit 2") {
  const CommandResult starved =
      run_cli("stieltjes --k 12", "LAURENT_MAX_TERMS=16 ");
  CHECK(starved.exit_code == 2);
  CHECK(starved.diagnostics.find("error:") != std::string::npos);

  const CommandResult direct = run_cli("stieltjes --k 12 --terms 16");
  CHECK(direct.exit_code == 2);
}

TEST_CASE("environment ceiling parses strictly") {
  const CommandResult bad = run_cli("stieltjes --k 0", "LAURENT_MAX_TERMS=abc ");
  CHECK(bad.exit_code == 1);
  CHECK(bad.diagnostics.find("LAURENT_MAX_TERMS") != std::string::npos);
  // A generous ceiling changes nothing.
  const CommandResult fine = run_cli("stieltjes --k 0 --format csv",
                                     "LAURENT_MAX_TERMS=200000 ");
  CHECK(fine.exit_code == 0);
}

TEST_CASE("help and version") {
  CHECK(run_cli("--help").exit_code == 0);
  const CommandResult sub = run_cli("stieltjes --help");
  CHECK(sub.exit_code == 0);
  CHECK(sub.output.find("--k") != std::string::npos);
  const CommandResult version = run_cli("--version");
  CHECK(version.exit_code == 0);
  CHECK(version.output.find("0.1.0") != std::string::npos);
}
