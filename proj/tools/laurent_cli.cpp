// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0
//
// laurent: command-line front end over the C API. Computes generalized Euler
// constants (zeta, Hurwitz zeta, residue classes, Dirichlet L-functions),
// Taylor coefficients of cusp-form L-functions at s = 0, and runs the
// self-verification suites. Data goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 domain/usage error, 2 accuracy failure,
// 3 verification-suite failure.

#include <laurent/laurent.h>

#include <algorithm>
#include <cerrno>
#include <climits>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::ordered_json;

// Failure carrying the process exit status. Thrown by the command runners,
// caught once in main.
struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_for(laurent_status st) {
  return st == LAURENT_ERR_ACCURACY ? 2 : 1;
}

void check(laurent_status st) {
  if (st != LAURENT_OK) {
    throw CliError{exit_code_for(st), laurent_last_error()};
  }
}

// Handle guards for the C API objects.
using CharacterPtr = std::unique_ptr<laurent_character, void (*)(laurent_character*)>;
using CuspFormPtr = std::unique_ptr<laurent_cusp_form, void (*)(laurent_cusp_form*)>;
using ReportPtr = std::unique_ptr<laurent_report, void (*)(laurent_report*)>;
using StringPtr = std::unique_ptr<char, void (*)(char*)>;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// RFC 4180 quoting so fields containing commas survive a CSV round trip.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct IntRange {
  long lo = 0;
  long hi = 0;
};

// "a..b" inclusive, or a single integer.
IntRange parse_range(const std::string& text) {
  const auto parse_long = [&text](const std::string& part) {
    char* end = nullptr;
    errno = 0;
    const long v = std::strtol(part.c_str(), &end, 10);
    if (part.empty() || errno != 0 || end != part.c_str() + part.size()) {
      throw CliError{1, "invalid integer or range \"" + text + "\" (expected k or a..b)"};
    }
    return v;
  };
  IntRange r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_long(text);
  } else {
    r.lo = parse_long(text.substr(0, dots));
    r.hi = parse_long(text.substr(dots + 2));
  }
  if (r.lo > r.hi) {
    throw CliError{1, "empty range \"" + text + "\""};
  }
  return r;
}

// Global term-budget ceiling. Applied on top of --terms for every command.
long terms_ceiling_from_env() {
  const char* raw = std::getenv("LAURENT_MAX_TERMS");
  if (raw == nullptr || *raw == '\0') return LONG_MAX;
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(raw, &end, 10);
  if (errno != 0 || end == raw || *end != '\0' || v <= 0) {
    throw CliError{1, "LAURENT_MAX_TERMS must be a positive integer"};
  }
  return v;
}

void emit_json_document(const std::string& command, const ordered_json& params,
                        const ordered_json& results) {
  ordered_json doc;
  doc["command"] = command;
  doc["params"] = params;
  doc["results"] = results;
  const std::string text = doc.dump(2) + "\n";
  std::fputs(text.c_str(), stdout);
}

// Shared flags of the four summation-based commands. --terms 0 means "module
// default" (100000); the cuspform command has its own default of 30.
struct SummationFlags {
  std::string k_spec;
  long terms = 0;
  double tol = 1e-12;
};

void add_summation_flags(CLI::App* sub, SummationFlags* flags) {
  sub->add_option("--k", flags->k_spec, "order k, a single value or an inclusive range a..b")
      ->required();
  sub->add_option("--terms", flags->terms,
                  "summation term budget (default: library default, 100000)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--tol", flags->tol, "target absolute tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

laurent_summation_control make_control(const SummationFlags& flags) {
  laurent_summation_control ctl;
  laurent_summation_control_default(&ctl);
  if (flags.terms > 0) ctl.max_terms = flags.terms;
  ctl.max_terms = std::min(ctl.max_terms, terms_ceiling_from_env());
  ctl.target_abs_tol = flags.tol;
  return ctl;
}

// One real-valued constant with its error bound, plus the leading CSV fields
// that identify it (k / k,a / k,a,q depending on the command).
struct ValueRow {
  std::string name;
  std::string csv_prefix;
  double value = 0.0;
  double err = 0.0;
};

void emit_value_rows(const std::string& command, const ordered_json& params,
                     const char* csv_header, const std::vector<ValueRow>& rows,
                     const std::string& format) {
  if (format == "json") {
    ordered_json results = ordered_json::array();
    for (const auto& r : rows) {
      results.push_back(
          ordered_json{{"name", r.name}, {"value", r.value}, {"abs_error_bound", r.err}});
    }
    emit_json_document(command, params, results);
  } else if (format == "csv") {
    std::fprintf(stdout, "%s\n", csv_header);
    for (const auto& r : rows) {
      std::fprintf(stdout, "%s,%s,%s\n", r.csv_prefix.c_str(), fmt17(r.value).c_str(),
                   fmt17(r.err).c_str());
    }
  } else {
    size_t width = std::strlen("name");
    for (const auto& r : rows) width = std::max(width, r.name.size());
    std::fprintf(stdout, "%-*s  %-25s  %s\n", static_cast<int>(width), "name", "value",
                 "abs error bound");
    for (const auto& r : rows) {
      std::fprintf(stdout, "%-*s  %-25s  %s\n", static_cast<int>(width), r.name.c_str(),
                   fmt17(r.value).c_str(), fmt17(r.err).c_str());
    }
  }
}

int run_stieltjes(const SummationFlags& flags, const std::string& format) {
  const IntRange range = parse_range(flags.k_spec);
  const laurent_summation_control ctl = make_control(flags);
  std::vector<ValueRow> rows;
  for (long k = range.lo; k <= range.hi; ++k) {
    double value = 0.0;
    double err = 0.0;
    check(laurent_stieltjes(static_cast<int>(k), &ctl, &value, &err, nullptr));
    rows.push_back({"gamma_" + std::to_string(k), std::to_string(k), value, err});
  }
  const ordered_json params{
      {"k", flags.k_spec}, {"terms", ctl.max_terms}, {"tol", ctl.target_abs_tol}};
  emit_value_rows("stieltjes", params, "k,value,abs_error_bound", rows, format);
  return 0;
}

int run_hurwitz(const SummationFlags& flags, double a, const std::string& format) {
  const IntRange range = parse_range(flags.k_spec);
  const laurent_summation_control ctl = make_control(flags);
  std::vector<ValueRow> rows;
  for (long k = range.lo; k <= range.hi; ++k) {
    double value = 0.0;
    double err = 0.0;
    check(laurent_hurwitz(static_cast<int>(k), a, &ctl, &value, &err, nullptr));
    char name[64];
    std::snprintf(name, sizeof(name), "gamma_%ld(%g)", k, a);
    rows.push_back({name, std::to_string(k) + "," + fmt17(a), value, err});
  }
  const ordered_json params{{"k", flags.k_spec},
                            {"a", a},
                            {"terms", ctl.max_terms},
                            {"tol", ctl.target_abs_tol}};
  emit_value_rows("hurwitz", params, "k,a,value,abs_error_bound", rows, format);
  return 0;
}

int run_residue(const SummationFlags& flags, long a, long q, const std::string& format) {
  const IntRange range = parse_range(flags.k_spec);
  const laurent_summation_control ctl = make_control(flags);
  std::vector<ValueRow> rows;
  for (long k = range.lo; k <= range.hi; ++k) {
    double value = 0.0;
    double err = 0.0;
    check(laurent_residue(static_cast<int>(k), a, q, &ctl, &value, &err, nullptr));
    char name[80];
    std::snprintf(name, sizeof(name), "gamma_%ld(%ld mod %ld)", k, a, q);
    rows.push_back({name,
                    std::to_string(k) + "," + std::to_string(a) + "," + std::to_string(q),
                    value, err});
  }
  const ordered_json params{{"k", flags.k_spec},
                            {"a", a},
                            {"q", q},
                            {"terms", ctl.max_terms},
                            {"tol", ctl.target_abs_tol}};
  emit_value_rows("residue", params, "k,a,q,value,abs_error_bound", rows, format);
  return 0;
}

int run_dirichlet(const SummationFlags& flags, bool have_kronecker, long kronecker_d,
                  const std::string& char_file, const std::string& format) {
  if (have_kronecker == !char_file.empty()) {
    throw CliError{1, "dirichlet: pass exactly one of --kronecker or --char-file"};
  }
  laurent_character* raw = nullptr;
  check(have_kronecker ? laurent_character_kronecker(kronecker_d, &raw)
                       : laurent_character_from_file(char_file.c_str(), &raw));
  const CharacterPtr chi(raw, laurent_character_free);
  const std::string label = laurent_character_label(chi.get());

  const IntRange range = parse_range(flags.k_spec);
  const laurent_summation_control ctl = make_control(flags);

  struct ComplexRow {
    std::string name;
    long k;
    double re, im, err;
  };
  std::vector<ComplexRow> rows;
  for (long k = range.lo; k <= range.hi; ++k) {
    double re = 0.0;
    double im = 0.0;
    double err = 0.0;
    check(laurent_dirichlet_euler(chi.get(), static_cast<int>(k), &ctl, &re, &im, &err,
                                  nullptr));
    char name[96];
    std::snprintf(name, sizeof(name), "gamma_%ld(%s)", k, label.c_str());
    rows.push_back({name, k, re, im, err});
  }

  const ordered_json params{{"k", flags.k_spec},
                            {"character", label},
                            {"terms", ctl.max_terms},
                            {"tol", ctl.target_abs_tol}};
  if (format == "json") {
    ordered_json results = ordered_json::array();
    for (const auto& r : rows) {
      results.push_back(ordered_json{{"name", r.name},
                                     {"value", ordered_json::array({r.re, r.im})},
                                     {"abs_error_bound", r.err}});
    }
    emit_json_document("dirichlet", params, results);
  } else if (format == "csv") {
    std::fprintf(stdout, "k,value_re,value_im,abs_error_bound\n");
    for (const auto& r : rows) {
      std::fprintf(stdout, "%ld,%s,%s,%s\n", r.k, fmt17(r.re).c_str(), fmt17(r.im).c_str(),
                   fmt17(r.err).c_str());
    }
  } else {
    size_t width = std::strlen("name");
    for (const auto& r : rows) width = std::max(width, r.name.size());
    std::fprintf(stdout, "%-*s  %-25s  %-25s  %s\n", static_cast<int>(width), "name",
                 "value re", "value im", "abs error bound");
    for (const auto& r : rows) {
      std::fprintf(stdout, "%-*s  %-25s  %-25s  %s\n", static_cast<int>(width),
                   r.name.c_str(), fmt17(r.re).c_str(), fmt17(r.im).c_str(),
                   fmt17(r.err).c_str());
    }
  }
  return 0;
}

int run_cuspform(bool use_delta, const std::string& coeff_file, int orders, long terms_flag,
                 const std::string& format) {
  if (use_delta == !coeff_file.empty()) {
    throw CliError{1, "cuspform: pass exactly one of --delta or --coeff-file"};
  }
  laurent_cusp_form* raw = nullptr;
  check(use_delta ? laurent_cusp_form_delta(&raw)
                  : laurent_cusp_form_from_file(coeff_file.c_str(), &raw));
  const CuspFormPtr form(raw, laurent_cusp_form_free);
  for (long i = 0; i < laurent_cusp_form_warning_count(form.get()); ++i) {
    std::fprintf(stderr, "warning: %s\n", laurent_cusp_form_warning(form.get(), i));
  }

  const long terms = std::min(terms_flag, terms_ceiling_from_env());
  std::vector<double> series(static_cast<size_t>(orders));
  std::vector<double> errs(static_cast<size_t>(orders));
  check(laurent_cuspform_orders(form.get(), orders, terms, series.data(), errs.data(),
                                nullptr));

  // Independent column: central-difference derivatives of s -> L(f, s) at 0,
  // available for the first two orders.
  const int deriv_max = std::min(orders, 2);
  std::vector<double> deriv(static_cast<size_t>(deriv_max));
  for (int n = 1; n <= deriv_max; ++n) {
    double d = 0.0;
    check(laurent_l_f_derivative(form.get(), 0.0, n, 1e-3, &d));
    deriv[static_cast<size_t>(n - 1)] = (n == 2) ? d / 2.0 : d;
  }

  const int weight = laurent_cusp_form_weight(form.get());
  const std::string label = laurent_cusp_form_label(form.get());
  const auto series_name = [weight](int n) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "C(%d,%d)", n, weight);
    return std::string(buf);
  };
  const auto deriv_name = [](int n) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "L^(%d)(0)/%d!", n, n);
    return std::string(buf);
  };

  const ordered_json params{
      {"form", label}, {"weight", weight}, {"orders", orders}, {"terms", terms}};
  if (format == "json") {
    ordered_json results = ordered_json::array();
    for (int n = 1; n <= orders; ++n) {
      results.push_back(ordered_json{{"name", series_name(n)},
                                     {"value", series[static_cast<size_t>(n - 1)]},
                                     {"abs_error_bound", errs[static_cast<size_t>(n - 1)]}});
    }
    for (int n = 1; n <= deriv_max; ++n) {
      results.push_back(ordered_json{{"name", deriv_name(n)},
                                     {"value", deriv[static_cast<size_t>(n - 1)]},
                                     {"abs_error_bound", nullptr}});
    }
    emit_json_document("cuspform", params, results);
  } else if (format == "csv") {
    std::fprintf(stdout, "n,series_value,series_abs_error_bound,derivative_value\n");
    for (int n = 1; n <= orders; ++n) {
      const std::string d =
          n <= deriv_max ? fmt17(deriv[static_cast<size_t>(n - 1)]) : std::string();
      std::fprintf(stdout, "%d,%s,%s,%s\n", n,
                   fmt17(series[static_cast<size_t>(n - 1)]).c_str(),
                   fmt17(errs[static_cast<size_t>(n - 1)]).c_str(), d.c_str());
    }
  } else {
    std::fprintf(stdout, "Special values of L(%s, s) at s = 0 (weight %d, %ld series terms)\n\n",
                 label.c_str(), weight, terms);
    char head[96];
    std::snprintf(head, sizeof(head), "C(n,%d) (series)", weight);
    std::fprintf(stdout, " n  %-33s  %s\n", "L^(n)(0)/n! (central difference)", head);
    for (int n = 1; n <= orders; ++n) {
      const std::string d =
          n <= deriv_max ? fmt17(deriv[static_cast<size_t>(n - 1)]) : std::string("n/a");
      std::fprintf(stdout, "%2d  %-33s  %s\n", n, d.c_str(),
                   fmt17(series[static_cast<size_t>(n - 1)]).c_str());
    }
  }
  return 0;
}

int run_verify(const std::string& suite, const std::string& format) {
  laurent_report* raw = nullptr;
  check(laurent_run_suite(suite.c_str(), &raw));
  const ReportPtr report(raw, laurent_report_free);

  char* rendered = nullptr;
  if (format == "json") {
    check(laurent_report_render_json(report.get(), &rendered));
    const StringPtr guard(rendered, laurent_string_free);
    std::fputs(rendered, stdout);
  } else if (format == "text") {
    check(laurent_report_render_text(report.get(), &rendered));
    const StringPtr guard(rendered, laurent_string_free);
    std::fputs(rendered, stdout);
  } else {
    check(laurent_report_render_json(report.get(), &rendered));
    const StringPtr guard(rendered, laurent_string_free);
    const ordered_json doc = ordered_json::parse(rendered);
    std::fprintf(stdout, "name,computed,reference,abs_err,tolerance,pass,provenance\n");
    for (const auto& e : doc["entries"]) {
      std::fprintf(stdout, "%s,%s,%s,%s,%s,%s,%s\n",
                   csv_field(e["name"].get<std::string>()).c_str(),
                   fmt17(e["computed"].get<double>()).c_str(),
                   fmt17(e["reference"].get<double>()).c_str(),
                   fmt17(e["abs_err"].get<double>()).c_str(),
                   fmt17(e["tolerance"].get<double>()).c_str(),
                   e["pass"].get<bool>() ? "true" : "false",
                   e["provenance"].get<std::string>().c_str());
    }
  }
  return laurent_report_passed(report.get()) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "laurent: generalized Euler constants of zeta, Hurwitz zeta, and Dirichlet "
      "L-functions at s = 1, Taylor coefficients of cusp-form L-functions at s = 0, "
      "and self-verification suites"};
  app.set_version_flag("--version", laurent_version());
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  SummationFlags st_flags;
  CLI::App* st = app.add_subcommand("stieltjes", "Stieltjes constants gamma_k of zeta(s)");
  add_summation_flags(st, &st_flags);

  SummationFlags hw_flags;
  double hw_a = 1.0;
  CLI::App* hw =
      app.add_subcommand("hurwitz", "generalized Euler constants gamma_k(a) of zeta(s, a)");
  add_summation_flags(hw, &hw_flags);
  hw->add_option("--a", hw_a, "Hurwitz parameter, 0 < a <= 1")->required();

  SummationFlags rs_flags;
  long rs_a = 1;
  long rs_q = 1;
  CLI::App* rs = app.add_subcommand(
      "residue", "generalized Euler constants gamma_k(a, q) of the class n = a (mod q)");
  add_summation_flags(rs, &rs_flags);
  rs->add_option("--a", rs_a, "residue class, 1 <= a <= q")->required();
  rs->add_option("--q", rs_q, "modulus")->required();

  SummationFlags dl_flags;
  long dl_kronecker = 0;
  std::string dl_char_file;
  CLI::App* dl = app.add_subcommand(
      "dirichlet", "Laurent-coefficient constants gamma_k(chi) of L(s, chi) at s = 1");
  add_summation_flags(dl, &dl_flags);
  CLI::Option* dl_kron_opt =
      dl->add_option("--kronecker", dl_kronecker, "real character from the Kronecker symbol (d|n)");
  dl->add_option("--char-file", dl_char_file,
                 "character value table: line \"q = <modulus>\" then rows \"a re im\"");

  bool cf_delta = false;
  std::string cf_coeff_file;
  int cf_orders = 2;
  long cf_terms = 30;
  CLI::App* cf = app.add_subcommand(
      "cuspform", "Taylor coefficients C(n, k) of a cusp-form L-function at s = 0");
  cf->add_flag("--delta", cf_delta, "use the weight-12 discriminant form");
  cf->add_option("--coeff-file", cf_coeff_file,
                 "coefficient table: line \"weight <k>\" then rows \"n a_n\" from n = 1");
  cf->add_option("--orders", cf_orders, "number of Taylor orders n = 1..orders")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  cf->add_option("--terms", cf_terms, "series terms per coefficient")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string vf_suite = "all";
  CLI::App* vf = app.add_subcommand("verify", "run a self-verification suite");
  vf->add_option("--suite", vf_suite,
                 "paper-table, stieltjes, hurwitz, dirichlet, cuspform-invariants, all")
      ->capture_default_str();

  // Let --format (and any future global flag) appear after the subcommand.
  for (CLI::App* sub : {st, hw, rs, dl, cf, vf}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (st->parsed()) return run_stieltjes(st_flags, format);
    if (hw->parsed()) return run_hurwitz(hw_flags, hw_a, format);
    if (rs->parsed()) return run_residue(rs_flags, rs_a, rs_q, format);
    if (dl->parsed()) {
      return run_dirichlet(dl_flags, dl_kron_opt->count() > 0, dl_kronecker, dl_char_file,
                           format);
    }
    if (cf->parsed()) return run_cuspform(cf_delta, cf_coeff_file, cf_orders, cf_terms, format);
    if (vf->parsed()) return run_verify(vf_suite, format);
  } catch (const CliError& err) {
    std::fprintf(stderr, "error: %s\n", err.message.c_str());
    return err.exit_code;
  }
  return 0;
}
