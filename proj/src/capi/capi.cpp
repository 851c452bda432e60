// Copyright 2026 The laurent Authors
// SPDX-License-Identifier: Apache-2.0

#include "laurent/laurent.h"

#include <complex>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "cuspform/cusp_form.hpp"
#include "cuspform/l_series.hpp"
#include "dirichlet/character.hpp"
#include "dirichlet/l_series.hpp"
#include "stieltjes/direct_zeta.hpp"
#include "stieltjes/euler_constants.hpp"
#include "stieltjes/laurent_expansion.hpp"
#include "verify/report.hpp"
#include "verify/richardson.hpp"
#include "verify/suites.hpp"

struct laurent_character {
  laurent::DirichletCharacter impl;
};

struct laurent_expansion {
  laurent::LaurentExpansion impl;
};

struct laurent_cusp_form {
  laurent::CuspForm impl;
};

struct laurent_report {
  laurent::VerificationReport impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

// Runs the body and maps the library's exception taxonomy onto status codes.
template <typename Fn>
laurent_status guarded(Fn&& body) noexcept {
  try {
    body();
    return LAURENT_OK;
  } catch (const laurent::domain_error& e) {
    set_error(e.what());
    return LAURENT_ERR_DOMAIN;
  } catch (const laurent::accuracy_error& e) {
    set_error(e.what());
    return LAURENT_ERR_ACCURACY;
  } catch (const laurent::io_error& e) {
    set_error(e.what());
    return LAURENT_ERR_IO;
  } catch (const std::exception& e) {
    set_error(e.what());
    return LAURENT_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return LAURENT_ERR_INTERNAL;
  }
}

laurent_status usage_error(const char* message) {
  set_error(message);
  return LAURENT_ERR_USAGE;
}

laurent::SummationControl to_control(const laurent_summation_control* ctl) {
  laurent::SummationControl out;
  if (ctl != nullptr) {
    out.max_terms = ctl->max_terms;
    out.em_order = ctl->em_order;
    out.target_abs_tol = ctl->target_abs_tol;
  }
  return out;
}

void write_constant(const laurent::EulerConstant& c, double* value, double* abs_err,
                    long* terms) {
  *value = c.value;
  if (abs_err != nullptr) *abs_err = c.abs_error_estimate;
  if (terms != nullptr) *terms = c.terms_used;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* laurent_version(void) { return LAURENT_VERSION; }

const char* laurent_last_error(void) { return g_last_error.c_str(); }

void laurent_summation_control_default(laurent_summation_control* ctl) {
  if (ctl == nullptr) return;
  const laurent::SummationControl defaults;
  ctl->max_terms = defaults.max_terms;
  ctl->em_order = defaults.em_order;
  ctl->target_abs_tol = defaults.target_abs_tol;
}

laurent_status laurent_stieltjes(int k, const laurent_summation_control* ctl,
                                 double* value, double* abs_err, long* terms) {
  if (value == nullptr) return usage_error("laurent_stieltjes: value is null");
  return guarded([&] {
    write_constant(laurent::stieltjes_constant(k, to_control(ctl)), value, abs_err, terms);
  });
}

laurent_status laurent_hurwitz(int k, double a, const laurent_summation_control* ctl,
                               double* value, double* abs_err, long* terms) {
  if (value == nullptr) return usage_error("laurent_hurwitz: value is null");
  return guarded([&] {
    write_constant(laurent::hurwitz_euler_constant(k, a, to_control(ctl)), value, abs_err,
                   terms);
  });
}

laurent_status laurent_residue(int k, long a, long q,
                               const laurent_summation_control* ctl, double* value,
                               double* abs_err, long* terms) {
  if (value == nullptr) return usage_error("laurent_residue: value is null");
  return guarded([&] {
    write_constant(laurent::residue_euler_constant(k, a, q, to_control(ctl)), value,
                   abs_err, terms);
  });
}

laurent_status laurent_zeta_direct(double s, double* value) {
  if (value == nullptr) return usage_error("laurent_zeta_direct: value is null");
  return guarded([&] { *value = laurent::zeta_direct(s); });
}

laurent_status laurent_hurwitz_direct(double s, double a, long n_split, double* value) {
  if (value == nullptr) return usage_error("laurent_hurwitz_direct: value is null");
  return guarded([&] { *value = laurent::hurwitz_direct(s, a, n_split); });
}

laurent_status laurent_character_kronecker(long d, laurent_character** out) {
  if (out == nullptr) return usage_error("laurent_character_kronecker: out is null");
  return guarded([&] {
    *out = new laurent_character{laurent::kronecker_character(d)};
  });
}

laurent_status laurent_character_from_table(long q, const double* re, const double* im,
                                            laurent_character** out) {
  if (out == nullptr || re == nullptr) {
    return usage_error("laurent_character_from_table: null argument");
  }
  return guarded([&] {
    if (q < 1) throw laurent::domain_error("character table: q must be >= 1");
    std::vector<std::complex<double>> values(q);
    for (long i = 0; i < q; ++i) {
      values[i] = {re[i], im == nullptr ? 0.0 : im[i]};
    }
    *out = new laurent_character{laurent::character_from_table(q, values)};
  });
}

laurent_status laurent_character_from_file(const char* path, laurent_character** out) {
  if (out == nullptr || path == nullptr) {
    return usage_error("laurent_character_from_file: null argument");
  }
  return guarded([&] {
    *out = new laurent_character{laurent::character_from_file(path)};
  });
}

long laurent_character_modulus(const laurent_character* chi) {
  return chi == nullptr ? 0 : chi->impl.modulus;
}

const char* laurent_character_label(const laurent_character* chi) {
  return chi == nullptr ? "" : chi->impl.label.c_str();
}

laurent_status laurent_character_value(const laurent_character* chi, long n, double* re,
                                       double* im) {
  if (chi == nullptr || re == nullptr || im == nullptr) {
    return usage_error("laurent_character_value: null argument");
  }
  return guarded([&] {
    const std::complex<double> v = chi->impl.at(n);
    *re = v.real();
    *im = v.imag();
  });
}

void laurent_character_free(laurent_character* chi) { delete chi; }

laurent_status laurent_dirichlet_euler(const laurent_character* chi, int k,
                                       const laurent_summation_control* ctl,
                                       double* value_re, double* value_im,
                                       double* abs_err, long* terms) {
  if (chi == nullptr || value_re == nullptr || value_im == nullptr) {
    return usage_error("laurent_dirichlet_euler: null argument");
  }
  return guarded([&] {
    const laurent::CharacterConstant c =
        laurent::dirichlet_euler_constant(chi->impl, k, to_control(ctl));
    *value_re = c.value.real();
    *value_im = c.value.imag();
    if (abs_err != nullptr) *abs_err = c.abs_error_estimate;
    if (terms != nullptr) *terms = c.terms_used;
  });
}

laurent_status laurent_l_direct(double s, const laurent_character* chi, double abs_tol,
                                double* value_re, double* value_im) {
  if (chi == nullptr || value_re == nullptr || value_im == nullptr) {
    return usage_error("laurent_l_direct: null argument");
  }
  return guarded([&] {
    const std::complex<double> v = laurent::l_direct(s, chi->impl, abs_tol);
    *value_re = v.real();
    *value_im = v.imag();
  });
}

laurent_status laurent_periodic_sum_check(const double* g_re, const double* g_im, long q,
                                          int k, const laurent_summation_control* ctl,
                                          double* lhs_re, double* lhs_im, double* rhs_re,
                                          double* rhs_im, double* abs_diff) {
  if (g_re == nullptr || lhs_re == nullptr || lhs_im == nullptr || rhs_re == nullptr ||
      rhs_im == nullptr || abs_diff == nullptr) {
    return usage_error("laurent_periodic_sum_check: null argument");
  }
  return guarded([&] {
    if (q < 1) throw laurent::domain_error("periodic_sum_check: q must be >= 1");
    std::vector<std::complex<double>> g(q);
    for (long i = 0; i < q; ++i) g[i] = {g_re[i], g_im == nullptr ? 0.0 : g_im[i]};
    const laurent::PeriodicSumCheck c = laurent::periodic_sum_check(g, k, to_control(ctl));
    *lhs_re = c.lhs.real();
    *lhs_im = c.lhs.imag();
    *rhs_re = c.rhs.real();
    *rhs_im = c.rhs.imag();
    *abs_diff = c.abs_diff;
  });
}

laurent_status laurent_expansion_zeta(int k_max, const laurent_summation_control* ctl,
                                      laurent_expansion** out) {
  if (out == nullptr) return usage_error("laurent_expansion_zeta: out is null");
  return guarded([&] {
    *out = new laurent_expansion{laurent::laurent_zeta(k_max, to_control(ctl))};
  });
}

laurent_status laurent_expansion_hurwitz(double a, int k_max,
                                         const laurent_summation_control* ctl,
                                         laurent_expansion** out) {
  if (out == nullptr) return usage_error("laurent_expansion_hurwitz: out is null");
  return guarded([&] {
    *out = new laurent_expansion{laurent::laurent_hurwitz(a, k_max, to_control(ctl))};
  });
}

laurent_status laurent_expansion_dirichlet(const laurent_character* chi, int k_max,
                                           const laurent_summation_control* ctl,
                                           laurent_expansion** out) {
  if (out == nullptr || chi == nullptr) {
    return usage_error("laurent_expansion_dirichlet: null argument");
  }
  return guarded([&] {
    *out = new laurent_expansion{
        laurent::laurent_dirichlet(chi->impl, k_max, to_control(ctl))};
  });
}

double laurent_expansion_center(const laurent_expansion* e) {
  return e == nullptr ? 0.0 : e->impl.center;
}

int laurent_expansion_pole_order(const laurent_expansion* e) {
  return e == nullptr ? 0 : e->impl.pole_order;
}

double laurent_expansion_principal(const laurent_expansion* e) {
  return e == nullptr ? 0.0 : e->impl.principal_coefficient;
}

long laurent_expansion_size(const laurent_expansion* e) {
  return e == nullptr ? 0 : static_cast<long>(e->impl.coefficients.size());
}

laurent_status laurent_expansion_coefficient(const laurent_expansion* e, long j,
                                             double* re, double* im, double* abs_err) {
  if (e == nullptr || re == nullptr || im == nullptr) {
    return usage_error("laurent_expansion_coefficient: null argument");
  }
  return guarded([&] {
    if (j < 0 || j >= static_cast<long>(e->impl.coefficients.size())) {
      throw laurent::domain_error("expansion coefficient index out of range");
    }
    *re = e->impl.coefficients[j].real();
    *im = e->impl.coefficients[j].imag();
    if (abs_err != nullptr) *abs_err = e->impl.coefficient_error_bounds[j];
  });
}

const char* laurent_expansion_meta(const laurent_expansion* e) {
  return e == nullptr ? "" : e->impl.meta.c_str();
}

laurent_status laurent_expansion_evaluate(const laurent_expansion* e, double s,
                                          double* re, double* im) {
  if (e == nullptr || re == nullptr || im == nullptr) {
    return usage_error("laurent_expansion_evaluate: null argument");
  }
  return guarded([&] {
    const std::complex<double> v = e->impl.evaluate(s);
    *re = v.real();
    *im = v.imag();
  });
}

void laurent_expansion_free(laurent_expansion* e) { delete e; }

laurent_status laurent_cusp_form_delta(laurent_cusp_form** out) {
  if (out == nullptr) return usage_error("laurent_cusp_form_delta: out is null");
  return guarded([&] { *out = new laurent_cusp_form{laurent::delta_form()}; });
}

laurent_status laurent_cusp_form_from_table(int weight, const double* coefficients,
                                            long n, laurent_cusp_form** out) {
  if (out == nullptr || coefficients == nullptr) {
    return usage_error("laurent_cusp_form_from_table: null argument");
  }
  return guarded([&] {
    if (n < 1) throw laurent::domain_error("cusp form: need at least one coefficient");
    const std::vector<double> table(coefficients, coefficients + n);
    *out = new laurent_cusp_form{laurent::cusp_form_from_coefficients(weight, table)};
  });
}

laurent_status laurent_cusp_form_from_file(const char* path, laurent_cusp_form** out) {
  if (out == nullptr || path == nullptr) {
    return usage_error("laurent_cusp_form_from_file: null argument");
  }
  return guarded([&] {
    *out = new laurent_cusp_form{laurent::cusp_form_from_file(path)};
  });
}

int laurent_cusp_form_weight(const laurent_cusp_form* f) {
  return f == nullptr ? 0 : f->impl.weight;
}

const char* laurent_cusp_form_label(const laurent_cusp_form* f) {
  return f == nullptr ? "" : f->impl.label.c_str();
}

laurent_status laurent_cusp_form_coefficient(const laurent_cusp_form* f, long n,
                                             double* out) {
  if (f == nullptr || out == nullptr) {
    return usage_error("laurent_cusp_form_coefficient: null argument");
  }
  return guarded([&] { *out = f->impl.a(n); });
}

long laurent_cusp_form_warning_count(const laurent_cusp_form* f) {
  return f == nullptr ? 0 : static_cast<long>(f->impl.warnings.size());
}

const char* laurent_cusp_form_warning(const laurent_cusp_form* f, long i) {
  if (f == nullptr || i < 0 || i >= static_cast<long>(f->impl.warnings.size())) return "";
  return f->impl.warnings[i].c_str();
}

void laurent_cusp_form_free(laurent_cusp_form* f) { delete f; }

laurent_status laurent_w_value(double y, const laurent_cusp_form* f, long n_terms,
                               double* out) {
  if (f == nullptr || out == nullptr) {
    return usage_error("laurent_w_value: null argument");
  }
  return guarded([&] { *out = laurent::w_value(y, f->impl, n_terms); });
}

laurent_status laurent_functional_equation_residual(double y, const laurent_cusp_form* f,
                                                    double* out) {
  if (f == nullptr || out == nullptr) {
    return usage_error("laurent_functional_equation_residual: null argument");
  }
  return guarded([&] { *out = laurent::functional_equation_residual(y, f->impl); });
}

laurent_status laurent_a_coefficient(int n, const laurent_cusp_form* f, long n_terms,
                                     double* out) {
  if (f == nullptr || out == nullptr) {
    return usage_error("laurent_a_coefficient: null argument");
  }
  return guarded([&] { *out = laurent::a_coefficient(n, f->impl, n_terms); });
}

laurent_status laurent_c_coefficient(int n, const laurent_cusp_form* f, long n_terms,
                                     double* out) {
  if (f == nullptr || out == nullptr) {
    return usage_error("laurent_c_coefficient: null argument");
  }
  return guarded([&] { *out = laurent::c_coefficient(n, f->impl, n_terms); });
}

laurent_status laurent_cuspform_orders(const laurent_cusp_form* f, int n_orders,
                                       long n_terms, double* orders,
                                       double* error_bounds, double* tail_bound) {
  if (f == nullptr || orders == nullptr) {
    return usage_error("laurent_cuspform_orders: null argument");
  }
  return guarded([&] {
    const laurent::CuspFormLaurent lc = laurent::laurent_cuspform(f->impl, n_orders, n_terms);
    for (int i = 0; i < n_orders; ++i) {
      orders[i] = lc.orders[i];
      if (error_bounds != nullptr) error_bounds[i] = lc.order_error_bounds[i];
    }
    if (tail_bound != nullptr) *tail_bound = lc.term_tail_bound;
  });
}

laurent_status laurent_l_f_direct(double s, const laurent_cusp_form* f, double* out) {
  if (f == nullptr || out == nullptr) {
    return usage_error("laurent_l_f_direct: null argument");
  }
  return guarded([&] { *out = laurent::l_f_direct(s, f->impl); });
}

laurent_status laurent_l_f_derivative(const laurent_cusp_form* f, double s0, int order,
                                      double h0, double* out) {
  if (f == nullptr || out == nullptr) {
    return usage_error("laurent_l_f_derivative: null argument");
  }
  return guarded([&] {
    const laurent::CuspForm& form = f->impl;
    *out = laurent::richardson_derivative(
        [&form](double s) { return laurent::l_f_direct(s, form); }, s0, order, h0);
  });
}

laurent_status laurent_run_suite(const char* name, laurent_report** out) {
  if (out == nullptr || name == nullptr) {
    return usage_error("laurent_run_suite: null argument");
  }
  return guarded([&] { *out = new laurent_report{laurent::run_suite(name)}; });
}

int laurent_report_passed(const laurent_report* r) {
  return (r != nullptr && r->impl.all_passed()) ? 1 : 0;
}

long laurent_report_entry_count(const laurent_report* r) {
  return r == nullptr ? 0 : static_cast<long>(r->impl.entries.size());
}

laurent_status laurent_report_render_json(const laurent_report* r, char** out) {
  if (r == nullptr || out == nullptr) {
    return usage_error("laurent_report_render_json: null argument");
  }
  return guarded([&] { *out = copy_string(laurent::render_json(r->impl)); });
}

laurent_status laurent_report_render_text(const laurent_report* r, char** out) {
  if (r == nullptr || out == nullptr) {
    return usage_error("laurent_report_render_text: null argument");
  }
  return guarded([&] { *out = copy_string(laurent::render_text(r->impl)); });
}

void laurent_report_free(laurent_report* r) { delete r; }

void laurent_string_free(char* s) { std::free(s); }

}  // extern "C"
