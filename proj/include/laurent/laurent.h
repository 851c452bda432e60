/* Copyright 2026 The laurent Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the laurent library: Laurent-series coefficients of zeta,
 * Hurwitz zeta, and Dirichlet L-functions at s = 1, Taylor coefficients of
 * cusp-form L-functions at s = 0, the special-function engine behind them,
 * and the self-verification suites.
 *
 * Conventions:
 *   - Every fallible function returns a laurent_status; outputs go through
 *     pointers that are written only on LAURENT_OK.
 *   - laurent_last_error() describes the most recent failure on the calling
 *     thread; the string is valid until that thread's next laurent call.
 *   - Objects returned by the constructors are released with the matching
 *     free function; strings returned through char** with
 *     laurent_string_free.
 */

#ifndef LAURENT_H_
#define LAURENT_H_

#ifdef __cplusplus
extern "C" {
#endif

#define LAURENT_VERSION "0.1.0"

typedef enum {
  LAURENT_OK = 0,
  LAURENT_ERR_USAGE = 1,    /* null pointer or invalid handle */
  LAURENT_ERR_DOMAIN = 2,   /* argument outside the documented domain */
  LAURENT_ERR_ACCURACY = 3, /* result exists but the accuracy target failed */
  LAURENT_ERR_IO = 4,       /* unreadable or malformed input file */
  LAURENT_ERR_INTERNAL = 5,
} laurent_status;

const char* laurent_version(void);
const char* laurent_last_error(void);

/* Truncation and tolerance knobs shared by the summation-based evaluations.
 * Initialize with laurent_summation_control_default (max_terms = 100000,
 * em_order = 6, target_abs_tol = 1e-12); a null control pointer anywhere
 * below means the defaults. */
typedef struct {
  long max_terms;
  int em_order;
  double target_abs_tol;
} laurent_summation_control;

void laurent_summation_control_default(laurent_summation_control* ctl);

/* ---- Stieltjes and generalized Euler constants (expansion at s = 1) ---- */

/* gamma_k for zeta; 0 <= k <= 20. abs_err/terms may be null. */
laurent_status laurent_stieltjes(int k, const laurent_summation_control* ctl,
                                 double* value, double* abs_err, long* terms);

/* gamma_k(a) for the Hurwitz zeta zeta(s, a); 0 < a <= 1. */
laurent_status laurent_hurwitz(int k, double a, const laurent_summation_control* ctl,
                               double* value, double* abs_err, long* terms);

/* gamma_k(a, q) for the residue class n = a (mod q); 1 <= a <= q. */
laurent_status laurent_residue(int k, long a, long q,
                               const laurent_summation_control* ctl, double* value,
                               double* abs_err, long* terms);

/* Direct integral-representation evaluations, independent of the constants
 * above; s > 0, s != 1, and 0 < a <= 1 with any split point n_split >= 0. */
laurent_status laurent_zeta_direct(double s, double* value);
laurent_status laurent_hurwitz_direct(double s, double a, long n_split, double* value);

/* ---- Dirichlet characters and L(s, chi) ---- */

typedef struct laurent_character laurent_character;

/* Real character n -> (d|n) from the Kronecker symbol; d a fundamental
 * discriminant (or at least a non-square yielding a non-principal table). */
laurent_status laurent_character_kronecker(long d, laurent_character** out);

/* Explicit value table chi(1..q); im may be null for a real character.
 * Validated: multiplicative, unit modulus on units, zero elsewhere,
 * non-principal. */
laurent_status laurent_character_from_table(long q, const double* re, const double* im,
                                            laurent_character** out);

/* File with a "q = <modulus>" header then q rows "a re im". */
laurent_status laurent_character_from_file(const char* path, laurent_character** out);

long laurent_character_modulus(const laurent_character* chi);
const char* laurent_character_label(const laurent_character* chi);
laurent_status laurent_character_value(const laurent_character* chi, long n, double* re,
                                       double* im);
void laurent_character_free(laurent_character* chi);

/* gamma_k(chi) = sum_a chi(a) gamma_k(a, q), the k-th Laurent coefficient of
 * L(s, chi) at s = 1 up to (-1)^k/k!. */
laurent_status laurent_dirichlet_euler(const laurent_character* chi, int k,
                                       const laurent_summation_control* ctl,
                                       double* value_re, double* value_im,
                                       double* abs_err, long* terms);

/* L(s, chi) for s > 0 by Abel summation with a proven tail bound. */
laurent_status laurent_l_direct(double s, const laurent_character* chi, double abs_tol,
                                double* value_re, double* value_im);

/* Both sides of the periodic-sum identity sum_n g(n) log^k(n)/n =
 * sum_a g(a) gamma_k(a, q) for a zero-sum table g(1..q); g_im may be null. */
laurent_status laurent_periodic_sum_check(const double* g_re, const double* g_im, long q,
                                          int k, const laurent_summation_control* ctl,
                                          double* lhs_re, double* lhs_im, double* rhs_re,
                                          double* rhs_im, double* abs_diff);

/* ---- Laurent expansions as objects ---- */

typedef struct laurent_expansion laurent_expansion;

/* zeta(s) at s = 1: pole 1/(s-1) plus k_max+1 Taylor coefficients. */
laurent_status laurent_expansion_zeta(int k_max, const laurent_summation_control* ctl,
                                      laurent_expansion** out);
/* zeta(s, a) at s = 1. */
laurent_status laurent_expansion_hurwitz(double a, int k_max,
                                         const laurent_summation_control* ctl,
                                         laurent_expansion** out);
/* L(s, chi) at s = 1 (entire; pole order 0). */
laurent_status laurent_expansion_dirichlet(const laurent_character* chi, int k_max,
                                           const laurent_summation_control* ctl,
                                           laurent_expansion** out);

double laurent_expansion_center(const laurent_expansion* e);
int laurent_expansion_pole_order(const laurent_expansion* e);
double laurent_expansion_principal(const laurent_expansion* e);
long laurent_expansion_size(const laurent_expansion* e); /* Taylor coefficient count */
laurent_status laurent_expansion_coefficient(const laurent_expansion* e, long j,
                                             double* re, double* im, double* abs_err);
const char* laurent_expansion_meta(const laurent_expansion* e);
laurent_status laurent_expansion_evaluate(const laurent_expansion* e, double s,
                                          double* re, double* im);
void laurent_expansion_free(laurent_expansion* e);

/* ---- Cusp forms and L(f, s) at s = 0 ---- */

typedef struct laurent_cusp_form laurent_cusp_form;

/* The discriminant form Delta: weight 12, a(n) = tau(n) generated exactly. */
laurent_status laurent_cusp_form_delta(laurent_cusp_form** out);

/* User form from a(1..n); weight even >= 12, a(1) = 1. Deligne-bound
 * violations become warnings on the handle, not errors. */
laurent_status laurent_cusp_form_from_table(int weight, const double* coefficients,
                                            long n, laurent_cusp_form** out);

/* File with a "weight <k>" header then rows "n a_n" contiguous from 1. */
laurent_status laurent_cusp_form_from_file(const char* path, laurent_cusp_form** out);

int laurent_cusp_form_weight(const laurent_cusp_form* f);
const char* laurent_cusp_form_label(const laurent_cusp_form* f);
laurent_status laurent_cusp_form_coefficient(const laurent_cusp_form* f, long n,
                                             double* out);
long laurent_cusp_form_warning_count(const laurent_cusp_form* f);
const char* laurent_cusp_form_warning(const laurent_cusp_form* f, long i);
void laurent_cusp_form_free(laurent_cusp_form* f);

/* W(y) = sum a(n) e^{-2 pi n y} with a checked tail bound (<= 1e-16 of the
 * partial sum); fails with LAURENT_ERR_ACCURACY if n_terms is too small. */
laurent_status laurent_w_value(double y, const laurent_cusp_form* f, long n_terms,
                               double* out);

/* |y^k W(y) - W(1/y)|; term counts chosen internally for 1e-18 tails. */
laurent_status laurent_functional_equation_residual(double y, const laurent_cusp_form* f,
                                                    double* out);

/* Integral coefficients A(n,k) (0 <= n <= 12) and Taylor coefficients C(n,k)
 * (1 <= n <= 8) of L(f, s) at s = 0; n_terms Fourier terms (>= 8). */
laurent_status laurent_a_coefficient(int n, const laurent_cusp_form* f, long n_terms,
                                     double* out);
laurent_status laurent_c_coefficient(int n, const laurent_cusp_form* f, long n_terms,
                                     double* out);

/* C(1..n_orders, k) in one pass. orders has room for n_orders values;
 * error_bounds (same size) and tail_bound may be null. */
laurent_status laurent_cuspform_orders(const laurent_cusp_form* f, int n_orders,
                                       long n_terms, double* orders,
                                       double* error_bounds, double* tail_bound);

/* L(f, s) from the completed-integral representation; exact 0 at
 * s = 0, -1, -2, ... Accuracy ~1e-13 absolute for |s| <= 15. */
laurent_status laurent_l_f_direct(double s, const laurent_cusp_form* f, double* out);

/* Richardson central-difference derivative of s -> L(f, s) at s0;
 * order in {1, 2}, 1e-5 <= h0 <= 1e-2. */
laurent_status laurent_l_f_derivative(const laurent_cusp_form* f, double s0, int order,
                                      double h0, double* out);

/* ---- Verification suites ---- */

typedef struct laurent_report laurent_report;

/* name: paper-table, stieltjes, hurwitz, dirichlet, cuspform-invariants, all. */
laurent_status laurent_run_suite(const char* name, laurent_report** out);

int laurent_report_passed(const laurent_report* r); /* 1 if every entry passed */
long laurent_report_entry_count(const laurent_report* r);
laurent_status laurent_report_render_json(const laurent_report* r, char** out);
laurent_status laurent_report_render_text(const laurent_report* r, char** out);
void laurent_report_free(laurent_report* r);

void laurent_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LAURENT_H_ */
