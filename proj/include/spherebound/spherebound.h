/*
 * Copyright 2026 The spherebound Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libspherebound.
 *
 * Every function returns an sb_status. On failure the thread-local message
 * from sb_last_error() describes what went wrong; outputs are left
 * untouched. Handles are opaque, owned by the caller and released with the
 * matching *_destroy function, which accepts NULL. Functions that fill a
 * caller buffer take its capacity and report the required count; a NULL or
 * short buffer yields SB_BUFFER_TOO_SMALL with the count still written.
 *
 * Distinct handles may be used concurrently from different threads. A
 * single handle must not be used by two threads at once.
 */

#ifndef SPHEREBOUND_H_
#define SPHEREBOUND_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SPHEREBOUND_BUILDING)
#define SB_API __declspec(dllexport)
#else
#define SB_API __declspec(dllimport)
#endif
#else
#define SB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sb_status {
  SB_OK = 0,
  SB_INVALID_ARGUMENT = 1,
  SB_OUT_OF_RANGE = 2,
  SB_OVERFLOW = 3,
  SB_NO_CONVERGENCE = 4,
  SB_BRACKET_NOT_FOUND = 5,
  SB_INFEASIBLE = 6,
  SB_INCREASE_DEGREE = 7,
  SB_LP_FAILURE = 8,
  SB_NOT_RATIONAL = 9,
  SB_BUFFER_TOO_SMALL = 10,
  SB_INTERNAL = 99
} sb_status;

SB_API const char* sb_version(void);
SB_API const char* sb_status_name(sb_status status);
/* Message of the last failed call on this thread; "" after a success. */
SB_API const char* sb_last_error(void);

/* ------------------------------------------------------------------ */
/* Special functions                                                   */

SB_API sb_status sb_gamma(double x, double* out);
SB_API sb_status sb_log_gamma(double x, double* out);
SB_API sb_status sb_sphere_area(int n, double* out);
SB_API sb_status sb_bessel_j(double nu, double x, double* out);
SB_API sb_status sb_bessel_first_zero(double nu, double* zero,
                                      double* residual);

/* ------------------------------------------------------------------ */
/* Normalized Jacobi polynomials, R_k(1) = 1                           */

typedef struct sb_jacobi sb_jacobi;

SB_API sb_status sb_jacobi_create(double alpha, double beta, sb_jacobi** out);
SB_API void sb_jacobi_destroy(sb_jacobi* family);
SB_API sb_status sb_jacobi_eval(const sb_jacobi* family, int k, double u,
                                double* out);
/* Symmetric families only. */
SB_API sb_status sb_jacobi_eval_derivative(const sb_jacobi* family, int k,
                                           double u, double* out);
/* The k zeros of R_k in ascending order. */
SB_API sb_status sb_jacobi_zeros(const sb_jacobi* family, int k, double* zeros,
                                 size_t capacity, size_t* count);
SB_API sb_status sb_jacobi_largest_zero(const sb_jacobi* family, int k,
                                        double* zero, double* bracket_width);

/* ------------------------------------------------------------------ */
/* Theta of G(n, t)                                                    */

typedef enum sb_backend { SB_BACKEND_FLOAT = 0, SB_BACKEND_RATIONAL = 1 } sb_backend;

typedef struct sb_theta_options {
  int max_degree; /* 0 selects the automatic cap */
  sb_backend backend;
  double ceil_guard;
} sb_theta_options;

SB_API void sb_theta_options_init(sb_theta_options* options);

typedef struct sb_bracket {
  int degree;
  double left;
  double right;
  double lo;
  double hi;
} sb_bracket;

typedef struct sb_theta_summary {
  int n;
  double t;
  double alpha;
  double omega;
  double m_value;
  int k_star;
  double theta;
  double theta_bar;
  int64_t chi_lower;
  int certified;
  int tie;
  int scanned_degree;
  sb_backend backend;
  int has_bracket;
  sb_bracket bracket;
  int has_exact;
  int64_t exact_chi_lower;
} sb_theta_summary;

typedef struct sb_theta sb_theta;

/* options may be NULL for the defaults. */
SB_API sb_status sb_theta_compute(int n, double t,
                                  const sb_theta_options* options,
                                  sb_theta** out);
/* t is a rational literal such as "1/3", "0.9999" or "-5e-1". */
SB_API sb_status sb_theta_compute_exact(int n, const char* t,
                                        const sb_theta_options* options,
                                        sb_theta** out);
SB_API void sb_theta_destroy(sb_theta* result);
SB_API sb_status sb_theta_get_summary(const sb_theta* result,
                                      sb_theta_summary* out);
/* Exact m(t) as "p/q" (rational backend only), NUL-terminated. The count
 * includes the terminator. */
SB_API sb_status sb_theta_get_exact_m(const sb_theta* result, char* buffer,
                                      size_t capacity, size_t* count);

SB_API sb_status sb_analytic_minimum(int n, int k, double* t, double* m);
SB_API sb_status sb_bracket_minimum(int n, double t, sb_bracket* out);
SB_API sb_status sb_theta_bar_single(int n, double t, double* out);

/* ------------------------------------------------------------------ */
/* Limit bounds                                                        */

typedef struct sb_bound_row {
  int n;
  double alpha;
  double j_alpha_plus_1;
  double limit_m;
  double chi_bound_real;
  int64_t chi_bound_int;
  int high_precision_checked;
  double table_t;
  double m_at_t;
  double chi_at_t_real;
  int64_t chi_at_t_int;
  int at_t_certified;
} sb_bound_row;

SB_API sb_status sb_limit_minimum(int n, double* out);
/* table_t outside (0, 1) leaves the fixed-t columns zero. */
SB_API sb_status sb_bound_table(int first, int last, double ceil_guard,
                                double table_t, sb_bound_row* rows,
                                size_t capacity, size_t* count);
SB_API sb_status sb_growth_floor(int n, double* out);

typedef struct sb_convergence_entry {
  int k;
  double t;
  double m;
  double gap;
} sb_convergence_entry;

SB_API sb_status sb_convergence_check(int n, const int* degrees,
                                      size_t num_degrees,
                                      sb_convergence_entry* out);

/* ------------------------------------------------------------------ */
/* Linear programming                                                  */

typedef enum sb_sense { SB_LE = 0, SB_GE = 1, SB_EQ = 2 } sb_sense;

typedef enum sb_lp_status {
  SB_LP_OPTIMAL = 0,
  SB_LP_INFEASIBLE = 1,
  SB_LP_UNBOUNDED = 2,
  SB_LP_ITERATION_LIMIT = 3
} sb_lp_status;

typedef struct sb_lp sb_lp;

/* minimize objective . x over num_variables nonnegative variables. */
SB_API sb_status sb_lp_create(const double* objective, size_t num_variables,
                              sb_lp** out);
SB_API void sb_lp_destroy(sb_lp* lp);
SB_API sb_status sb_lp_add_row(sb_lp* lp, const double* coefficients,
                               sb_sense sense, double rhs);
SB_API sb_status sb_lp_set_free(sb_lp* lp, size_t variable);
/* Solves and keeps the solution on the handle. A non-optimal outcome is
 * SB_OK with the status reported through lp_status. */
SB_API sb_status sb_lp_solve(sb_lp* lp, sb_lp_status* lp_status,
                             double* objective_value, int* iterations);
SB_API sb_status sb_lp_get_x(const sb_lp* lp, double* x, size_t capacity,
                             size_t* count);
SB_API sb_status sb_lp_get_duals(const sb_lp* lp, double* duals,
                                 size_t capacity, size_t* count);

typedef struct sb_dual_lp_summary {
  int n;
  int degree;
  double omega;
  double bound;
  double tail_min;
  double tail_envelope;
  int certified;
  int64_t chi_lower;
  int iterations;
} sb_dual_lp_summary;

typedef struct sb_dual_lp sb_dual_lp;

SB_API sb_status sb_dual_lp_compute(int n, const double* inner_products,
                                    size_t count, int degree,
                                    double ceil_guard, sb_dual_lp** out);
SB_API void sb_dual_lp_destroy(sb_dual_lp* result);
SB_API sb_status sb_dual_lp_get_summary(const sb_dual_lp* result,
                                        sb_dual_lp_summary* out);
/* z_1, z_{t_1}, ..., z_{t_s}. */
SB_API sb_status sb_dual_lp_get_z(const sb_dual_lp* result, double* z,
                                  size_t capacity, size_t* count);

typedef struct sb_delsarte_summary {
  int n;
  double t;
  int degree;
  double bound;
  double max_violation;
  double certified_bound;
  int certified;
  int grid_points;
  int margin_rounds;
} sb_delsarte_summary;

typedef struct sb_delsarte sb_delsarte;

/* grid_size 0 selects 20 (degree + 1). */
SB_API sb_status sb_delsarte_compute(int n, double t, int degree,
                                     int grid_size, sb_delsarte** out);
SB_API void sb_delsarte_destroy(sb_delsarte* result);
SB_API sb_status sb_delsarte_get_summary(const sb_delsarte* result,
                                         sb_delsarte_summary* out);
/* f_1, ..., f_K. */
SB_API sb_status sb_delsarte_get_coefficients(const sb_delsarte* result,
                                              double* f, size_t capacity,
                                              size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* SPHEREBOUND_H_ */
