// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

// C interface to brtriple. All functions return a brt_status; on failure the
// thread-local message from brt_last_error() names the violated condition.

#ifndef BRTRIPLE_BRTRIPLE_H_
#define BRTRIPLE_BRTRIPLE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(BRT_BUILDING_LIBRARY)
#define BRT_API __attribute__((visibility("default")))
#else
#define BRT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum brt_status {
  BRT_OK = 0,
  BRT_ERR_INVALID_ARGUMENT = 1,
  BRT_ERR_INVALID_SPEC = 2,
  BRT_ERR_DIVERGENT = 3,
  BRT_ERR_SINGULAR = 4,
  BRT_ERR_SIZE_LIMIT = 5,
  BRT_ERR_BASE_POINT = 6,
  BRT_ERR_VARIANCE = 7,
  BRT_ERR_NULL_POINTER = 8,
  BRT_ERR_BUFFER_TOO_SMALL = 9,
  BRT_ERR_INTERNAL = 10
} brt_status;

BRT_API const char* brt_version(void);
BRT_API const char* brt_status_string(brt_status status);
BRT_API const char* brt_last_error(void);

// sign * exp(log_magnitude); sign is 0 for an exact zero. pole != 0 marks a
// value sitting on a Gamma pole.
typedef struct brt_signed_log {
  double log_magnitude;
  int sign;
  int pole;
} brt_signed_log;

BRT_API double brt_signed_log_to_double(brt_signed_log value);

// ---------------------------------------------------------------- params

typedef struct brt_params brt_params;

BRT_API brt_status brt_params_create(int n, double alpha, double beta, double gamma,
                                     brt_params** out);
BRT_API brt_status brt_params_from_mu(int n, const double mu[3], brt_params** out);
BRT_API brt_status brt_params_from_lambda(int n, const double lambda[3], brt_params** out);
BRT_API void brt_params_destroy(brt_params* params);

BRT_API int brt_params_n(const brt_params* params);
BRT_API void brt_params_alpha_beta_gamma(const brt_params* params, double out[3]);
BRT_API void brt_params_mu(const brt_params* params, double out[3]);
BRT_API void brt_params_lambda(const brt_params* params, double out[3]);
BRT_API void brt_params_kernel_exponents(const brt_params* params, double out[3]);
BRT_API int brt_params_convergent(const brt_params* params);

// ---------------------------------------------------------------- closed form

typedef enum brt_eval_status {
  BRT_EVAL_CONVERGED = 0,
  BRT_EVAL_TERMINATED_EXACTLY = 1,
  BRT_EVAL_MAX_TERMS_REACHED = 2
} brt_eval_status;

typedef struct brt_series_info {
  int64_t terms_used;
  double last_term_magnitude;
  brt_eval_status status;
} brt_series_info;

BRT_API brt_status brt_closed_form(const brt_params* params, double rel_tol, int64_t max_terms,
                                   brt_signed_log* value, brt_signed_log* prefactor,
                                   brt_series_info* info);
BRT_API brt_status brt_prefactor(const brt_params* params, brt_signed_log* out);
BRT_API brt_status brt_trace_series(const brt_params* params, int64_t m_max, double rel_tol,
                                    double* value, int* converged, int64_t* terms);
// Trace with each K-type V_n^{l,l'} weighted by (-1)^{l'}.
BRT_API brt_status brt_trace_series_signed(const brt_params* params, int64_t m_max, double rel_tol,
                                           double* value, int* converged, int64_t* terms);
BRT_API brt_status brt_closed_form_n1(const double mu[3], brt_signed_log* out);
BRT_API brt_status brt_closed_form_n2_printed(double alpha, double beta, double gamma,
                                              brt_signed_log* out);
BRT_API brt_status brt_closed_form_n2_corrected(double alpha, double beta, double gamma,
                                                brt_signed_log* out);
BRT_API brt_status brt_sphere_volume(int n, double* out);

// ---------------------------------------------------------------- K-spectrum

BRT_API brt_status brt_eigenvalue_A(int n, int l, int l_prime, double lambda, brt_signed_log* out);
BRT_API brt_status brt_eigenvalue_A0(int n, double mu, brt_signed_log* out);
BRT_API brt_status brt_eigenvalue_A2m(int n, int64_t m, double mu, brt_signed_log* out);
// Exact decimal string; *needed receives the length including the terminator.
BRT_API brt_status brt_dim_sum(int n, int64_t m, char* buffer, size_t buffer_size, size_t* needed);
BRT_API brt_status brt_signed_dim_sum(int n, int64_t m, char* buffer, size_t buffer_size,
                                      size_t* needed);
BRT_API brt_status brt_dim_sum_double(int n, int64_t m, double* out);
BRT_API brt_status brt_dim_hmm_bruteforce(int n, int m, int64_t* out);
BRT_API brt_status brt_pochhammer_factorizations(int n, int64_t m, int* all_hold);

// ---------------------------------------------------------------- series

typedef enum brt_series_class {
  BRT_SERIES_TERMINATING = 0,
  BRT_SERIES_CONVERGENT_AT_UNIT = 1,
  BRT_SERIES_DIVERGENT_AT_UNIT = 2,
  BRT_SERIES_CONVERGENT_INSIDE_DISK = 3
} brt_series_class;

BRT_API brt_status brt_hypergeometric(const double* numerators, size_t p, const double* denominators,
                                      size_t q, double z, double rel_tol, int64_t max_terms,
                                      double* value, brt_series_info* info);
BRT_API brt_status brt_hypergeometric_classify(const double* numerators, size_t p,
                                               const double* denominators, size_t q, double z,
                                               brt_series_class* out);

typedef struct brt_identity_report {
  double lhs;
  double rhs;
  double rel_error;
  int64_t terms_used;
} brt_identity_report;

BRT_API brt_status brt_check_dougall(double m, double x, double y, double z, double rel_tol,
                                     brt_identity_report* out);
BRT_API brt_status brt_check_extended_dougall(double f, double u, double v, double w, double rel_tol,
                                              brt_identity_report* out);

// ---------------------------------------------------------------- Monte Carlo

typedef struct brt_mc_options {
  uint64_t samples;
  uint64_t seed;
  uint64_t batch_size;
  unsigned threads;  // 0: BRTRIPLE_THREADS or hardware concurrency
  int force;         // accept exponents in (-1, 0)
} brt_mc_options;

typedef struct brt_estimate {
  double mean;
  double std_error;
  uint64_t samples;
  uint64_t seed;
  int forced;  // nonzero when a refused regime was forced
} brt_estimate;

BRT_API void brt_mc_options_default(brt_mc_options* options);
BRT_API unsigned brt_default_thread_count(void);
BRT_API brt_status brt_estimate_In(const brt_params* params, const brt_mc_options* options,
                                   brt_estimate* out);
// y holds 4n real coordinates (Re X, Im X).
BRT_API brt_status brt_estimate_eigenvalue(int n, int l, int l_prime, double lambda, const double* y,
                                           size_t y_len, const brt_mc_options* options,
                                           brt_estimate* real_part, brt_estimate* imag_part);

// ---------------------------------------------------------------- geometry

// Writes a (2n x 2n) row-major complex matrix as interleaved (re, im) pairs:
// out must hold 8 n^2 doubles.
BRT_API brt_status brt_random_compact_symplectic(int n, uint64_t seed, double* out, size_t out_len);
BRT_API brt_status brt_re_omega(int n, const double* x, const double* y, size_t len, double* out);

// ---------------------------------------------------------------- verify

typedef enum brt_verify_level { BRT_VERIFY_QUICK = 0, BRT_VERIFY_FULL = 1 } brt_verify_level;

typedef struct brt_report brt_report;

BRT_API brt_status brt_verify(brt_verify_level level, uint64_t seed, unsigned threads,
                              brt_report** out);
// Runs only the acceptance criteria, in order.
BRT_API brt_status brt_verify_acceptance(brt_verify_level level, uint64_t seed, unsigned threads,
                                         brt_report** out);
BRT_API int brt_report_passed(const brt_report* report);
// JSON document, schema "brtriple.verify/1". Owned by the report.
BRT_API const char* brt_report_json(const brt_report* report);
BRT_API void brt_report_destroy(brt_report* report);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // BRTRIPLE_BRTRIPLE_H_
