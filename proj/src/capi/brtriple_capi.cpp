// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#include "brtriple/brtriple.h"

#include <chrono>
#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "errors.hpp"
#include "hypergeometric.hpp"
#include "identities.hpp"
#include "kspectrum.hpp"
#include "monte_carlo.hpp"
#include "special_functions.hpp"
#include "symplectic.hpp"
#include "triple_integral.hpp"
#include "verification.hpp"

struct brt_params {
  brt::TripleParams value;
};

struct brt_report {
  brt::VerificationReport value;
  std::string json;
};

namespace {

thread_local std::string last_error;

brt_status map_code(brt::ErrorCode code) {
  switch (code) {
    case brt::ErrorCode::invalid_argument: return BRT_ERR_INVALID_ARGUMENT;
    case brt::ErrorCode::invalid_spec: return BRT_ERR_INVALID_SPEC;
    case brt::ErrorCode::divergent: return BRT_ERR_DIVERGENT;
    case brt::ErrorCode::singular: return BRT_ERR_SINGULAR;
    case brt::ErrorCode::size_limit: return BRT_ERR_SIZE_LIMIT;
    case brt::ErrorCode::base_point: return BRT_ERR_BASE_POINT;
    case brt::ErrorCode::variance: return BRT_ERR_VARIANCE;
  }
  return BRT_ERR_INTERNAL;
}

template <typename F>
brt_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return BRT_OK;
  } catch (const brt::Error& e) {
    last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BRT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BRT_ERR_INTERNAL;
  }
}

brt_status null_pointer(const char* what) {
  last_error = std::string("null pointer: ") + what;
  return BRT_ERR_NULL_POINTER;
}

brt_signed_log to_c(const brt::SignedLogValue& v) { return {v.log_magnitude, v.sign, v.pole ? 1 : 0}; }

brt_series_info to_c(const brt::EvalResult& r) {
  return {r.terms_used, r.last_term_magnitude, static_cast<brt_eval_status>(r.status)};
}

brt_estimate to_c(const brt::Estimate& e) {
  return {e.mean, e.std_error, e.samples, e.seed, e.warning.empty() ? 0 : 1};
}

brt::MonteCarloOptions from_c(const brt_mc_options* o) {
  brt::MonteCarloOptions out;
  if (o != nullptr) {
    out.samples = o->samples;
    out.seed = o->seed;
    out.batch_size = o->batch_size;
    out.threads = o->threads;
    out.force = o->force != 0;
  }
  return out;
}

void copy3(const std::array<double, 3>& a, double out[3]) {
  if (out != nullptr) std::memcpy(out, a.data(), sizeof(double) * 3);
}

brt::SeriesSpec make_spec(const double* a, size_t p, const double* b, size_t q, double z) {
  if ((p > 0 && a == nullptr) || (q > 0 && b == nullptr)) {
    throw brt::Error(brt::ErrorCode::invalid_argument, "null parameter array");
  }
  return {std::vector<double>(a, a + p), std::vector<double>(b, b + q), z};
}

brt::IdentityReport run_identity(const brt::IdentityInstance& inst, double rel_tol,
                                 brt_identity_report* out) {
  const brt::IdentityReport r = brt::check_identity(inst, rel_tol);
  *out = {r.lhs, r.rhs, r.rel_error, r.series.terms_used};
  return r;
}

brt::VerifyConfig make_config(brt_verify_level level, uint64_t seed, unsigned threads) {
  brt::VerifyConfig c;
  c.level = level == BRT_VERIFY_FULL ? brt::VerifyLevel::full : brt::VerifyLevel::quick;
  c.seed = seed;
  c.threads = threads;
  return c;
}

}  // namespace

extern "C" {

const char* brt_version(void) { return "0.1.0"; }

const char* brt_status_string(brt_status status) {
  switch (status) {
    case BRT_OK: return "ok";
    case BRT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BRT_ERR_INVALID_SPEC: return "invalid series specification";
    case BRT_ERR_DIVERGENT: return "divergent";
    case BRT_ERR_SINGULAR: return "singular";
    case BRT_ERR_SIZE_LIMIT: return "size limit exceeded";
    case BRT_ERR_BASE_POINT: return "degenerate base point";
    case BRT_ERR_VARIANCE: return "infinite-variance regime refused";
    case BRT_ERR_NULL_POINTER: return "null pointer";
    case BRT_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case BRT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* brt_last_error(void) { return last_error.c_str(); }

double brt_signed_log_to_double(brt_signed_log value) {
  return brt::SignedLogValue{value.log_magnitude, value.sign, value.pole != 0}.to_real();
}

brt_status brt_params_create(int n, double alpha, double beta, double gamma, brt_params** out) {
  if (out == nullptr) return null_pointer("out");
  return guarded([&] { *out = new brt_params{brt::TripleParams(n, alpha, beta, gamma)}; });
}

brt_status brt_params_from_mu(int n, const double mu[3], brt_params** out) {
  if (out == nullptr || mu == nullptr) return null_pointer("mu/out");
  return guarded([&] { *out = new brt_params{brt::TripleParams::from_mu(n, {mu[0], mu[1], mu[2]})}; });
}

brt_status brt_params_from_lambda(int n, const double lambda[3], brt_params** out) {
  if (out == nullptr || lambda == nullptr) return null_pointer("lambda/out");
  return guarded([&] {
    *out = new brt_params{brt::TripleParams::from_lambda(n, {lambda[0], lambda[1], lambda[2]})};
  });
}

void brt_params_destroy(brt_params* params) { delete params; }

int brt_params_n(const brt_params* params) { return params ? params->value.n() : 0; }

void brt_params_alpha_beta_gamma(const brt_params* params, double out[3]) {
  if (params) copy3(params->value.alpha_beta_gamma(), out);
}

void brt_params_mu(const brt_params* params, double out[3]) {
  if (params) copy3(params->value.mu(), out);
}

void brt_params_lambda(const brt_params* params, double out[3]) {
  if (params) copy3(params->value.lambda(), out);
}

void brt_params_kernel_exponents(const brt_params* params, double out[3]) {
  if (params) copy3(params->value.kernel_exponents(), out);
}

int brt_params_convergent(const brt_params* params) {
  return params && brt::convergence_domain(params->value).convergent ? 1 : 0;
}

brt_status brt_closed_form(const brt_params* params, double rel_tol, int64_t max_terms,
                           brt_signed_log* value, brt_signed_log* prefactor, brt_series_info* info) {
  if (params == nullptr || value == nullptr) return null_pointer("params/value");
  return guarded([&] {
    const brt::ClosedFormResult r = brt::closed_form_In(params->value, rel_tol, max_terms);
    *value = to_c(r.value);
    if (prefactor) *prefactor = to_c(r.prefactor);
    if (info) *info = to_c(r.series);
  });
}

brt_status brt_prefactor(const brt_params* params, brt_signed_log* out) {
  if (params == nullptr || out == nullptr) return null_pointer("params/out");
  return guarded([&] { *out = to_c(brt::prefactor_A(params->value)); });
}

brt_status brt_trace_series(const brt_params* params, int64_t m_max, double rel_tol, double* value,
                            int* converged, int64_t* terms) {
  if (params == nullptr || value == nullptr) return null_pointer("params/value");
  return guarded([&] {
    const brt::TraceSeriesResult r = brt::tau_trace_series(params->value, m_max, rel_tol);
    *value = r.pole ? std::nan("") : r.value;
    if (converged) *converged = r.converged ? 1 : 0;
    if (terms) *terms = static_cast<int64_t>(r.partial_sums.size());
  });
}

brt_status brt_trace_series_signed(const brt_params* params, int64_t m_max, double rel_tol, double* value,
                            int* converged, int64_t* terms) {
  if (params == nullptr || value == nullptr) return null_pointer("params/value");
  return guarded([&] {
    const brt::TraceSeriesResult r = brt::tau_trace_series_signed(params->value, m_max, rel_tol);
    *value = r.pole ? std::nan("") : r.value;
    if (converged) *converged = r.converged ? 1 : 0;
    if (terms) *terms = static_cast<int64_t>(r.partial_sums.size());
  });
}

brt_status brt_closed_form_n1(const double mu[3], brt_signed_log* out) {
  if (mu == nullptr || out == nullptr) return null_pointer("mu/out");
  return guarded([&] { *out = to_c(brt::closed_form_n1({mu[0], mu[1], mu[2]})); });
}

brt_status brt_closed_form_n2_printed(double alpha, double beta, double gamma, brt_signed_log* out) {
  if (out == nullptr) return null_pointer("out");
  return guarded([&] { *out = to_c(brt::closed_form_n2_printed(alpha, beta, gamma)); });
}

brt_status brt_closed_form_n2_corrected(double alpha, double beta, double gamma, brt_signed_log* out) {
  if (out == nullptr) return null_pointer("out");
  return guarded([&] { *out = to_c(brt::closed_form_n2_corrected(alpha, beta, gamma)); });
}

brt_status brt_sphere_volume(int n, double* out) {
  if (out == nullptr) return null_pointer("out");
  return guarded([&] { *out = brt::sphere_volume(n); });
}

brt_status brt_eigenvalue_A(int n, int l, int l_prime, double lambda, brt_signed_log* out) {
  if (out == nullptr) return null_pointer("out");
  return guarded([&] { *out = to_c(brt::eigenvalue_A(brt::SpectralQuery{n, l, l_prime, lambda})); });
}

brt_status brt_eigenvalue_A0(int n, double mu, brt_signed_log* out) {
  if (out == nullptr) return null_pointer("out");
  return guarded([&] { *out = to_c(brt::eigenvalue_A0(n, mu)); });
}

brt_status brt_eigenvalue_A2m(int n, int64_t m, double mu, brt_signed_log* out) {
  if (out == nullptr) return null_pointer("out");
  return guarded([&] { *out = to_c(brt::eigenvalue_A2m(n, m, mu)); });
}

namespace {

brt_status write_decimal(const std::string& text, char* buffer, size_t buffer_size, size_t* needed) {
  if (needed) *needed = text.size() + 1;
  if (buffer == nullptr || buffer_size < text.size() + 1) {
    last_error = "needs a buffer of " + std::to_string(text.size() + 1) + " bytes";
    return BRT_ERR_BUFFER_TOO_SMALL;
  }
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return BRT_OK;
}

}  // namespace

brt_status brt_dim_sum(int n, int64_t m, char* buffer, size_t buffer_size, size_t* needed) {
  std::string text;
  const brt_status s = guarded([&] { text = brt::dim_sum(n, m).str(); });
  return s != BRT_OK ? s : write_decimal(text, buffer, buffer_size, needed);
}

brt_status brt_signed_dim_sum(int n, int64_t m, char* buffer, size_t buffer_size, size_t* needed) {
  std::string text;
  const brt_status s = guarded([&] { text = brt::signed_dim_sum(n, m).str(); });
  return s != BRT_OK ? s : write_decimal(text, buffer, buffer_size, needed);
}

brt_status brt_dim_sum_double(int n, int64_t m, double* out) {
  if (out == nullptr) return null_pointer("out");
  return guarded([&] { *out = brt::dim_sum(n, m).convert_to<double>(); });
}

brt_status brt_dim_hmm_bruteforce(int n, int m, int64_t* out) {
  if (out == nullptr) return null_pointer("out");
  return guarded([&] { *out = brt::dim_hmm_bruteforce(n, m); });
}

brt_status brt_pochhammer_factorizations(int n, int64_t m, int* all_hold) {
  if (all_hold == nullptr) return null_pointer("all_hold");
  return guarded([&] { *all_hold = brt::pochhammer_factorizations_check(n, m).all() ? 1 : 0; });
}

brt_status brt_hypergeometric(const double* numerators, size_t p, const double* denominators, size_t q,
                              double z, double rel_tol, int64_t max_terms, double* value,
                              brt_series_info* info) {
  if (value == nullptr) return null_pointer("value");
  return guarded([&] {
    const brt::EvalResult r = brt::evaluate(make_spec(numerators, p, denominators, q, z), rel_tol, max_terms);
    *value = r.value;
    if (info) *info = to_c(r);
  });
}

brt_status brt_hypergeometric_classify(const double* numerators, size_t p, const double* denominators,
                                       size_t q, double z, brt_series_class* out) {
  if (out == nullptr) return null_pointer("out");
  return guarded([&] {
    *out = static_cast<brt_series_class>(brt::classify(make_spec(numerators, p, denominators, q, z)));
  });
}

brt_status brt_check_dougall(double m, double x, double y, double z, double rel_tol,
                             brt_identity_report* out) {
  if (out == nullptr) return null_pointer("out");
  return guarded([&] { run_identity(brt::DougallRamanujanInstance{m, x, y, z}, rel_tol, out); });
}

brt_status brt_check_extended_dougall(double f, double u, double v, double w, double rel_tol,
                                      brt_identity_report* out) {
  if (out == nullptr) return null_pointer("out");
  return guarded([&] { run_identity(brt::FatawatVyasInstance{f, u, v, w}, rel_tol, out); });
}

void brt_mc_options_default(brt_mc_options* options) {
  if (options == nullptr) return;
  const brt::MonteCarloOptions d;
  *options = {d.samples, d.seed, d.batch_size, d.threads, d.force ? 1 : 0};
}

unsigned brt_default_thread_count(void) { return brt::default_thread_count(); }

brt_status brt_estimate_In(const brt_params* params, const brt_mc_options* options, brt_estimate* out) {
  if (params == nullptr || out == nullptr) return null_pointer("params/out");
  return guarded([&] {
    const brt::Estimate e = brt::estimate_In(params->value, from_c(options));
    *out = to_c(e);
    if (!e.warning.empty()) last_error = e.warning;
  });
}

brt_status brt_estimate_eigenvalue(int n, int l, int l_prime, double lambda, const double* y, size_t y_len,
                                   const brt_mc_options* options, brt_estimate* real_part,
                                   brt_estimate* imag_part) {
  if (y == nullptr || real_part == nullptr) return null_pointer("y/real_part");
  return guarded([&] {
    const brt::ComplexEstimate e =
        brt::estimate_intertwiner_eigenvalue(n, l, l_prime, lambda, std::span<const double>(y, y_len),
                                             from_c(options));
    *real_part = to_c(e.real);
    if (imag_part) *imag_part = to_c(e.imag);
  });
}

brt_status brt_random_compact_symplectic(int n, uint64_t seed, double* out, size_t out_len) {
  if (out == nullptr) return null_pointer("out");
  return guarded([&] {
    const brt::ComplexMatrix g = brt::random_compact_symplectic(n, seed);
    const size_t dim = g.dim();
    if (out_len < 2 * dim * dim) {
      throw brt::Error(brt::ErrorCode::invalid_argument,
                       "output needs " + std::to_string(2 * dim * dim) + " doubles");
    }
    for (size_t r = 0; r < dim; ++r) {
      for (size_t c = 0; c < dim; ++c) {
        out[2 * (r * dim + c)] = g(r, c).real();
        out[2 * (r * dim + c) + 1] = g(r, c).imag();
      }
    }
  });
}

brt_status brt_re_omega(int n, const double* x, const double* y, size_t len, double* out) {
  if (x == nullptr || y == nullptr || out == nullptr) return null_pointer("x/y/out");
  return guarded([&] {
    *out = brt::re_omega(n, std::span<const double>(x, len), std::span<const double>(y, len));
  });
}

brt_status brt_verify(brt_verify_level level, uint64_t seed, unsigned threads, brt_report** out) {
  if (out == nullptr) return null_pointer("out");
  return guarded([&] {
    auto* r = new brt_report{brt::run_verification(make_config(level, seed, threads)), {}};
    r->json = r->value.to_json();
    *out = r;
  });
}

brt_status brt_verify_acceptance(brt_verify_level level, uint64_t seed, unsigned threads,
                                 brt_report** out) {
  if (out == nullptr) return null_pointer("out");
  return guarded([&] {
    auto* r = new brt_report{};
    r->value.config = make_config(level, seed, threads);
    const auto start = std::chrono::steady_clock::now();
    for (const auto& s : brt::acceptance_suites()) r->value.suites.push_back(brt::run_suite(s, r->value.config));
    r->value.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r->json = r->value.to_json();
    *out = r;
  });
}

int brt_report_passed(const brt_report* report) { return report && report->value.passed() ? 1 : 0; }

const char* brt_report_json(const brt_report* report) { return report ? report->json.c_str() : ""; }

void brt_report_destroy(brt_report* report) { delete report; }

}  // extern "C"
