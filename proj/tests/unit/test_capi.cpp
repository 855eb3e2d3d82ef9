// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <brtriple/brtriple.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("params handle") {
  brt_params* p = nullptr;
  REQUIRE(brt_params_create(2, 6, 7, 8, &p) == BRT_OK);
  CHECK(brt_params_n(p) == 2);
  double mu[3], abc[3], e[3];
  brt_params_mu(p, mu);
  CHECK(mu[0] == doctest::Approx(-5.0));
  brt_params* q = nullptr;
  REQUIRE(brt_params_from_mu(2, mu, &q) == BRT_OK);
  brt_params_alpha_beta_gamma(q, abc);
  CHECK(abc[2] == doctest::Approx(8.0));
  brt_params_kernel_exponents(q, e);
  CHECK(e[0] == doctest::Approx(1.0));
  CHECK(brt_params_convergent(q) == 1);
  brt_params_destroy(p);
  brt_params_destroy(q);
  CHECK(brt_params_create(0, 1, 1, 1, &p) == BRT_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(brt_last_error()) > 0);
  CHECK(brt_params_create(1, 1, 1, 1, nullptr) == BRT_ERR_NULL_POINTER);
}

TEST_CASE("closed form and reductions") {
  brt_params* p = nullptr;
  REQUIRE(brt_params_create(1, 4, 4, 4, &p) == BRT_OK);
  brt_signed_log v, a;
  brt_series_info info;
  REQUIRE(brt_closed_form(p, 1e-15, 1000000, &v, &a, &info) == BRT_OK);
  CHECK(brt_signed_log_to_double(v) == doctest::Approx(15 * std::pow(kPi, 5) / 8).epsilon(1e-13));
  CHECK(info.status == BRT_EVAL_CONVERGED);
  double trace = 0;
  int converged = 0;
  int64_t terms = 0;
  REQUIRE(brt_trace_series(p, 100000, 1e-14, &trace, &converged, &terms) == BRT_OK);
  CHECK(converged == 1);
  CHECK(trace == doctest::Approx(brt_signed_log_to_double(v)).epsilon(1e-12));
  const double mu[3] = {-3, -3, -3};
  REQUIRE(brt_closed_form_n1(mu, &v) == BRT_OK);
  CHECK(brt_signed_log_to_double(v) == doctest::Approx(15 * std::pow(kPi, 5) / 8).epsilon(1e-14));
  brt_params_destroy(p);

  brt_signed_log printed, corrected;
  REQUIRE(brt_closed_form_n2_printed(4, 4, 4, &printed) == BRT_OK);
  REQUIRE(brt_closed_form_n2_corrected(4, 4, 4, &corrected) == BRT_OK);
  CHECK(brt_signed_log_to_double(corrected) / brt_signed_log_to_double(printed) ==
        doctest::Approx(std::pow(kPi, 1.5)).epsilon(1e-14));

  REQUIRE(brt_params_create(3, 0.5, 0.5, 0.5, &p) == BRT_OK);
  CHECK(brt_closed_form(p, 1e-12, 1000000, &v, nullptr, nullptr) == BRT_ERR_DIVERGENT);
  CHECK(std::string(brt_last_error()).find("alpha+beta+gamma") != std::string::npos);
  brt_params_destroy(p);
}

TEST_CASE("spectrum") {
  brt_signed_log v;
  REQUIRE(brt_eigenvalue_A(1, 2, 0, -3, &v) == BRT_OK);
  CHECK(brt_signed_log_to_double(v) == doctest::Approx(-8 * kPi / 15).epsilon(1e-14));
  REQUIRE(brt_eigenvalue_A(1, 2, 0, -2, &v) == BRT_OK);
  CHECK(v.sign == 0);
  CHECK(brt_eigenvalue_A(1, 1, 1, -3, &v) == BRT_ERR_INVALID_ARGUMENT);
  REQUIRE(brt_eigenvalue_A2m(1, 1, -3, &v) == BRT_OK);
  CHECK(brt_signed_log_to_double(v) == doctest::Approx(-8 * kPi / 15).epsilon(1e-14));

  size_t needed = 0;
  CHECK(brt_dim_sum(8, 100, nullptr, 0, &needed) == BRT_ERR_BUFFER_TOO_SMALL);
  std::string buf(needed, '\0');
  REQUIRE(brt_dim_sum(8, 100, buf.data(), buf.size(), &needed) == BRT_OK);
  CHECK(std::string(buf.c_str()) == "1400899788070006279822437212206659216");
  int64_t brute = 0;
  REQUIRE(brt_dim_hmm_bruteforce(2, 1, &brute) == BRT_OK);
  CHECK(brute == 15);
  CHECK(brt_dim_hmm_bruteforce(5, 1, &brute) == BRT_ERR_SIZE_LIMIT);
  int all = 0;
  REQUIRE(brt_pochhammer_factorizations(3, 7, &all) == BRT_OK);
  CHECK(all == 1);
}

TEST_CASE("series and identities") {
  const double a[] = {1, 1}, b[] = {2};
  double value = 0;
  brt_series_info info;
  REQUIRE(brt_hypergeometric(a, 2, b, 1, -0.5, 1e-14, 1000000, &value, &info) == BRT_OK);
  CHECK(value == doctest::Approx(2 * std::log(1.5)).epsilon(1e-13));
  brt_series_class cls;
  REQUIRE(brt_hypergeometric_classify(a, 2, b, 1, 1.0, &cls) == BRT_OK);
  CHECK(cls == BRT_SERIES_DIVERGENT_AT_UNIT);
  CHECK(brt_hypergeometric(a, 2, b, 1, 1.0, 1e-14, 1000, &value, &info) == BRT_ERR_DIVERGENT);
  const double bad[] = {-2};
  CHECK(brt_hypergeometric(b, 1, bad, 1, 0.5, 1e-14, 1000, &value, &info) == BRT_ERR_INVALID_SPEC);

  brt_identity_report r;
  REQUIRE(brt_check_extended_dougall(4, -0.5, -0.5, -0.5, 1e-15, &r) == BRT_OK);
  CHECK(r.lhs == doctest::Approx(0.979333028580355).epsilon(1e-10));
  CHECK(r.rel_error < 1e-9);
  REQUIRE(brt_check_dougall(2, 0.5, 0.5, 0.5, 1e-15, &r) == BRT_OK);
  CHECK(r.rel_error < 1e-10);
  CHECK(brt_check_extended_dougall(4, 0, 0, 0, 1e-12, &r) == BRT_OK);
}

TEST_CASE("Monte Carlo") {
  brt_mc_options o;
  brt_mc_options_default(&o);
  CHECK(o.samples == 1000000);
  CHECK(o.seed == 0xB3A1);
  o.samples = 20000;
  brt_params* p = nullptr;
  REQUIRE(brt_params_create(1, 2, 2, 2, &p) == BRT_OK);
  brt_estimate e;
  REQUIRE(brt_estimate_In(p, &o, &e) == BRT_OK);
  CHECK(e.mean == doctest::Approx(8 * std::pow(kPi, 6)).epsilon(1e-13));
  CHECK(e.std_error == 0.0);
  brt_params_destroy(p);
  REQUIRE(brt_params_create(1, 0, 4, 4, &p) == BRT_OK);
  CHECK(brt_estimate_In(p, &o, &e) == BRT_ERR_DIVERGENT);
  brt_params_destroy(p);

  const double y[] = {1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0, 0};
  brt_estimate re, im;
  REQUIRE(brt_estimate_eigenvalue(1, 2, 0, -3, y, 4, &o, &re, &im) == BRT_OK);
  CHECK(std::fabs(re.mean + 8 * kPi / 15) < 5 * re.std_error);
  CHECK(brt_default_thread_count() >= 1);
}

TEST_CASE("geometry") {
  double g[2 * 4 * 4];
  REQUIRE(brt_random_compact_symplectic(2, 3, g, 32) == BRT_OK);
  CHECK(brt_random_compact_symplectic(2, 3, g, 31) == BRT_ERR_INVALID_ARGUMENT);
  const double x[] = {1, 0, 0, 0}, y[] = {0, 1, 0, 0};
  double w = 0;
  REQUIRE(brt_re_omega(1, x, y, 4, &w) == BRT_OK);
  CHECK(w == -1.0);
}

TEST_CASE("status strings") {
  CHECK(std::string(brt_status_string(BRT_OK)) == "ok");
  CHECK(std::string(brt_status_string(BRT_ERR_DIVERGENT)) == "divergent");
  CHECK(std::string(brt_version()) == "0.1.0");
}
