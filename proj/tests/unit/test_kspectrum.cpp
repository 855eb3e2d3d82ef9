// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "errors.hpp"
#include "kspectrum.hpp"

using namespace brt;

namespace {
constexpr double kPi = std::numbers::pi;
double A(int n, int l, int lp, double lambda) { return eigenvalue_A({n, l, lp, lambda}).to_real(); }
}  // namespace

TEST_SUITE("kspectrum") {

TEST_CASE("eigenvalues against frozen values") {
  CHECK(A(1, 2, 0, -3) == doctest::Approx(-8 * kPi / 15).epsilon(1e-14));
  CHECK(eigenvalue_A({1, 2, 0, -2}).is_zero());
  CHECK(A(1, 0, 0, -3) == doctest::Approx(2 * std::pow(kPi, 1.5) / std::tgamma(2.5)).epsilon(1e-14));
  CHECK(A(1, 4, 0, -3.5) == doctest::Approx(-0.11411167792005186533).epsilon(1e-13));
  CHECK(A(2, 0, 0, -5.5) == doctest::Approx(6.0065979659489881502).epsilon(1e-13));
  CHECK(A(2, 1, 1, -5.5) == doctest::Approx(-0.94841020514984023425).epsilon(1e-13));
  CHECK(A(2, 2, 0, -5.5) == doctest::Approx(-0.94841020514984023425).epsilon(1e-13));
  CHECK(A(2, 4, 2, -6.5) == doctest::Approx(0.0028264913509195708957).epsilon(1e-13));
  CHECK(A(3, 3, 1, -8.25) == doctest::Approx(0.0025934460153465913521).epsilon(1e-13));
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(eigenvalue_A({1, 2, 2, -3}), Error);
  CHECK_THROWS_AS(eigenvalue_A({2, 1, 2, -3}), Error);
  CHECK_THROWS_AS(eigenvalue_A({2, 2, 1, -3}), Error);
  CHECK_THROWS_AS(eigenvalue_A({0, 0, 0, -3}), Error);
}

TEST_CASE("A0 and A2m") {
  CHECK(eigenvalue_A0(1, -3).to_real() == doctest::Approx(2 * std::pow(kPi, 1.5) / std::tgamma(2.5)).epsilon(1e-14));
  CHECK(eigenvalue_A0(2, 4).is_zero());
  CHECK(eigenvalue_A2m(1, 1, -3).to_real() == doctest::Approx(-8 * kPi / 15).epsilon(1e-14));
  CHECK(eigenvalue_A2m(3, 0, -7.5).to_real() == eigenvalue_A0(3, -7.5).to_real());
  for (int m = 0; m <= 40; ++m) {
    CAPTURE(m);
    CHECK(eigenvalue_A2m(2, m, -5.75).to_real() == doctest::Approx(A(2, 2 * m, 0, -5.75)).epsilon(1e-12));
  }
  // n - mu/2 a nonpositive integer: Gamma form takes over.
  CHECK(eigenvalue_A2m(1, 3, 4).to_real() == doctest::Approx(A(1, 6, 0, 4)).epsilon(1e-12));
}

TEST_CASE("dimension sums") {
  CHECK(dim_sum(1, 3) == 7);
  CHECK(dim_sum(2, 1) == 15);
  for (int n = 1; n <= 6; ++n) CHECK(dim_sum(n, 0) == 1);
  const int n2[] = {1, 15, 84, 300, 825, 1911};
  for (int m = 0; m < 6; ++m) CHECK(dim_sum(2, m) == n2[m]);
  CHECK(dim_sum(5, 20) == BigInt("52595057540025"));
  CHECK(dim_sum(8, 100) == BigInt("1400899788070006279822437212206659216"));
}

TEST_CASE("K-type dimensions") {
  CHECK(dim_ktype(2, 2, 0) == 10);
  CHECK(dim_ktype(2, 1, 1) == 5);
  CHECK(dim_ktype(1, 6, 0) == 7);
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= 15; ++m) {
      BigInt total = 0;
      for (int lp = 0; lp <= (n == 1 ? 0 : m); ++lp) total += dim_ktype(n, 2 * m - lp, lp);
      CAPTURE(n);
      CAPTURE(m);
      CHECK(total == dim_sum(n, m));
    }
  }
  const int signed_n2[] = {1, 5, 14, 30, 55};
  for (int m = 0; m < 5; ++m) CHECK(signed_dim_sum(2, m) == signed_n2[m]);
  for (int m = 0; m < 10; ++m) CHECK(signed_dim_sum(1, m) == dim_sum(1, m));
}

TEST_CASE("brute-force dimensions") {
  CHECK(dim_hmm_bruteforce(2, 1) == 15);
  CHECK(dim_hmm_bruteforce(1, 2) == 5);
  CHECK(dim_hmm_bruteforce(1, 0) == 1);
  CHECK(dim_hmm_bruteforce(3, 2) == dim_sum(3, 2));
  try {
    dim_hmm_bruteforce(4, 1);
    FAIL("expected size limit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::size_limit);
  }
}

TEST_CASE("Pochhammer factorizations") {
  CHECK(pochhammer_factorizations_check(2, 3).all());
  const auto zero = pochhammer_factorizations_check(4, 0);
  CHECK(zero.all());
  CHECK(zero.dimsum_value == 1);
  const auto n1 = pochhammer_factorizations_check(1, 5);
  CHECK(n1.all());
  CHECK(n1.dimsum_value == 11);
}

TEST_CASE("highest weight polynomial") {
  const double r = 1 / std::sqrt(2.0);
  const std::complex<double> p1[] = {r, r};
  CHECK(std::abs(hw_polynomial_eval(1, 2, 0, p1) - 0.5) < 1e-15);
  const std::complex<double> w0[] = {0.3, {0.1, 0.4}, 0, 0};
  CHECK(std::abs(hw_polynomial_eval(2, 4, 0, w0)) == 0.0);
  const std::complex<double> p2[] = {1, 0, 0, 1};
  CHECK(std::abs(hw_polynomial_eval(2, 1, 1, p2) - (-1.0)) < 1e-15);
  CHECK_THROWS_AS(hw_polynomial_eval(1, 1, 1, p1), Error);
}

TEST_CASE("spectral phase") {
  for (int k = 0; k <= 20; k += 2) CHECK(spectral_phase(k) == std::pair<int, int>{1, 0});
}

}  // TEST_SUITE
