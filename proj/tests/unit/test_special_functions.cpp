// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "compensated.hpp"
#include "special_functions.hpp"

using namespace brt;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("special_functions") {

TEST_CASE("log_gamma_signed at half integers and poles") {
  const auto half = log_gamma_signed(0.5);
  CHECK(half.log_magnitude == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-15));
  CHECK(half.sign == 1);
  const auto minus_half = log_gamma_signed(-0.5);
  CHECK(minus_half.log_magnitude == doctest::Approx(std::log(2.0 * std::sqrt(kPi))).epsilon(1e-15));
  CHECK(minus_half.sign == -1);
  CHECK(log_gamma_signed(0.0).pole);
  CHECK(log_gamma_signed(-3.0).pole);
  CHECK(log_gamma_signed(-3.0 + 1e-14).pole);  // snapped to the integer
  CHECK(std::isnan(log_gamma_signed(-2.0).to_real()));
}

TEST_CASE("log_gamma_signed against frozen high-precision values") {
  struct Ref {
    double x, log_abs;
    int sign;
  };
  const Ref refs[] = {
      {-1.5, 0.86004701537648101451, 1},     {-2.25, 0.55550154502064747059, -1},
      {-7.3, -7.7791016298268516713, 1},     {-40.7, -111.56091816158815346, -1},
      {0.001, 6.9071788853838536617, 1},     {3.3, 0.98709857789473440406, 1},
      {25.5, 56.389167643719946744, 1},      {171.5, 709.14316303092824227, 1},
      {1e5, 1051287.7089736568949, 1},
  };
  for (const auto& r : refs) {
    CAPTURE(r.x);
    const auto v = log_gamma_signed(r.x);
    CHECK(std::fabs(v.log_magnitude - r.log_abs) <= 2e-15 * std::max(1.0, std::fabs(r.log_abs)));
    CHECK(v.sign == r.sign);
  }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(-7.25, 0) == 1.0);
  CHECK(pochhammer(3.0, 4) == 360.0);
  CHECK(pochhammer(1.0, 5) == 120.0);
  CHECK(pochhammer(-4.0, 3) == -24.0);
  CHECK(pochhammer(-4.0, 5) == 0.0);
  CHECK(pochhammer(-3.5, 7) == doctest::Approx(12.3046875).epsilon(1e-15));
  CHECK(pochhammer(2.25, 12) == doctest::Approx(10559811664.258338511).epsilon(1e-14));
  const auto big = pochhammer_signed(0.5, 10000);
  CHECK(big.sign == 1);
  CHECK(big.log_magnitude ==
        doctest::Approx(std::lgamma(10000.5) - std::lgamma(0.5)).epsilon(1e-14));
  CHECK(pochhammer_signed(-4.0, 5).is_zero());
  CHECK(pochhammer_signed(-4.5, 3).sign == -1);
}

TEST_CASE("gamma_ratio") {
  CHECK(gamma_ratio(3.5, 0.5).to_real() == doctest::Approx(15.0 / 8.0).epsilon(1e-15));
  CHECK(gamma_ratio(1.0, 0.0).is_zero());
  CHECK(gamma_ratio(2.5, 2.5).to_real() == 1.0);
  CHECK(gamma_ratio(0.0, 1.0).pole);
  // Both on poles: residue ratio Gamma(-3)/Gamma(-1) -> (-1)^2 1!/3!.
  CHECK(gamma_ratio(-3.0, -1.0).to_real() == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("gamma_quotient pairs poles") {
  const double num[] = {-2.0, 4.0};
  const double den[] = {-1.0, 3.0};
  // Gamma(-2)/Gamma(-1) = -1/2, Gamma(4)/Gamma(3) = 3.
  CHECK(gamma_quotient(num, den).to_real() == doctest::Approx(-1.5).epsilon(1e-14));
  const double num2[] = {-2.0, -5.0};
  const double den2[] = {-1.0};
  CHECK(gamma_quotient(num2, den2).pole);
  const double num3[] = {2.5};
  const double den3[] = {-1.0, 1.5};
  CHECK(gamma_quotient(num3, den3).is_zero());
}

TEST_CASE("SignedLogValue arithmetic") {
  const auto a = SignedLogValue::from_real(-3.0);
  const auto b = SignedLogValue::from_real(0.5);
  CHECK((a * b).to_real() == doctest::Approx(-1.5));
  CHECK((a / b).to_real() == doctest::Approx(-6.0));
  CHECK(SignedLogValue::from_real(0.0).is_zero());
  CHECK((a / SignedLogValue::make_pole()).is_zero());
  CHECK((SignedLogValue::make_pole() / a).pole);
  CHECK((SignedLogValue::make_pole() * SignedLogValue::zero()).pole);
  const SignedLogValue huge{800.0, 1, false};
  CHECK((huge / SignedLogValue{799.0, 1, false}).to_real() == doctest::Approx(std::exp(1.0)));
}

TEST_CASE("sin_pi exact at integers and half integers") {
  CHECK(sin_pi(3.0) == 0.0);
  CHECK(sin_pi(-7.0) == 0.0);
  CHECK(sin_pi(0.5) == 1.0);
  CHECK(sin_pi(1.5) == -1.0);
  CHECK(sin_pi(0.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("compensated summation") {
  CompensatedSum s;
  s += 1.0;
  for (int i = 0; i < 1000; ++i) s += 1e-16;
  s += -1.0;
  CHECK(s.value() == doctest::Approx(1e-13).epsilon(1e-12));
  CompensatedSum t;
  t += 1e100;
  t += 1.0;
  t += -1e100;
  CHECK(t.value() == 1.0);
}

}  // TEST_SUITE
