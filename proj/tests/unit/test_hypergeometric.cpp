// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "hypergeometric.hpp"
#include "identities.hpp"
#include "triple_integral.hpp"

using namespace brt;

TEST_SUITE("hypergeometric") {

TEST_CASE("classify") {
  CHECK(classify({{1, 1}, {3}, 1.0}) == SeriesClass::convergent_at_unit);
  CHECK(classify(theorem1_series_spec(TripleParams(1, 4, 4, 4))) == SeriesClass::convergent_at_unit);
  CHECK(classify({{-3, 2.5, 7}, {1.5, 0.25}, 1.0}) == SeriesClass::terminating);
  CHECK(classify({{1, 1}, {1.5}, 1.0}) == SeriesClass::divergent_at_unit);
  CHECK(classify({{1, 1}, {1.5}, 0.5}) == SeriesClass::convergent_inside_disk);
  CHECK(classify({{1, 1}, {1.5}, 1.5}) == SeriesClass::divergent_at_unit);
  CHECK(classify({{1, 1, 1}, {1.5}, 0.1}) == SeriesClass::divergent_at_unit);
  CHECK(classify({{1.5}, {2.5}, 3.0}) == SeriesClass::convergent_at_unit);
}

TEST_CASE("denominator pole rule") {
  CHECK_THROWS_AS(classify({{1.0}, {-2.0}, 0.5}), Error);
  try {
    evaluate({{0.5}, {-2.0}, 0.5});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_spec);
  }
  // Allowed: the series stops before the denominator vanishes.
  CHECK_NOTHROW(classify({{-1.0, 2.0}, {-3.0}, 1.0}));
  CHECK_THROWS_AS(classify({{-3.0, 2.0}, {-3.0}, 1.0}), Error);
}

TEST_CASE("divergent series are refused") {
  try {
    evaluate({{1, 1}, {1.5}, 1.0});
    FAIL("expected a divergent error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::divergent);
  }
}

TEST_CASE("frozen values") {
  CHECK(evaluate({{0.3, 0.7}, {2.5}, 0.6}, 1e-15).value == doctest::Approx(1.0640219201673673593).epsilon(1e-14));
  CHECK(evaluate({{1, 1}, {2}, -0.5}, 1e-15).value == doctest::Approx(std::log(1.5) / 0.5).epsilon(1e-13));
  CHECK(evaluate({{1.5}, {2.5}, 3.0}, 1e-15).value == doctest::Approx(7.9316624651495779165).epsilon(1e-14));
  CHECK(evaluate({{}, {}, -2.0}, 1e-15).value == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
  CHECK(evaluate({{0.2, 0.4, 1.1, 0.7}, {1.3, 2.2, 1.9}, 1.0}).value ==
        doctest::Approx(1.0137081976404194576).epsilon(1e-11));
  CHECK(evaluate({{1.2, 0.8, 1.5}, {2.0, 2.1}, 1.0}).value ==
        doctest::Approx(2.3786218706272317795).epsilon(1e-11));
  CHECK(evaluate({{0.5, 0.5, 0.5}, {1, 1}, 1.0}).value ==
        doctest::Approx(1.3932039296856768592).epsilon(1e-10));
}

TEST_CASE("terminating series") {
  const EvalResult r = evaluate({{-4, 2, 3}, {5, 6}, 1.0});
  CHECK(r.status == EvalStatus::terminated_exactly);
  CHECK(r.terms_used == 5);
  CHECK(r.value == doctest::Approx(0.46972789115646258503).epsilon(1e-15));
  const EvalResult zero = evaluate(dougall_ramanujan_series({2, 0, 0, 0}));
  CHECK(zero.value == 1.0);
  CHECK(zero.terms_used == 1);
}

TEST_CASE("max_terms is a status, not an error") {
  const EvalResult r = evaluate({{0.5, 0.5}, {1.01}, 1.0}, 1e-15, 100);
  CHECK(r.status == EvalStatus::max_terms_reached);
  CHECK(r.terms_used == 100);
}

TEST_CASE("Gauss summation with slow algebraic decay") {
  for (double s : {0.55, 0.8, 1.3, 2.0}) {
    const double a = 0.7, b = 1.9, c = a + b + s;
    const double num[] = {c, s};
    const double den[] = {c - a, c - b};
    CAPTURE(s);
    CHECK(evaluate({{a, b}, {c}, 1.0}, 1e-14).value ==
          doctest::Approx(gamma_quotient(num, den).to_real()).epsilon(1e-10));
  }
}

TEST_CASE("parameter order does not change the sum") {
  const double v1 = evaluate({{0.2, 0.4, 1.1, 0.7}, {1.3, 2.2, 1.9}, 1.0}).value;
  const double v2 = evaluate({{1.1, 0.7, 0.4, 0.2}, {2.2, 1.9, 1.3}, 1.0}).value;
  CHECK(v1 == v2);
}

TEST_CASE("to_string") {
  CHECK(to_string(SeriesClass::terminating) == "terminating");
  CHECK(to_string(EvalStatus::max_terms_reached) == "max_terms_reached");
}

}  // TEST_SUITE
