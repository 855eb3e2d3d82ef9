// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "identities.hpp"

using namespace brt;

TEST_SUITE("identities") {

TEST_CASE("Dougall closed side") {
  CHECK(dougall_ramanujan_rhs({2, 0, 0, 0}).to_real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(dougall_ramanujan_rhs({1, 0, 0, 0}).to_real() == doctest::Approx(1.0).epsilon(1e-15));
  const double g52 = std::tgamma(2.5), g72 = std::tgamma(3.5);
  const double expected = g52 * g52 * g52 * g72 / (1.0 * 8.0);
  CHECK(dougall_ramanujan_rhs({2, 0.5, 0.5, 0.5}).to_real() == doctest::Approx(expected).epsilon(1e-14));
  CHECK(expected == doctest::Approx(0.975876411728806211).epsilon(1e-15));
}

TEST_CASE("Dougall series side") {
  const IdentityReport r = check_identity(DougallRamanujanInstance{2, 0.5, 0.5, 0.5}, 1e-15);
  CHECK(r.lhs == doctest::Approx(0.975876411728806211).epsilon(1e-10));
  CHECK(r.rel_error < 1e-10);
  CHECK(check_identity(DougallRamanujanInstance{2, 0, 0, 0}).rel_error < 1e-15);
}

TEST_CASE("kappa") {
  CHECK(fatawat_vyas_kappa({4, -0.5, -0.5, -0.5}) == doctest::Approx(71.0 / 256.0).epsilon(1e-15));
  CHECK(fatawat_vyas_kappa({4, -1, -1, -1}) == doctest::Approx(0.22).epsilon(1e-15));
  CHECK(fatawat_vyas_kappa_limit(4, 0, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(fatawat_vyas_kappa_limit(2, 0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  const double near = fatawat_vyas_kappa({4, -1e-7, -0.5, -0.5});
  CHECK(near == doctest::Approx(fatawat_vyas_kappa_limit(4, -0.5, -0.5)).epsilon(1e-6));
  CHECK_THROWS_AS(fatawat_vyas_kappa({4, 0, 0, 0}), Error);
}

TEST_CASE("extended Dougall closed side") {
  const double g = std::tgamma(4.5);
  const double spot = g * g * g * g / 5184.0 * 71.0 / 256.0;
  CHECK(fatawat_vyas_rhs({4, -0.5, -0.5, -0.5}).to_real() == doctest::Approx(spot).epsilon(1e-14));
  CHECK(spot == doctest::Approx(0.979333028580355488876).epsilon(1e-15));
  CHECK(fatawat_vyas_rhs({4, -1, -1, -1}).to_real() == doctest::Approx(0.88).epsilon(1e-14));
  CHECK(fatawat_vyas_rhs({4, 0, 0, 0}).to_real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("extended Dougall series side") {
  const IdentityReport spot = check_identity(FatawatVyasInstance{4, -0.5, -0.5, -0.5}, 1e-15);
  CHECK(spot.rel_error < 1e-9);
  CHECK(spot.lhs == doctest::Approx(0.979333028580355488876).epsilon(1e-10));
  const IdentityReport exact = check_identity(FatawatVyasInstance{4, -1, -1, -1});
  CHECK(exact.lhs == doctest::Approx(0.88).epsilon(1e-15));
  CHECK(exact.series.status == EvalStatus::terminated_exactly);
  CHECK(exact.series.terms_used == 2);
}

TEST_CASE("variant dispatch") {
  const IdentityInstance a = DougallRamanujanInstance{2, 0.1, -0.3, 0.2};
  const IdentityInstance b = FatawatVyasInstance{5, 0.4, -0.2, 0.3};
  CHECK(check_identity(a).rel_error < 1e-9);
  CHECK(check_identity(b).rel_error < 1e-9);
}

TEST_CASE("relative_difference") {
  CHECK(relative_difference(1.0, 1.0) == 0.0);
  CHECK(relative_difference(0.0, 0.0) == 0.0);
  CHECK(relative_difference(1.0, 1.1) == doctest::Approx(0.1 / 1.1));
}

}  // TEST_SUITE
