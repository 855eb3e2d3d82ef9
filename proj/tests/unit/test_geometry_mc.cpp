// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"
#include "kspectrum.hpp"
#include "monte_carlo.hpp"
#include "sampling.hpp"
#include "symplectic.hpp"
#include "triple_integral.hpp"

using namespace brt;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("geometry_mc") {

TEST_CASE("Philox4x32-10 known answers") {
  using C = Philox4x32::Counter;
  CHECK(Philox4x32::block({0, 0, 0, 0}, {0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::block({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::block({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("counter streams are reproducible and distinct") {
  CounterStream a(7, 0), b(7, 0), c(7, 1);
  bool same = true, differ = false;
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform(), y = b.uniform(), z = c.uniform();
    same = same && x == y;
    differ = differ || x != z;
    CHECK(x > 0.0);
    CHECK(x < 1.0);
  }
  CHECK(same);
  CHECK(differ);
}

TEST_CASE("sphere sampler") {
  const auto pts = sample_sphere(12, 1000, 3);
  CHECK(pts.size() == 1000);
  for (const auto& p : pts) {
    double r2 = 0;
    for (double v : p) r2 += v * v;
    CHECK(std::fabs(std::sqrt(r2) - 1.0) < 1e-12);
  }
  RunningStats first, square;
  SphereSampler s(4, 11);
  RealVector x(4);
  const int count = 200000;
  for (int i = 0; i < count; ++i) {
    s.next(x);
    first.add(x[0]);
    square.add(x[0] * x[0]);
  }
  CHECK(std::fabs(first.mean()) < 4 * std::sqrt(first.variance() / count));
  CHECK(std::fabs(square.mean() - 0.25) < 4 * std::sqrt(square.variance() / count));
}

TEST_CASE("running stats merge matches a single pass") {
  RunningStats all, left, right;
  for (int i = 0; i < 100; ++i) {
    const double v = std::sin(i * 0.37) * 10 + i * 0.01;
    all.add(v);
    (i < 37 ? left : right).add(v);
  }
  left.merge(right);
  CHECK(left.count() == all.count());
  CHECK(left.mean() == doctest::Approx(all.mean()).epsilon(1e-14));
  CHECK(left.variance() == doctest::Approx(all.variance()).epsilon(1e-13));
}

TEST_CASE("symplectic form") {
  const RealVector x{1, 0, 0, 0}, y{0, 1, 0, 0};  // X = (1, 0), Y = (0, 1)
  CHECK(re_omega(1, x, y) == -1.0);
  CHECK(re_omega(1, y, x) == 1.0);
  CHECK_THROWS_AS(re_omega(1, x, RealVector{1, 0}), Error);
  const ComplexVector cx = to_complex(x), cy = to_complex(y);
  CHECK(omega(cx, cy).real() == -1.0);
  CHECK(to_real(cx) == x);
}

TEST_CASE("is_symplectic") {
  CHECK(is_symplectic(ComplexMatrix::identity(4), 1e-12));
  CHECK(is_symplectic(symplectic_form_matrix(2), 1e-12));
  ComplexMatrix d = ComplexMatrix::identity(4);
  d(0, 0) = 2.0;
  CHECK_FALSE(is_symplectic(d, 1e-12));
  CHECK_THROWS_AS(is_symplectic(ComplexMatrix::identity(3), 1e-12), Error);
}

TEST_CASE("random compact symplectic elements") {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const ComplexMatrix g = random_compact_symplectic(n, seed);
      CHECK(is_symplectic(g, 1e-10));
      CHECK(is_unitary(g, 1e-10));
    }
  }
  const ComplexMatrix g = random_compact_symplectic(2, 9);
  const auto p = sample_sphere(8, 2, 5);
  CHECK(re_omega(2, act(g, p[0]), act(g, p[1])) == doctest::Approx(re_omega(2, p[0], p[1])).epsilon(1e-12));
}

TEST_CASE("kernel") {
  const KernelTriple k{{0, 0, 0}};
  const auto p = sample_sphere(4, 3, 1);
  CHECK(k(1, p[0], p[1], p[2]) == 1.0);
  CHECK(k.absolutely_convergent());
  CHECK_FALSE(KernelTriple{{-1.0, 1, 1}}.absolutely_convergent());
}

TEST_CASE("estimate_In") {
  MonteCarloOptions o;
  o.samples = 5000;
  o.threads = 2;
  const Estimate flat = estimate_In(TripleParams(1, 2, 2, 2), o);
  CHECK(flat.mean == doctest::Approx(8 * std::pow(kPi, 6)).epsilon(1e-13));
  CHECK(flat.std_error == 0.0);
  o.samples = 200000;
  const Estimate e = estimate_In(TripleParams(1, 4, 4, 4), o);
  CHECK(std::fabs(e.mean - 15 * std::pow(kPi, 5) / 8) < 4 * e.std_error);
  CHECK(e.seed == kDefaultSeed);
  CHECK(e.samples == 200000);
}

TEST_CASE("estimate_In refusals") {
  MonteCarloOptions o;
  o.samples = 1000;
  try {
    estimate_In(TripleParams(1, -1, 4, 4), o);
    FAIL("expected divergent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::divergent);
    CHECK(std::string(e.what()).find("2n - 2") != std::string::npos);
  }
  try {
    estimate_In(TripleParams(1, 1, 4, 4), o);
    FAIL("expected variance refusal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::variance);
  }
  o.force = true;
  const Estimate forced = estimate_In(TripleParams(1, 1, 4, 4), o);
  CHECK_FALSE(forced.warning.empty());
}

TEST_CASE("thread count does not change the estimate") {
  MonteCarloOptions o;
  o.samples = 100000;
  o.batch_size = 4096;
  o.threads = 1;
  const Estimate a = estimate_In(TripleParams(2, 6, 7, 8), o);
  o.threads = 3;
  const Estimate b = estimate_In(TripleParams(2, 6, 7, 8), o);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("intertwiner eigenvalue") {
  MonteCarloOptions o;
  o.samples = 400000;
  const double r = 1 / std::sqrt(2.0);
  const ComplexEstimate e = estimate_intertwiner_eigenvalue(1, 2, 0, -3, RealVector{r, r, 0, 0}, o);
  CHECK(std::fabs(e.real.mean + 8 * kPi / 15) < 4 * e.real.std_error);
  // A different base point gives the same eigenvalue.
  const ComplexEstimate f = estimate_intertwiner_eigenvalue(1, 2, 0, -3, RealVector{0.6, 0.0, 0.0, 0.8}, o);
  CHECK(std::fabs(e.real.mean - f.real.mean) <
        3 * std::hypot(e.real.std_error, f.real.std_error) + 1e-12);
  try {
    estimate_intertwiner_eigenvalue(1, 2, 0, -3, RealVector{1, 0, 0, 0}, o);
    FAIL("expected base point error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::base_point);
  }
  try {
    estimate_intertwiner_eigenvalue(1, 2, 0, -1, RealVector{r, r, 0, 0}, o);
    FAIL("expected variance refusal");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::variance);
  }
}

TEST_CASE("n=2 intertwiner on V^{1,1} has eigenvalue -A_2") {
  MonteCarloOptions o;
  o.samples = 500000;
  const double r = 1 / std::sqrt(2.0);
  const RealVector y{0, r, r, 0, 0, 0, 0, 0};  // z_2 = w_1 = 1/sqrt2
  const ComplexEstimate e = estimate_intertwiner_eigenvalue(2, 1, 1, -5.5, y, o);
  const double a = eigenvalue_A({2, 1, 1, -5.5}).to_real();
  CHECK(std::fabs(e.real.mean + a) < 4 * e.real.std_error);
  CHECK(std::fabs(e.real.mean - a) > 20 * e.real.std_error);
}

}  // TEST_SUITE
