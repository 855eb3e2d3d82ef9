// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#include "verification.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"
#include "hypergeometric.hpp"
#include "identities.hpp"
#include "kspectrum.hpp"
#include "monte_carlo.hpp"
#include "sampling.hpp"
#include "special_functions.hpp"
#include "symplectic.hpp"
#include "triple_integral.hpp"

namespace brt {

namespace {

constexpr double kPi = std::numbers::pi;

// Streams of the verification seed, one per suite, so suites do not share
// random draws.
enum Stream : std::uint64_t {
  kStreamN1 = 101,
  kStreamN2,
  kStreamDougall,
  kStreamFatawat,
  kStreamGammaRecurrence,
  kStreamDuplication,
  kStreamHarmonic,
  kStreamSymplectic,
  kStreamGauss,
  kStreamTerminating,
  kStreamPrefactor,
  kStreamSpectrum,
  kStreamLanczos,
  kStreamSymmetry,
};

class Uniform {
 public:
  Uniform(std::uint64_t seed, std::uint64_t stream) : rng_(seed, stream) {}
  double operator()(double lo, double hi) { return lo + (hi - lo) * rng_.uniform(); }

 private:
  CounterStream rng_;
};

Check below(std::string name, double measured, double tolerance, std::string detail = {}) {
  Check c;
  c.name = std::move(name);
  c.measured = measured;
  c.tolerance = tolerance;
  c.passed = std::isfinite(measured) && measured < tolerance;
  c.detail = std::move(detail);
  return c;
}

Check holds(std::string name, bool ok, std::string detail = {}) {
  Check c;
  c.name = std::move(name);
  c.measured = ok ? 0.0 : 1.0;
  c.tolerance = 0.5;
  c.passed = ok;
  c.detail = std::move(detail);
  return c;
}

std::string describe(std::initializer_list<std::pair<const char*, double>> values) {
  std::ostringstream s;
  s.precision(12);
  bool first = true;
  for (const auto& [k, v] : values) {
    if (!first) s << ' ';
    s << k << '=' << v;
    first = false;
  }
  return s.str();
}

std::uint64_t mc_samples(const VerifyConfig& config) {
  return config.level == VerifyLevel::full ? 10'000'000ULL : 1'000'000ULL;
}

MonteCarloOptions mc_options(const VerifyConfig& config) {
  MonteCarloOptions o;
  o.samples = mc_samples(config);
  o.seed = config.seed;
  o.threads = config.threads;
  return o;
}

double volume_cubed_oracle(int n) {
  // Surface area of S^{4n-1} from std::tgamma, independent of the library's
  // own log-Gamma.
  const double v = 2.0 * std::pow(kPi, 2.0 * n) / std::tgamma(2.0 * n);
  return v * v * v;
}

// ---------------------------------------------------------------- criteria

std::vector<Check> volume_identity(const VerifyConfig&) {
  std::vector<Check> checks;
  for (int n = 1; n <= 4; ++n) {
    const TripleParams p(n, 2.0 * n, 2.0 * n, 2.0 * n);
    const double value = closed_form_In(p).value.to_real();
    const double oracle = volume_cubed_oracle(n);
    checks.push_back(below("closed_form_In(n,2n,2n,2n) vs vol(S^{4n-1})^3, n=" + std::to_string(n),
                           relative_difference(value, oracle), 1e-12,
                           describe({{"closed", value}, {"volume_cubed", oracle}})));
  }
  return checks;
}

std::vector<Check> n1_triangle(const VerifyConfig& config) {
  std::vector<Check> checks;
  Uniform draw(config.seed, kStreamN1);
  double worst_trace = 0.0, worst_n1 = 0.0, worst_pair = 0.0;
  bool all_converged = true;
  for (int i = 0; i < 20; ++i) {
    const std::array<double, 3> mu{draw(-5, -2), draw(-5, -2), draw(-5, -2)};
    const TripleParams p = TripleParams::from_mu(1, mu);
    const double closed = closed_form_In(p, 1e-15).value.to_real();
    const TraceSeriesResult trace = tau_trace_series(p, 100'000, 1e-15);
    const double reduced = closed_form_n1(mu).to_real();
    all_converged = all_converged && trace.converged;
    worst_trace = std::max(worst_trace, relative_difference(closed, trace.value));
    worst_n1 = std::max(worst_n1, relative_difference(closed, reduced));
    worst_pair = std::max(worst_pair, relative_difference(trace.value, reduced));
  }
  checks.push_back(below("max rel |closed - trace| over 20 random mu in (-5,-2)^3", worst_trace, 1e-9));
  checks.push_back(below("max rel |closed - n1 reduction|", worst_n1, 1e-9));
  checks.push_back(below("max rel |trace - n1 reduction|", worst_pair, 1e-9));
  checks.push_back(holds("trace series converged for every instance", all_converged));
  const double spot = closed_form_In(TripleParams::from_mu(1, {-3, -3, -3}), 1e-15).value.to_real();
  const double expected = 15.0 * std::pow(kPi, 5) / 8.0;
  checks.push_back(below("mu=(-3,-3,-3) equals 15 pi^5/8", relative_difference(spot, expected),
                         1e-12, describe({{"closed", spot}, {"expected", expected}})));
  return checks;
}

std::vector<Check> n2_triangle(const VerifyConfig& config) {
  std::vector<Check> checks;
  Uniform draw(config.seed, kStreamN2);
  double worst_trace = 0.0, worst_corrected = 0.0, worst_ratio = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double a = draw(5, 9), b = draw(5, 9), c = draw(5, 9);
    const TripleParams p(2, a, b, c);
    const double closed = closed_form_In(p, 1e-15).value.to_real();
    const double trace = tau_trace_series(p, 100'000, 1e-15).value;
    const double corrected = closed_form_n2_corrected(a, b, c).to_real();
    const double printed = closed_form_n2_printed(a, b, c).to_real();
    const double restored = std::tgamma((a - 2) / 4) * std::tgamma((b - 2) / 4) * std::tgamma((c - 2) / 4);
    worst_trace = std::max(worst_trace, relative_difference(closed, trace));
    worst_corrected = std::max(worst_corrected, relative_difference(closed, corrected));
    worst_ratio = std::max(worst_ratio, relative_difference(closed / printed, restored));
  }
  checks.push_back(below("max rel |closed - trace| over 20 random (a,b,c) in (5,9)^3", worst_trace, 1e-9));
  checks.push_back(below("max rel |closed - corrected n2 reduction|", worst_corrected, 1e-9));
  checks.push_back(below("max rel |closed/printed - prod Gamma((t-2)/4)|", worst_ratio, 1e-9));
  const auto ratio_at = [](double t) {
    return closed_form_In(TripleParams(2, t, t, t)).value.to_real() / closed_form_n2_printed(t, t, t).to_real();
  };
  const double r6 = ratio_at(6.0);
  const double r8 = ratio_at(8.0);
  checks.push_back(below("closed/printed = 1 at a=b=c=6", std::fabs(r6 - 1.0), 1e-9, describe({{"ratio", r6}})));
  const double gamma_three_halves_cubed = std::pow(std::sqrt(kPi) / 2.0, 3);
  checks.push_back(below("closed/printed = Gamma(3/2)^3 ~ 0.69604 at a=b=c=8",
                         relative_difference(r8, gamma_three_halves_cubed), 1e-9,
                         describe({{"ratio", r8}})));
  return checks;
}

std::vector<Check> identity_suites(const VerifyConfig& config) {
  std::vector<Check> checks;
  {
    Uniform draw(config.seed, kStreamDougall);
    double worst = 0.0;
    int accepted = 0;
    while (accepted < 100) {
      const DougallRamanujanInstance d{2.0, draw(-0.9, 0.4), draw(-0.9, 0.4), draw(-0.9, 0.4)};
      if (parameter_excess(dougall_ramanujan_series(d)) <= 0.5) continue;
      worst = std::max(worst, check_identity(d, 1e-14).rel_error);
      ++accepted;
    }
    checks.push_back(below("Dougall 5F4: max rel error over 100 random instances", worst, 1e-9));
  }
  {
    Uniform draw(config.seed, kStreamFatawat);
    double worst = 0.0;
    int accepted = 0;
    while (accepted < 100) {
      const double sign = draw(0, 1) < 0.5 ? -1.0 : 1.0;
      const FatawatVyasInstance inst{draw(3.5, 6.0), sign * draw(0.1, 1.0), draw(-1, 1), draw(-1, 1)};
      if (parameter_excess(fatawat_vyas_series(inst)) <= 0.5) continue;
      worst = std::max(worst, check_identity(inst, 1e-14).rel_error);
      ++accepted;
    }
    checks.push_back(below("extended Dougall 6F5: max rel error over 100 random instances", worst, 1e-9));
  }
  const IdentityReport spot = check_identity(FatawatVyasInstance{4.0, -0.5, -0.5, -0.5}, 1e-15);
  checks.push_back(below("spot f=4, u=v=w=-1/2: series vs closed side", spot.rel_error, 1e-9,
                         describe({{"lhs", spot.lhs}, {"rhs", spot.rhs}})));
  checks.push_back(below("spot f=4, u=v=w=-1/2: value ~ 0.979333", std::fabs(spot.lhs - 0.979333), 5e-7));
  return checks;
}

std::vector<Check> monte_carlo_vs_closed(const VerifyConfig& config) {
  std::vector<Check> checks;
  const auto run = [&](const TripleParams& p, const std::string& label) {
    const auto start = std::chrono::steady_clock::now();
    const Estimate e = estimate_In(p, mc_options(config));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double reference = closed_form_In(p).value.to_real();
    const double z = std::fabs(e.mean - reference) / e.std_error;
    // Diagnostic only: the K-type trace with (-1)^{l'} weights.
    const double signed_trace = tau_trace_series_signed(p, 100'000, 1e-14).value;
    checks.push_back(below(label + ": |MC - closed| / std_error", z, 3.0,
                           describe({{"mc_mean", e.mean},
                                     {"std_error", e.std_error},
                                     {"closed", reference},
                                     {"samples", static_cast<double>(e.samples)},
                                     {"signed_trace", signed_trace},
                                     {"z_signed_trace", (e.mean - signed_trace) / e.std_error}})));
    checks.push_back(below(label + ": runtime seconds", seconds, 120.0));
  };
  run(TripleParams(1, 4, 4, 4), "n=1 a=b=c=4");
  run(TripleParams(2, 6, 6, 6), "n=2 a=b=c=6");
  return checks;
}

std::vector<Check> intertwiner_eigenvalue(const VerifyConfig& config) {
  std::vector<Check> checks;
  const double r = 1.0 / std::sqrt(2.0);
  const RealVector y{r, r, 0.0, 0.0};  // (z_1, w_1) = (1/sqrt2, 1/sqrt2)
  const MonteCarloOptions options = mc_options(config);

  const ComplexEstimate e3 = estimate_intertwiner_eigenvalue(1, 2, 0, -3.0, y, options);
  const double expected = -8.0 * kPi / 15.0;
  const double a3 = eigenvalue_A(SpectralQuery{1, 2, 0, -3.0}).to_real();
  checks.push_back(below("A(1,2,0,-3) = -8 pi/15", relative_difference(a3, expected), 1e-13));
  checks.push_back(below("lambda=-3: |MC - (-8 pi/15)| / std_error",
                         std::fabs(e3.real.mean - expected) / e3.real.std_error, 3.0,
                         describe({{"mc_mean", e3.real.mean}, {"std_error", e3.real.std_error}})));
  checks.push_back(below("lambda=-3: |imaginary part| / std_error",
                         std::fabs(e3.imag.mean) / e3.imag.std_error, 3.0));

  const ComplexEstimate e2 = estimate_intertwiner_eigenvalue(1, 2, 0, -2.0, y, options);
  checks.push_back(below("lambda=-2 control: |MC| / std_error", std::fabs(e2.real.mean) / e2.real.std_error,
                         3.0, describe({{"mc_mean", e2.real.mean}, {"std_error", e2.real.std_error}})));
  return checks;
}

std::vector<Check> dimension_oracle(const VerifyConfig&) {
  std::vector<Check> checks;
  bool brute_ok = true;
  std::string mismatch;
  for (int n = 1; n <= 3; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const BigInt formula = dim_sum(n, m);
      const std::int64_t brute = dim_hmm_bruteforce(n, m);
      if (formula != brute) {
        brute_ok = false;
        mismatch += "n=" + std::to_string(n) + ",m=" + std::to_string(m) + " ";
      }
    }
  }
  checks.push_back(holds("dim_sum = brute-force Laplacian kernel dimension, n<=3, m<=4", brute_ok, mismatch));
  checks.push_back(holds("n=2, m=1 gives 15", dim_hmm_bruteforce(2, 1) == 15 && dim_sum(2, 1) == 15));
  bool fact_ok = true;
  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= 20; ++m) fact_ok = fact_ok && pochhammer_factorizations_check(n, m).all();
  checks.push_back(holds("Pochhammer factorizations exact for n<=5, m<=20", fact_ok));
  return checks;
}

double laplacian_residual(int n, int l, int lp, std::span<const double> x) {
  // sum_j d^2/dz_j dzbar_j = (1/4) * real Laplacian on R^{4n}.
  constexpr double h = 1e-4;
  const auto p = [&](std::span<const double> v) { return hw_polynomial_eval(n, l, lp, to_complex(v)); };
  RealVector work(x.begin(), x.end());
  const std::complex<double> centre = p(work);
  std::complex<double> laplacian = 0.0;
  for (std::size_t i = 0; i < work.size(); ++i) {
    const double saved = work[i];
    work[i] = saved + h;
    const auto plus = p(work);
    work[i] = saved - h;
    const auto minus = p(work);
    work[i] = saved;
    laplacian += (plus - 2.0 * centre + minus) / (h * h);
  }
  return std::abs(laplacian) / 4.0;
}

std::vector<Check> property_suites(const VerifyConfig& config) {
  std::vector<Check> checks;
  {
    Uniform draw(config.seed, kStreamGammaRecurrence);
    double worst = 0.0;
    bool signs = true;
    for (int i = 0; i < 1000; ++i) {
      double x = draw(-50, 50);
      if (std::fabs(x - std::round(x)) < 1e-3) x += 0.01;
      const SignedLogValue next = log_gamma_signed(x + 1.0);
      const SignedLogValue scaled = SignedLogValue::from_real(x) * log_gamma_signed(x);
      signs = signs && next.sign == scaled.sign;
      // Relative error of the values is the absolute error of their logs.
      worst = std::max(worst, std::fabs(std::expm1(next.log_magnitude - scaled.log_magnitude)));
    }
    checks.push_back(below("Gamma(x+1) = x Gamma(x), 1000 x in (-50,50)", worst, 1e-12));
    checks.push_back(holds("Gamma recurrence signs agree", signs));
  }
  {
    Uniform draw(config.seed, kStreamDuplication);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double a = draw(-10, 10);
      for (int m = 0; m <= 20; ++m) {
        const double lhs = pochhammer(a, 2 * m);
        const double rhs = std::ldexp(pochhammer(a / 2, m) * pochhammer((a + 1) / 2, m), 2 * m);
        worst = std::max(worst, relative_difference(lhs, rhs));
      }
    }
    checks.push_back(below("(a)_2m = 4^m (a/2)_m ((a+1)/2)_m, a in (-10,10), m<=20", worst, 1e-12));
  }
  {
    double worst = 0.0;
    const std::array<std::array<int, 3>, 4> types{{{1, 2, 0}, {1, 4, 0}, {2, 1, 1}, {2, 3, 1}}};
    for (const auto& [n, l, lp] : types) {
      const auto points = sample_sphere(4 * n, 10, config.seed ^ kStreamHarmonic);
      for (const auto& x : points) worst = std::max(worst, laplacian_residual(n, l, lp, x));
    }
    checks.push_back(below("highest weight vectors are harmonic (finite differences, h=1e-4)", worst, 1e-6));
  }
  {
    double worst = 0.0;
    double worst_kernel = 0.0;
    for (int i = 0; i < 50; ++i) {
      const int n = 1 + i % 3;
      const ComplexMatrix g = random_compact_symplectic(n, config.seed + 1000 * kStreamSymplectic + i);
      const auto pts = sample_sphere(4 * n, 3, config.seed + 7 * i + 1);
      const double before = re_omega(n, pts[0], pts[1]);
      const double after = re_omega(n, act(g, pts[0]), act(g, pts[1]));
      worst = std::max(worst, std::fabs(before - after));
      const KernelTriple kernel{{0.5, 1.0, 1.5}};
      const double k0 = kernel(n, pts[0], pts[1], pts[2]);
      const double k1 = kernel(n, act(g, pts[0]), act(g, pts[1]), act(g, pts[2]));
      worst_kernel = std::max(worst_kernel, std::fabs(k0 - k1));
    }
    checks.push_back(below("Re w(gx, gy) = Re w(x, y) for 50 random g in Sp(n)", worst, 1e-10));
    checks.push_back(below("kernel(gx, gy, gz) = kernel(x, y, z)", worst_kernel, 1e-10));
  }
  {
    MonteCarloOptions o;
    o.samples = 300'000;
    o.batch_size = 1 << 14;
    o.seed = config.seed;
    o.threads = 1;
    const Estimate single = estimate_In(TripleParams(1, 4, 4, 4), o);
    o.threads = 4;
    const Estimate multi = estimate_In(TripleParams(1, 4, 4, 4), o);
    o.threads = 7;
    const Estimate odd = estimate_In(TripleParams(1, 4, 4, 4), o);
    const bool identical = single.mean == multi.mean && single.std_error == multi.std_error &&
                           single.mean == odd.mean && single.std_error == odd.std_error;
    checks.push_back(holds("estimator bit-identical for 1, 4 and 7 threads", identical,
                           describe({{"mean_1", single.mean}, {"mean_4", multi.mean}, {"mean_7", odd.mean}})));
  }
  return checks;
}

// --------------------------------------------------------------- invariants

std::vector<Check> lanczos_vs_libm(const VerifyConfig& config) {
  Uniform draw(config.seed, kStreamLanczos);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = std::exp(draw(std::log(1e-3), std::log(170.0)));
    worst = std::max(worst, std::fabs(log_gamma_signed(x).log_magnitude - std::lgamma(x)) /
                                std::max(1.0, std::fabs(std::lgamma(x))));
  }
  return {below("log Gamma agrees with libm lgamma on (1e-3, 170)", worst, 1e-13)};
}

std::vector<Check> gauss_summation(const VerifyConfig& config) {
  Uniform draw(config.seed, kStreamGauss);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double a = draw(-2, 3), b = draw(-2, 3);
    const double c = a + b + 0.5 + draw(0.0, 3.0);
    const SeriesSpec spec{{a, b}, {c}, 1.0};
    const double value = evaluate(spec, 1e-14).value;
    const double num[] = {c, c - a - b};
    const double den[] = {c - a, c - b};
    worst = std::max(worst, relative_difference(value, gamma_quotient(num, den).to_real()));
  }
  return {below("2F1(a,b;c;1) = Gauss Gamma quotient, c-a-b > 0.5", worst, 1e-9)};
}

std::vector<Check> terminating_bruteforce(const VerifyConfig& config) {
  Uniform draw(config.seed, kStreamTerminating);
  double worst = 0.0;
  bool bit_identical = true;
  for (int i = 0; i < 100; ++i) {
    const int terms = 1 + static_cast<int>(draw(0, 30));
    SeriesSpec spec{{-static_cast<double>(terms - 1), draw(-3, 3), draw(0.5, 4)},
                    {draw(0.5, 4), draw(0.5, 4)},
                    draw(-1, 1)};
    const double value = evaluate(spec).value;
    double brute = 0.0;
    double magnitude = 0.0;
    double factorial = 1.0;
    for (int k = 0; k < terms; ++k) {
      if (k > 0) factorial *= k;
      double t = std::pow(spec.argument, k) / factorial;
      for (double a : spec.numerators) t *= pochhammer(a, k);
      for (double b : spec.denominators) t /= pochhammer(b, k);
      brute += t;
      magnitude += std::fabs(t);
    }
    // Scaled by sum |t_k|: both sides carry the same cancellation.
    worst = std::max(worst, std::fabs(value - brute) / magnitude);
    SeriesSpec shuffled = spec;
    std::rotate(shuffled.numerators.begin(), shuffled.numerators.begin() + 1, shuffled.numerators.end());
    std::swap(shuffled.denominators[0], shuffled.denominators[1]);
    bit_identical = bit_identical && evaluate(shuffled).value == value;
  }
  return {below("terminating series vs term-by-term Pochhammer sums, relative to sum |t_k|", worst, 1e-13),
          holds("parameter permutations give bit-identical sums", bit_identical)};
}

std::vector<Check> closed_form_invariants(const VerifyConfig& config) {
  Uniform draw(config.seed, kStreamPrefactor);
  double worst_prefactor = 0.0;
  double worst_symmetry = 0.0;
  for (int i = 0; i < 30; ++i) {
    const int n = 1 + i % 4;
    const double lo = 2.0 * n - 1.0;
    const std::array<double, 3> t{draw(lo, lo + 5), draw(lo, lo + 5), draw(lo, lo + 5)};
    const TripleParams p(n, t[0], t[1], t[2]);
    const auto mu = p.mu();
    const double a = prefactor_A(p).to_real();
    const double b = (eigenvalue_A0(n, mu[0]) * eigenvalue_A0(n, mu[1]) * eigenvalue_A0(n, mu[2])).to_real();
    worst_prefactor = std::max(worst_prefactor, relative_difference(a, b));
    const double base = closed_form_In(p).value.to_real();
    std::array<double, 3> perm = t;
    std::sort(perm.begin(), perm.end());
    do {
      const double v = closed_form_In(TripleParams(n, perm[0], perm[1], perm[2])).value.to_real();
      worst_symmetry = std::max(worst_symmetry, relative_difference(base, v));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {below("prefactor A = A0(mu1) A0(mu2) A0(mu3)", worst_prefactor, 1e-12),
          below("closed form symmetric under permutations of (a,b,c)", worst_symmetry, 1e-12)};
}

std::vector<Check> spectrum_invariants(const VerifyConfig& config) {
  Uniform draw(config.seed, kStreamSpectrum);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + i % 3;
    const double mu = draw(-9.0, 3.0);
    for (int m = 0; m <= 50; ++m) {
      const double a = eigenvalue_A2m(n, m, mu).to_real();
      const double b = eigenvalue_A(SpectralQuery{n, 2 * m, 0, mu}).to_real();
      worst = std::max(worst, relative_difference(a, b));
    }
  }
  bool phase = true;
  for (int k = 0; k <= 100; k += 2) phase = phase && spectral_phase(k) == std::pair<int, int>{1, 0};
  return {below("A_2m Pochhammer form = A_{l+l'} Gamma form, m<=50", worst, 1e-12),
          holds("i^-k (-1)^(k/2) = 1 for even k <= 100", phase)};
}

std::vector<Check> identity_symmetry(const VerifyConfig& config) {
  Uniform draw(config.seed, kStreamSymmetry);
  double worst_d = 0.0, worst_f = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double x = draw(-0.9, 0.4), y = draw(-0.9, 0.4), z = draw(-0.9, 0.4);
    const double base = dougall_ramanujan_rhs({2.0, x, y, z}).to_real();
    for (const auto& [a, b, c] : std::array<std::array<double, 3>, 5>{
             {{x, z, y}, {y, x, z}, {y, z, x}, {z, x, y}, {z, y, x}}}) {
      worst_d = std::max(worst_d, relative_difference(base, dougall_ramanujan_rhs({2.0, a, b, c}).to_real()));
    }
    const double f = draw(3.5, 6), u = draw(0.1, 1), v = draw(-1, 1), w = draw(-1, 1);
    worst_f = std::max(worst_f, relative_difference(fatawat_vyas_rhs({f, u, v, w}).to_real(),
                                                    fatawat_vyas_rhs({f, u, w, v}).to_real()));
  }
  return {below("Dougall closed side symmetric in (x,y,z)", worst_d, 1e-13),
          below("extended Dougall closed side symmetric in v <-> w", worst_f, 1e-13)};
}

std::vector<Check> sampler_moments(const VerifyConfig& config) {
  constexpr int dim = 8;
  const std::uint64_t count = config.level == VerifyLevel::full ? 1'000'000 : 200'000;
  SphereSampler sampler(dim, config.seed, 0);
  RealVector x(dim);
  std::array<RunningStats, dim> coords;
  RunningStats square;
  double worst_norm = 0.0;
  for (std::uint64_t i = 0; i < count; ++i) {
    sampler.next(x);
    double norm2 = 0.0;
    for (int j = 0; j < dim; ++j) {
      coords[j].add(x[j]);
      norm2 += x[j] * x[j];
    }
    worst_norm = std::max(worst_norm, std::fabs(std::sqrt(norm2) - 1.0));
    square.add(x[0] * x[0]);
  }
  double worst_z = 0.0;
  for (const auto& c : coords) {
    worst_z = std::max(worst_z, std::fabs(c.mean()) / std::sqrt(c.variance() / static_cast<double>(count)));
  }
  const double z_square = std::fabs(square.mean() - 1.0 / dim) /
                          std::sqrt(square.variance() / static_cast<double>(count));
  return {below("sphere points have unit norm", worst_norm, 1e-12),
          below("coordinate means within 4 standard errors of 0", worst_z, 4.0),
          below("E[x_1^2] within 4 standard errors of 1/dim", z_square, 4.0)};
}

std::vector<Check> ktype_signs(const VerifyConfig& config) {
  // Quadrature of the intertwiner on n=2 highest-weight vectors, compared
  // with (-1)^{l'} A_{l+l'}.
  std::vector<Check> checks;
  MonteCarloOptions o = mc_options(config);
  o.samples = std::min<std::uint64_t>(o.samples, 2'000'000);
  const double r = 1.0 / std::sqrt(2.0), t = 1.0 / std::sqrt(3.0);
  struct Case {
    int l, lp;
    RealVector y;
  };
  const Case cases[] = {{2, 0, {r, 0, r, 0, 0, 0, 0, 0}},
                        {1, 1, {0, r, r, 0, 0, 0, 0, 0}},
                        {4, 0, {r, 0, r, 0, 0, 0, 0, 0}},
                        {3, 1, {t, t, t, 0, 0, 0, 0, 0}}};
  constexpr double lambda = -5.5;
  for (const auto& c : cases) {
    const ComplexEstimate e = estimate_intertwiner_eigenvalue(2, c.l, c.lp, lambda, c.y, o);
    const double a = eigenvalue_A(SpectralQuery{2, c.l, c.lp, lambda}).to_real();
    const double expected = c.lp % 2 == 0 ? a : -a;
    checks.push_back(below("n=2 (l,l')=(" + std::to_string(c.l) + "," + std::to_string(c.lp) +
                               "), lambda=-5.5: |MC - (-1)^l' A| / std_error",
                           std::fabs(e.real.mean - expected) / e.real.std_error, 4.0,
                           describe({{"mc_mean", e.real.mean}, {"std_error", e.real.std_error}, {"A", a}})));
  }
  return checks;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

bool VerificationReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

std::string VerificationReport::to_json(int indent) const {
  using nlohmann::json;
  json suites_json = json::array();
  for (const auto& s : suites) {
    json checks_json = json::array();
    for (const auto& c : s.checks) {
      checks_json.push_back({{"name", c.name},
                             {"measured", std::isfinite(c.measured) ? json(c.measured) : json(nullptr)},
                             {"tolerance", c.tolerance},
                             {"passed", c.passed},
                             {"detail", c.detail}});
    }
    suites_json.push_back({{"id", s.id},
                           {"title", s.title},
                           {"passed", s.passed()},
                           {"seconds", s.seconds},
                           {"budget_seconds", s.budget_seconds},
                           {"checks", checks_json}});
  }
  const json report{{"schema", "brtriple.verify/1"},
                    {"level", config.level == VerifyLevel::full ? "full" : "quick"},
                    {"seed", config.seed},
                    {"threads", config.threads},
                    {"passed", passed()},
                    {"wall_time", wall_time},
                    {"suites", suites_json}};
  return report.dump(indent);
}

std::vector<SuiteDefinition> acceptance_suites() {
  return {
      {"AC1", "volume identity at alpha=beta=gamma=2n, n=1..4", 1.0, volume_identity},
      {"AC2", "n=1 triangle: closed form, trace series, n=1 reduction", 5.0, n1_triangle},
      {"AC3", "n=2 triangle with reduction discrepancy detection", 10.0, n2_triangle},
      {"AC4", "Dougall and extended Dougall identity suites", 30.0, identity_suites},
      {"AC5", "Monte Carlo vs closed form", 240.0, monte_carlo_vs_closed},
      {"AC6", "intertwiner eigenvalue by quadrature", 60.0, intertwiner_eigenvalue},
      {"AC7", "dimension oracle and Pochhammer factorizations", 10.0, dimension_oracle},
      {"AC8", "property suites", 30.0, property_suites},
  };
}

std::vector<SuiteDefinition> invariant_suites() {
  return {
      {"INV-gamma", "log Gamma vs libm", 0.0, lanczos_vs_libm},
      {"INV-gauss", "Gauss summation through the series engine", 0.0, gauss_summation},
      {"INV-terminating", "terminating series vs brute force; permutation invariance", 0.0,
       terminating_bruteforce},
      {"INV-closed", "prefactor consistency and closed-form symmetry", 0.0, closed_form_invariants},
      {"INV-spectrum", "K-spectrum forms and phase identity", 0.0, spectrum_invariants},
      {"INV-identities", "closed-side symmetries of the summation theorems", 0.0, identity_symmetry},
      {"INV-sampler", "sphere sampler moments", 0.0, sampler_moments},
      {"INV-ktype-sign", "n=2 intertwiner eigenvalues by quadrature carry (-1)^l'", 0.0, ktype_signs},
  };
}

SuiteResult run_suite(const SuiteDefinition& suite, const VerifyConfig& config) {
  SuiteResult result;
  result.id = suite.id;
  result.title = suite.title;
  result.budget_seconds = suite.budget_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    result.checks = suite.run(config);
  } catch (const std::exception& e) {
    result.checks.push_back(holds("suite raised no error", false, e.what()));
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (suite.budget_seconds > 0.0) {
    result.checks.push_back(below("runtime seconds", result.seconds, suite.budget_seconds));
  }
  return result;
}

VerificationReport run_verification(const VerifyConfig& config) {
  VerificationReport report;
  report.config = config;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& s : invariant_suites()) report.suites.push_back(run_suite(s, config));
  for (const auto& s : acceptance_suites()) report.suites.push_back(run_suite(s, config));
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace brt
