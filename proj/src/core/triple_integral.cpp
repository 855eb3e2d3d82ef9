// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#include "triple_integral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "compensated.hpp"
#include "errors.hpp"
#include "kspectrum.hpp"

namespace brt {

namespace {

const double kLogPi = std::log(std::numbers::pi);

std::array<double, 3> mu_from_lambda(int n, const std::array<double, 3>& lambda) {
  const double shifted = (lambda[0] + lambda[1] + lambda[2] - 2.0 * n) / 2.0;
  return {shifted - lambda[0], shifted - lambda[1], shifted - lambda[2]};
}

}  // namespace

TripleParams::TripleParams(int n, double alpha, double beta, double gamma)
    : n_(n), abc_{alpha, beta, gamma} {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "rank n must be a positive integer");
  for (double t : abc_) {
    if (!std::isfinite(t)) throw Error(ErrorCode::invalid_argument, "parameters must be finite");
  }
}

TripleParams TripleParams::from_mu(int n, const std::array<double, 3>& mu) {
  return TripleParams(n, -2.0 * (n + mu[0]), -2.0 * (n + mu[1]), -2.0 * (n + mu[2]));
}

TripleParams TripleParams::from_lambda(int n, const std::array<double, 3>& lambda) {
  return from_mu(n, mu_from_lambda(n, lambda));
}

std::array<double, 3> TripleParams::mu() const {
  return {-abc_[0] / 2.0 - n_, -abc_[1] / 2.0 - n_, -abc_[2] / 2.0 - n_};
}

std::array<double, 3> TripleParams::lambda() const {
  // Inverting mu_j = (L - 2n)/2 - lambda_j with L = sum(lambda) gives
  // L = 2 sum(mu) + 6n.
  const auto m = mu();
  const double total = 2.0 * (m[0] + m[1] + m[2]) + 6.0 * n_;
  const double shifted = (total - 2.0 * n_) / 2.0;
  return {shifted - m[0], shifted - m[1], shifted - m[2]};
}

std::array<double, 3> TripleParams::kernel_exponents() const {
  return {abc_[0] / 2.0 - n_, abc_[1] / 2.0 - n_, abc_[2] / 2.0 - n_};
}

ConvergenceReport convergence_domain(const TripleParams& params) {
  ConvergenceReport report;
  report.exponents = params.kernel_exponents();
  report.convergent = true;
  for (std::size_t j = 0; j < 3; ++j) {
    report.exponent_ok[j] = report.exponents[j] > -1.0;
    report.convergent = report.convergent && report.exponent_ok[j];
  }
  return report;
}

SignedLogValue prefactor_A(const TripleParams& params) {
  const double n = params.n();
  SignedLogValue constant{std::log(8.0) + (6.0 * n - 1.5) * kLogPi, 1, false};
  std::array<double, 3> num{};
  std::array<double, 3> den{};
  for (std::size_t j = 0; j < 3; ++j) {
    const double t = params.alpha_beta_gamma()[j];
    num[j] = (2.0 - 2.0 * n + t) / 4.0;
    den[j] = (6.0 * n + t) / 4.0;
  }
  return constant * gamma_quotient(num, den);
}

SeriesSpec theorem1_series_spec(const TripleParams& params) {
  const double n = params.n();
  SeriesSpec spec;
  spec.numerators = {2.0 * n - 1.0, 2.0 * n - 1.0, n + 0.5};
  spec.denominators = {1.0, n - 0.5};
  for (double t : params.alpha_beta_gamma()) {
    spec.numerators.push_back((2.0 * n - t) / 4.0);
    spec.denominators.push_back((6.0 * n + t) / 4.0);
  }
  spec.argument = 1.0;
  return spec;
}

ClosedFormResult closed_form_In(const TripleParams& params, double rel_tol,
                                std::int64_t max_terms) {
  const SeriesSpec spec = theorem1_series_spec(params);
  if (classify(spec) == SeriesClass::divergent_at_unit) {
    std::ostringstream msg;
    msg << "closed form needs 2 - n + (alpha+beta+gamma)/2 > 0 for a non-terminating series; got "
        << parameter_excess(spec) << " at n=" << params.n() << " alpha=" << params.alpha()
        << " beta=" << params.beta() << " gamma=" << params.gamma();
    throw Error(ErrorCode::divergent, msg.str());
  }
  ClosedFormResult result;
  result.prefactor = prefactor_A(params);
  result.series = evaluate(spec, rel_tol, max_terms);
  result.value = result.prefactor * SignedLogValue::from_real(result.series.value);
  return result;
}

namespace {

TraceSeriesResult trace_series(const TripleParams& params, std::int64_t m_max, double rel_tol,
                               bool signed_weights) {
  const int n = params.n();
  const auto mu = params.mu();

  // (n + mu_j/2)_m vanishes for all m beyond a nonpositive integer n + mu_j/2.
  std::optional<std::int64_t> last_nonzero;
  for (double m : mu) {
    const double up = n + m / 2.0;
    if (!is_nonpositive_integer(up)) continue;
    const auto q = -static_cast<std::int64_t>(std::llround(up));
    if (!last_nonzero || q < *last_nonzero) last_nonzero = q;
  }

  // Summands decay like m^-d; the tail after term m is about m/(d-1) terms.
  const double decay = 3.0 - 4.0 * n - (mu[0] + mu[1] + mu[2]);

  TraceSeriesResult result;
  CompensatedSum sum;
  int small_run = 0;
  for (std::int64_t m = 0; m <= m_max; ++m) {
    if (last_nonzero && m > *last_nonzero) {
      result.converged = true;
      break;
    }
    SignedLogValue product = SignedLogValue::one();
    for (double mj : mu) product *= eigenvalue_A2m(n, m, mj);
    if (product.pole) {
      result.pole = true;
      result.value = std::numeric_limits<double>::quiet_NaN();
      return result;
    }
    const BigInt weight = signed_weights ? signed_dim_sum(n, m) : dim_sum(n, m);
    const double term = product.to_real() * weight.convert_to<double>();
    sum += term;
    result.partial_sums.push_back(sum.value());
    const double tail_scale = decay > 1.0 ? std::max(1.0, static_cast<double>(m) / (decay - 1.0))
                                          : std::numeric_limits<double>::infinity();
    if (std::fabs(term) * tail_scale < rel_tol * std::fabs(sum.value())) {
      if (++small_run >= 3) {
        result.converged = true;
        break;
      }
    } else {
      small_run = 0;
    }
  }
  result.value = sum.value();
  return result;
}

}  // namespace

TraceSeriesResult tau_trace_series(const TripleParams& params, std::int64_t m_max,
                                   double rel_tol) {
  return trace_series(params, m_max, rel_tol, false);
}

TraceSeriesResult tau_trace_series_signed(const TripleParams& params, std::int64_t m_max,
                                          double rel_tol) {
  return trace_series(params, m_max, rel_tol, true);
}

SignedLogValue closed_form_n1(const std::array<double, 3>& mu) {
  const double total = mu[0] + mu[1] + mu[2];
  SignedLogValue constant{3.0 * (std::log(2.0) + 1.5 * kLogPi), 1, false};
  const double num[] = {(-total - 2.0) / 2.0, -0.5 - mu[0] / 2.0, -0.5 - mu[1] / 2.0,
                        -0.5 - mu[2] / 2.0};
  const double den[] = {(mu[0] - total) / 2.0, (mu[1] - total) / 2.0, (mu[2] - total) / 2.0};
  return constant * gamma_quotient(num, den);
}

SignedLogValue closed_form_n2_printed(double a, double b, double c) {
  SignedLogValue constant{10.5 * kLogPi - std::log(96.0), 1, false};
  const double polynomial = (4.0 - a) * (4.0 - b) * (4.0 - c) + 32.0 * (a + b + c);
  const double num[] = {(a + b + c) / 4.0};
  const double den[] = {2.0 + (b + c) / 4.0, 2.0 + (a + b) / 4.0, 2.0 + (a + c) / 4.0};
  return constant * SignedLogValue::from_real(polynomial) * gamma_quotient(num, den);
}

SignedLogValue closed_form_n2_corrected(double a, double b, double c) {
  const double restored[] = {(a - 2.0) / 4.0, (b - 2.0) / 4.0, (c - 2.0) / 4.0};
  return closed_form_n2_printed(a, b, c) * gamma_quotient(restored, {});
}

double sphere_volume(int n) {
  const double two_n = 2.0 * n;
  return std::exp(std::log(2.0) + two_n * kLogPi - log_gamma_signed(two_n).log_magnitude);
}

}  // namespace brt
