// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hypergeometric.hpp"
#include "special_functions.hpp"

namespace brt {

/// Problem instance for the triple integral over (S^{4n-1})^3 with kernel
///   |Re w(y,z)|^(alpha/2-n) |Re w(z,x)|^(beta/2-n) |Re w(x,y)|^(gamma/2-n).
///
/// Stored canonically as (n, alpha, beta, gamma). The mu and lambda views are
/// the intertwiner parameters of the trace realisation:
///   alpha = -2(n + mu_1), and mu_j = (lambda_1+lambda_2+lambda_3-2n)/2 - lambda_j.
class TripleParams {
 public:
  TripleParams(int n, double alpha, double beta, double gamma);

  static TripleParams from_mu(int n, const std::array<double, 3>& mu);
  static TripleParams from_lambda(int n, const std::array<double, 3>& lambda);

  int n() const { return n_; }
  const std::array<double, 3>& alpha_beta_gamma() const { return abc_; }
  double alpha() const { return abc_[0]; }
  double beta() const { return abc_[1]; }
  double gamma() const { return abc_[2]; }

  std::array<double, 3> mu() const;
  std::array<double, 3> lambda() const;

  /// (alpha/2 - n, beta/2 - n, gamma/2 - n), the powers of the three kernel
  /// factors.
  std::array<double, 3> kernel_exponents() const;

 private:
  int n_;
  std::array<double, 3> abc_;
};

struct ConvergenceReport {
  bool convergent = false;
  std::array<double, 3> exponents{};
  std::array<bool, 3> exponent_ok{};
};

/// The integral converges absolutely iff every kernel exponent exceeds -1,
/// i.e. alpha, beta, gamma > 2n - 2.
ConvergenceReport convergence_domain(const TripleParams& params);

/// 8 pi^(6n-3/2) prod_t Gamma((2-2n+t)/4) / Gamma((6n+t)/4), t in {alpha,beta,gamma}.
SignedLogValue prefactor_A(const TripleParams& params);

/// 6F5(2n-1, 2n-1, n+1/2, (2n-alpha)/4, (2n-beta)/4, (2n-gamma)/4;
///     1, n-1/2, (6n+alpha)/4, (6n+beta)/4, (6n+gamma)/4; 1).
SeriesSpec theorem1_series_spec(const TripleParams& params);

struct ClosedFormResult {
  SignedLogValue value;
  SignedLogValue prefactor;
  EvalResult series;
};

/// prefactor_A times the 6F5. Throws Error(divergent) naming the violated
/// condition 2 - n + (alpha+beta+gamma)/2 > 0 for non-terminating series
/// outside the unit-argument convergence region.
ClosedFormResult closed_form_In(const TripleParams& params,
                                double rel_tol = kDefaultSeriesTolerance,
                                std::int64_t max_terms = kDefaultMaxTerms);

struct TraceSeriesResult {
  double value = 0.0;
  bool pole = false;
  bool converged = false;
  std::vector<double> partial_sums;
};

/// Sum over m of A_2m(mu_1) A_2m(mu_2) A_2m(mu_3) dim H^{m,m}(C^{2n}), built
/// only from the K-spectrum and the dimension counts. Stops once the
/// estimated tail drops below rel_tol * |sum|, or at m_max.
TraceSeriesResult tau_trace_series(const TripleParams& params, std::int64_t m_max,
                                   double rel_tol = kDefaultSeriesTolerance);

/// n = 1 reduction:
///   (2 pi^(3/2))^3 Gamma((-mu_1-mu_2-mu_3-2)/2)
///     prod_j Gamma(-1/2 - mu_j/2) / Gamma((mu_j - mu_1 - mu_2 - mu_3)/2).
// Same sum with dim_sum replaced by signed_dim_sum, i.e. each K-type
// weighted by (-1)^{l'}.
TraceSeriesResult tau_trace_series_signed(const TripleParams& params, std::int64_t m_max,
                                          double rel_tol = kDefaultSeriesTolerance);

SignedLogValue closed_form_n1(const std::array<double, 3>& mu);

/// n = 2 reduction without the Gamma((t-2)/4) factors, kept next to the
/// corrected form so the gap between them can be measured:
///   (pi^10 sqrt(pi) / 96) ((4-a)(4-b)(4-c) + 32(a+b+c)) Gamma((a+b+c)/4)
///     / (Gamma(2+(b+c)/4) Gamma(2+(a+b)/4) Gamma(2+(a+c)/4)).
SignedLogValue closed_form_n2_printed(double alpha, double beta, double gamma);

/// closed_form_n2_printed times Gamma((a-2)/4) Gamma((b-2)/4) Gamma((c-2)/4),
/// which agrees with the 6F5 closed form at n = 2.
SignedLogValue closed_form_n2_corrected(double alpha, double beta, double gamma);

/// Euclidean surface area of S^{4n-1}: 2 pi^{2n} / Gamma(2n).
double sphere_volume(int n);

}  // namespace brt
