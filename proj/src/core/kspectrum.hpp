// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <span>

#include "special_functions.hpp"

namespace brt {

using BigInt = boost::multiprecision::cpp_int;

/// One K-type V_n^{l,l'} and an intertwiner parameter lambda.
/// Valid when l >= l' >= 0, l = l' mod 2, and l' = 0 for n = 1.
struct SpectralQuery {
  int n = 1;
  int l = 0;
  int l_prime = 0;
  double lambda = 0.0;
};

/// Throws Error(invalid_argument) when the query names no K-type.
void validate(const SpectralQuery& query);

/// Scalar by which the intertwiner T_lambda acts on V_n^{l,l'}:
///   2 pi^(2n-1/2) Gamma((1-lambda)/2 - n) / Gamma(lambda/2 + n)
///     * Gamma((l+l'+lambda)/2 + n) / Gamma((l+l'-lambda)/2 + n).
/// Depends on (l, l') only through l + l'.
SignedLogValue eigenvalue_A(const SpectralQuery& query);

/// 2 pi^(2n-1/2) Gamma((1-mu)/2 - n) / Gamma(n - mu/2).
SignedLogValue eigenvalue_A0(int n, double mu);

/// (n + mu/2)_m / (n - mu/2)_m * A_0(mu).
SignedLogValue eigenvalue_A2m(int n, std::int64_t m, double mu);

/// sum_{l+l'=2m} dim V_n^{l,l'} = dim H^{m,m}(C^{2n})
///   = (2m+2n-1) ((m+1)_{2n-2})^2 / (Gamma(2n) Gamma(2n-1)), exactly.
BigInt dim_sum(int n, std::int64_t m);

// dim V_n^{l,l'} from the Weyl dimension formula; summing over
// l + l' = 2m reproduces dim_sum(n, m).
BigInt dim_ktype(int n, int l, int l_prime);

// sum over l + l' = 2m of (-1)^{l'} dim V_n^{l,l'}.
BigInt signed_dim_sum(int n, std::int64_t m);

inline constexpr int kBruteForceMaxN = 3;
inline constexpr int kBruteForceMaxM = 4;

/// dim H^{m,m}(C^{2n}) by linear algebra: the number of (m,m)-bihomogeneous
/// monomials minus the exact rank of sum_j d^2/dz_j dzbar_j into bidegree
/// (m-1,m-1). Throws Error(size_limit) beyond n = 3 or m = 4.
std::int64_t dim_hmm_bruteforce(int n, int m);

struct FactorizationReport {
  bool fact1 = false;   // (2m+2n-1)/(2n-1) = (2n)_2m/(2n-1)_2m = (n+1/2)_m/(n-1/2)_m
  bool fact2 = false;   // (m+1)_{2n-2}/(2n-2)! = (m+2n-2)!/(m!(2n-2)!) = (2n-1)_m/m!
  bool dimsum = false;  // (2n-1)_m^2 (n+1/2)_m / (m! (1)_m (n-1/2)_m) = dim_sum
  BigInt dimsum_value;

  bool all() const { return fact1 && fact2 && dimsum; }
};

/// Checks the Pochhammer rewrites of the dimension count in exact rational
/// arithmetic.
FactorizationReport pochhammer_factorizations_check(int n, std::int64_t m);

/// (z_1 conj(w_1))^((l-l')/2) (z_2 conj(w_1) - z_1 conj(w_2))^l', the highest
/// weight vector of V_n^{l,l'}, at a point (z_1..z_n, w_1..w_n) of C^{2n}.
std::complex<double> hw_polynomial_eval(int n, int l, int l_prime,
                                        std::span<const std::complex<double>> point);

/// i^(-k) (-1)^(k/2) for even k as an exact Gaussian integer (re, im).
std::pair<int, int> spectral_phase(int k);

}  // namespace brt
