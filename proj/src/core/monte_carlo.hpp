// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "triple_integral.hpp"

namespace brt {

inline constexpr std::uint64_t kDefaultSeed = 0xB3A1;
inline constexpr std::uint64_t kDefaultBatchSize = 1u << 16;

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string warning;  // set when a refused regime was forced
};

struct ComplexEstimate {
  Estimate real;
  Estimate imag;
};

struct MonteCarloOptions {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t batch_size = kDefaultBatchSize;
  unsigned threads = 0;  // 0: hardware concurrency
  bool force = false;    // allow exponents in (-1, 0)
};

/// Count, mean and sum of squared deviations; merged exactly in the
/// Chan-Golub-LeVeque way so batch summaries reduce associatively.
class RunningStats {
 public:
  void add(double x);
  void merge(const RunningStats& other);

  std::uint64_t count() const { return count_; }
  double mean() const { return mean_; }
  double variance() const;  // sample variance

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Exponents (e_1, e_2, e_3) on |Re w(y,z)|, |Re w(z,x)|, |Re w(x,y)|.
struct KernelTriple {
  std::array<double, 3> exponents{};

  /// All exponents > -1: the integral converges absolutely.
  bool absolutely_convergent() const;
  double operator()(int n, std::span<const double> x, std::span<const double> y,
                    std::span<const double> z) const;
};

/// Monte Carlo estimate of the triple integral with unnormalised surface
/// measure: vol(S^{4n-1})^3 times the kernel mean over i.i.d. uniform triples.
///
/// Batches of options.batch_size samples use stream (seed, batch index), and
/// batch summaries are reduced in index order, so the result is bit-identical
/// for any thread count. Throws Error(divergent) outside the convergence
/// domain and Error(variance) for negative exponents unless options.force.
Estimate estimate_In(const TripleParams& params, const MonteCarloOptions& options);

/// Monte Carlo estimate of (T_lambda p)(y) / p(y) for the highest weight
/// vector p of V_n^{l,l'}, where
///   T_lambda f(y) = int f(x) |Re w(x,y)|^(-lambda-2n) dsigma(x).
/// Needs -lambda - 2n >= 0 (Error(variance) otherwise) and p(y) != 0
/// (Error(base_point)).
ComplexEstimate estimate_intertwiner_eigenvalue(int n, int l, int l_prime, double lambda,
                                                std::span<const double> y,
                                                const MonteCarloOptions& options);

/// Thread count from BRTRIPLE_THREADS, else hardware concurrency.
unsigned default_thread_count();

}  // namespace brt
