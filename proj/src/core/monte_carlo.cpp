// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#include "monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "kspectrum.hpp"
#include "sampling.hpp"
#include "symplectic.hpp"

namespace brt {

void RunningStats::add(double x) {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

void RunningStats::merge(const RunningStats& other) {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(count_);
  const double nb = static_cast<double>(other.count_);
  const double total = na + nb;
  const double delta = other.mean_ - mean_;
  mean_ += delta * nb / total;
  m2_ += other.m2_ + delta * delta * na * nb / total;
  count_ += other.count_;
}

double RunningStats::variance() const {
  return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
}

bool KernelTriple::absolutely_convergent() const {
  return std::all_of(exponents.begin(), exponents.end(), [](double e) { return e > -1.0; });
}

double KernelTriple::operator()(int n, std::span<const double> x, std::span<const double> y,
                                std::span<const double> z) const {
  const double yz = std::fabs(re_omega(n, y, z));
  const double zx = std::fabs(re_omega(n, z, x));
  const double xy = std::fabs(re_omega(n, x, y));
  return std::pow(yz, exponents[0]) * std::pow(zx, exponents[1]) * std::pow(xy, exponents[2]);
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("BRTRIPLE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Runs batch(index, count) for every batch on a worker pool and returns the
// per-batch summaries in index order.
template <typename Summary, typename BatchFn>
std::vector<Summary> run_batches(const MonteCarloOptions& options, BatchFn batch) {
  if (options.samples == 0) throw Error(ErrorCode::invalid_argument, "samples must be positive");
  if (options.batch_size == 0) throw Error(ErrorCode::invalid_argument, "batch size must be positive");
  const std::uint64_t batches = (options.samples + options.batch_size - 1) / options.batch_size;
  std::vector<Summary> results(batches);
  std::atomic<std::uint64_t> next{0};
  const auto worker = [&] {
    for (std::uint64_t b = next++; b < batches; b = next++) {
      const std::uint64_t start = b * options.batch_size;
      const std::uint64_t count = std::min(options.batch_size, options.samples - start);
      results[b] = batch(b, count);
    }
  };
  const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(
      options.threads == 0 ? default_thread_count() : options.threads, batches));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return results;
}

// Pairwise reduction in index order; the tree shape depends only on the
// number of batches.
RunningStats reduce(std::span<const RunningStats> parts) {
  if (parts.empty()) return {};
  if (parts.size() == 1) return parts[0];
  const std::size_t mid = parts.size() / 2;
  RunningStats left = reduce(parts.subspan(0, mid));
  left.merge(reduce(parts.subspan(mid)));
  return left;
}

Estimate finish(const RunningStats& stats, double scale, const MonteCarloOptions& options) {
  Estimate e;
  e.samples = stats.count();
  e.seed = options.seed;
  e.mean = stats.mean() * scale;
  e.std_error = std::sqrt(stats.variance() / static_cast<double>(stats.count())) * std::fabs(scale);
  return e;
}

}  // namespace

Estimate estimate_In(const TripleParams& params, const MonteCarloOptions& options) {
  const ConvergenceReport domain = convergence_domain(params);
  const KernelTriple kernel{domain.exponents};
  if (!domain.convergent) {
    std::ostringstream msg;
    msg << "integral diverges: needs alpha, beta, gamma > 2n - 2 = " << 2 * params.n() - 2
        << " (kernel exponents > -1); got alpha=" << params.alpha() << " beta=" << params.beta()
        << " gamma=" << params.gamma();
    throw Error(ErrorCode::divergent, msg.str());
  }
  std::string warning;
  const bool heavy_tail = std::any_of(domain.exponents.begin(), domain.exponents.end(),
                                      [](double e) { return e < 0.0; });
  if (heavy_tail) {
    std::ostringstream msg;
    msg << "negative kernel exponent (alpha, beta or gamma < 2n = " << 2 * params.n()
        << "): the estimator variance may be infinite and the error bar unreliable";
    if (!options.force) throw Error(ErrorCode::variance, msg.str() + "; use force to run anyway");
    warning = msg.str();
  }

  const int n = params.n();
  const int dim = 4 * n;
  const auto batches = run_batches<RunningStats>(options, [&](std::uint64_t b, std::uint64_t count) {
    SphereSampler sampler(dim, options.seed, b);
    RealVector x(dim), y(dim), z(dim);
    RunningStats stats;
    for (std::uint64_t i = 0; i < count; ++i) {
      sampler.next(x);
      sampler.next(y);
      sampler.next(z);
      stats.add(kernel(n, x, y, z));
    }
    return stats;
  });
  const double vol = sphere_volume(n);
  Estimate e = finish(reduce(batches), vol * vol * vol, options);
  e.warning = warning;
  return e;
}

ComplexEstimate estimate_intertwiner_eigenvalue(int n, int l, int l_prime, double lambda,
                                                std::span<const double> y,
                                                const MonteCarloOptions& options) {
  validate(SpectralQuery{n, l, l_prime, lambda});
  const double exponent = -lambda - 2.0 * n;
  if (exponent < 0.0) {
    std::ostringstream msg;
    msg << "intertwiner kernel exponent -lambda-2n = " << exponent
        << " is negative; quadrature refused (variance blow-up)";
    throw Error(ErrorCode::variance, msg.str());
  }
  if (y.size() != static_cast<std::size_t>(4 * n)) {
    throw Error(ErrorCode::invalid_argument, "base point must have length 4n");
  }
  double norm2 = 0.0;
  for (double v : y) norm2 += v * v;
  if (std::fabs(std::sqrt(norm2) - 1.0) > 1e-12) {
    throw Error(ErrorCode::invalid_argument, "base point must lie on the unit sphere");
  }
  const ComplexVector y_complex = to_complex(y);
  const std::complex<double> p_y = hw_polynomial_eval(n, l, l_prime, y_complex);
  if (std::abs(p_y) < 1e-12) {
    throw Error(ErrorCode::base_point, "highest weight polynomial vanishes at the base point");
  }

  struct Pair {
    RunningStats re;
    RunningStats im;
  };
  const int dim = 4 * n;
  const double vol = sphere_volume(n);
  const auto batches = run_batches<Pair>(options, [&](std::uint64_t b, std::uint64_t count) {
    SphereSampler sampler(dim, options.seed, b);
    RealVector x(dim);
    Pair out;
    for (std::uint64_t i = 0; i < count; ++i) {
      sampler.next(x);
      const ComplexVector xc = to_complex(x);
      const std::complex<double> value = hw_polynomial_eval(n, l, l_prime, xc) *
                                         std::pow(std::fabs(re_omega(n, x, y)), exponent) / p_y;
      out.re.add(value.real());
      out.im.add(value.imag());
    }
    return out;
  });
  std::vector<RunningStats> re, im;
  for (const auto& p : batches) {
    re.push_back(p.re);
    im.push_back(p.im);
  }
  return {finish(reduce(re), vol, options), finish(reduce(im), vol, options)};
}

}  // namespace brt
