// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace brt {

/// Philox4x32-10 counter-based generator: a keyed bijection of a 128-bit
/// counter, so any position of any stream can be produced independently.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter counter, Key key);
};

/// Sequential view of one Philox stream. The key is the 64-bit seed; the high
/// half of the counter holds the stream index, the low half the position.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t stream);

  /// Uniform double in the open interval (0, 1) with 53 random bits.
  double uniform();

  /// Standard normal variate (Box-Muller on two uniforms).
  double normal();

 private:
  std::uint64_t next_bits();

  Philox4x32::Key key_;
  std::uint64_t stream_;
  std::uint64_t position_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int buffered_words_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

/// Uniform points on the unit sphere S^{dim-1} in R^dim, obtained by
/// normalising standard Gaussian vectors.
class SphereSampler {
 public:
  SphereSampler(int dim, std::uint64_t seed, std::uint64_t stream = 0);

  int dim() const { return dim_; }
  void next(std::span<double> out);

 private:
  int dim_;
  CounterStream stream_;
};

using RealVector = std::vector<double>;

/// count points of S^{dim-1} from stream 0 of seed; reproducible.
std::vector<RealVector> sample_sphere(int dim, std::size_t count, std::uint64_t seed);

}  // namespace brt
