// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#include "sampling.hpp"

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace brt {

namespace {

constexpr std::uint32_t kMultiplier0 = 0xD2511F53;
constexpr std::uint32_t kMultiplier1 = 0xCD9E8D57;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85;
constexpr int kRounds = 10;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  lo = static_cast<std::uint32_t>(product);
  hi = static_cast<std::uint32_t>(product >> 32);
}

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) {
  for (int round = 0; round < kRounds; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t lo0, hi0, lo1, hi1;
    mulhilo(kMultiplier0, ctr[0], lo0, hi0);
    mulhilo(kMultiplier1, ctr[2], lo1, hi1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

CounterStream::CounterStream(std::uint64_t seed, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      stream_(stream) {}

std::uint64_t CounterStream::next_bits() {
  if (buffered_words_ == 0) {
    buffer_ = Philox4x32::block({static_cast<std::uint32_t>(position_),
                                 static_cast<std::uint32_t>(position_ >> 32),
                                 static_cast<std::uint32_t>(stream_),
                                 static_cast<std::uint32_t>(stream_ >> 32)},
                                key_);
    ++position_;
    buffered_words_ = 4;
  }
  const int i = 4 - buffered_words_;
  buffered_words_ -= 2;
  return (static_cast<std::uint64_t>(buffer_[i]) << 32) | buffer_[i + 1];
}

double CounterStream::uniform() {
  return (static_cast<double>(next_bits() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  spare_normal_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

SphereSampler::SphereSampler(int dim, std::uint64_t seed, std::uint64_t stream)
    : dim_(dim), stream_(seed, stream) {
  if (dim < 1) throw Error(ErrorCode::invalid_argument, "sphere dimension must be >= 1");
}

void SphereSampler::next(std::span<double> out) {
  if (out.size() != static_cast<std::size_t>(dim_)) {
    throw Error(ErrorCode::invalid_argument, "output span does not match sphere dimension");
  }
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& x : out) {
      x = stream_.normal();
      norm2 += x * x;
    }
  } while (norm2 == 0.0);
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& x : out) x *= inv;
}

std::vector<RealVector> sample_sphere(int dim, std::size_t count, std::uint64_t seed) {
  SphereSampler sampler(dim, seed, 0);
  std::vector<RealVector> points(count, RealVector(static_cast<std::size_t>(dim)));
  for (auto& p : points) sampler.next(p);
  return points;
}

}  // namespace brt
