// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#include "special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace brt {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos-type series with g = 671/128 and 14 terms; relative error in Gamma
// is below 1e-15 for x > 0.
constexpr double kLanczosG = 5.24218750000000000;
constexpr std::array<double, 14> kLanczosCoefficients = {
    57.1562356658629235,      -59.5979603554754912,
    14.1360979747417471,      -0.491913816097620199,
    .339946499848118887e-4,   .465236289270485756e-4,
    -.983744753048795646e-4,  .158088703224912494e-3,
    -.210264441724104883e-3,  .217439618115212643e-3,
    -.164318106536763890e-3,  .844182239838527433e-4,
    -.261908384015814087e-4,  .368991826595316234e-5};
constexpr double kLanczosBase = 0.999999999999997092;
constexpr double kSqrtTwoPi = 2.5066282746310005;

double log_gamma_positive(double x) {
  double y = x;
  const double tmp = x + kLanczosG;
  const double head = (x + 0.5) * std::log(tmp) - tmp;
  double series = kLanczosBase;
  for (double c : kLanczosCoefficients) {
    y += 1.0;
    series += c / y;
  }
  return head + std::log(kSqrtTwoPi * series / x);
}

// Returns -p for a snapped pole at -p.
std::int64_t pole_index(double x) {
  return -static_cast<std::int64_t>(std::llround(x));
}

double log_factorial(std::int64_t k) {
  return log_gamma_positive(static_cast<double>(k) + 1.0);
}

}  // namespace

SignedLogValue SignedLogValue::from_real(double x) {
  if (x == 0.0) return zero();
  return {std::log(std::fabs(x)), x > 0 ? 1 : -1, false};
}

double SignedLogValue::to_real() const {
  if (pole) return std::numeric_limits<double>::quiet_NaN();
  if (sign == 0) return 0.0;
  return sign * std::exp(log_magnitude);
}

SignedLogValue& SignedLogValue::operator*=(const SignedLogValue& rhs) {
  if (pole || rhs.pole) {
    *this = make_pole();
    return *this;
  }
  if (sign == 0 || rhs.sign == 0) {
    *this = zero();
    return *this;
  }
  log_magnitude += rhs.log_magnitude;
  sign *= rhs.sign;
  return *this;
}

SignedLogValue& SignedLogValue::operator/=(const SignedLogValue& rhs) {
  if (pole || rhs.pole) {
    // x / pole -> 0 is the Gamma-quotient convention; pole / anything stays.
    if (!pole && rhs.pole) {
      *this = zero();
    } else {
      *this = make_pole();
    }
    return *this;
  }
  if (rhs.sign == 0) {
    *this = make_pole();
    return *this;
  }
  if (sign == 0) return *this;
  log_magnitude -= rhs.log_magnitude;
  sign *= rhs.sign;
  return *this;
}

SignedLogValue operator*(SignedLogValue lhs, const SignedLogValue& rhs) {
  lhs *= rhs;
  return lhs;
}

SignedLogValue operator/(SignedLogValue lhs, const SignedLogValue& rhs) {
  lhs /= rhs;
  return lhs;
}

SignedLogValue positive_power(double base, double exponent) {
  return {exponent * std::log(base), 1, false};
}

bool is_nonpositive_integer(double x) {
  const double nearest = std::round(x);
  return nearest <= 0.0 && std::fabs(x - nearest) < kIntegerSnap;
}

double sin_pi(double x) {
  // Reduce to r in [-1, 1]; sin(pi x) has period 2.
  double r = x - 2.0 * std::round(0.5 * x);
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

SignedLogValue log_gamma_signed(double x) {
  if (std::isnan(x)) return {std::numeric_limits<double>::quiet_NaN(), 1, false};
  if (is_nonpositive_integer(x)) return SignedLogValue::make_pole();
  if (x > 0.0) return {log_gamma_positive(x), 1, false};
  // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
  const double s = sin_pi(x);
  return {std::log(kPi) - std::log(std::fabs(s)) - log_gamma_positive(1.0 - x),
          s > 0 ? 1 : -1, false};
}

double pochhammer(double a, std::int64_t k) {
  double product = 1.0;
  for (std::int64_t i = 0; i < k; ++i) product *= a + static_cast<double>(i);
  return product;
}

SignedLogValue pochhammer_signed(double a, std::int64_t k) {
  SignedLogValue result = SignedLogValue::one();
  if (is_nonpositive_integer(a) && pole_index(a) < k) return SignedLogValue::zero();
  // Chunked products keep the rounding of a plain product while avoiding
  // overflow; each chunk stays far below DBL_MAX for |a + k| < 1e15.
  constexpr std::int64_t kChunk = 16;
  for (std::int64_t start = 0; start < k; start += kChunk) {
    double chunk = 1.0;
    const std::int64_t stop = std::min(k, start + kChunk);
    for (std::int64_t i = start; i < stop; ++i) chunk *= a + static_cast<double>(i);
    result *= SignedLogValue::from_real(chunk);
  }
  return result;
}

SignedLogValue gamma_ratio(double a, double b) {
  const double num[] = {a};
  const double den[] = {b};
  return gamma_quotient(num, den);
}

SignedLogValue gamma_quotient(std::span<const double> numerators,
                              std::span<const double> denominators) {
  SignedLogValue result = SignedLogValue::one();
  std::vector<std::int64_t> numerator_poles;
  std::vector<std::int64_t> denominator_poles;
  for (double x : numerators) {
    const SignedLogValue g = log_gamma_signed(x);
    if (g.pole) {
      numerator_poles.push_back(pole_index(x));
    } else {
      result *= g;
    }
  }
  for (double x : denominators) {
    const SignedLogValue g = log_gamma_signed(x);
    if (g.pole) {
      denominator_poles.push_back(pole_index(x));
    } else {
      result /= g;
    }
  }
  if (numerator_poles.size() > denominator_poles.size()) return SignedLogValue::make_pole();
  if (numerator_poles.size() < denominator_poles.size()) return SignedLogValue::zero();
  // Residue of Gamma at -p is (-1)^p / p!.
  for (std::size_t i = 0; i < numerator_poles.size(); ++i) {
    const std::int64_t p = numerator_poles[i];
    const std::int64_t q = denominator_poles[i];
    SignedLogValue residue_ratio{log_factorial(q) - log_factorial(p),
                                 ((p - q) % 2 == 0) ? 1 : -1, false};
    result *= residue_ratio;
  }
  return result;
}

}  // namespace brt
