// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>

namespace brt {

/// Distance from a nonpositive integer below which an argument is treated as
/// sitting exactly on a Gamma pole. Parameters reach the library as exact
/// user input or short arithmetic on it, so 1e-12 only absorbs rounding.
inline constexpr double kIntegerSnap = 1e-12;

/// A real number stored as sign * exp(log_magnitude), or a pole marker.
///
/// Products of many Gamma values overflow double long before the final
/// quotient does, so every Gamma-heavy formula is accumulated in this form
/// and only converted at the end.
struct SignedLogValue {
  double log_magnitude = 0.0;
  int sign = 1;  // +1, -1, or 0 for an exact zero
  bool pole = false;

  static SignedLogValue from_real(double x);
  static SignedLogValue zero() { return {0.0, 0, false}; }
  static SignedLogValue one() { return {0.0, 1, false}; }
  static SignedLogValue make_pole() { return {0.0, 0, true}; }

  bool is_zero() const { return !pole && sign == 0; }

  /// Converts to double. Poles map to NaN; overflow maps to +-inf.
  double to_real() const;

  SignedLogValue& operator*=(const SignedLogValue& rhs);
  SignedLogValue& operator/=(const SignedLogValue& rhs);
};

SignedLogValue operator*(SignedLogValue lhs, const SignedLogValue& rhs);
SignedLogValue operator/(SignedLogValue lhs, const SignedLogValue& rhs);

/// Raises a strictly positive real to a real power in log space.
SignedLogValue positive_power(double base, double exponent);

/// True when x is within kIntegerSnap of a nonpositive integer.
bool is_nonpositive_integer(double x);

/// sin(pi x) with argument reduction done before multiplying by pi.
double sin_pi(double x);

/// log|Gamma(x)| and the sign of Gamma(x). Pole flag set at 0, -1, -2, ...
SignedLogValue log_gamma_signed(double x);

/// Rising factorial a (a+1) ... (a+k-1); 1 when k == 0.
double pochhammer(double a, std::int64_t k);

/// Rising factorial in signed-log form, safe for large k.
SignedLogValue pochhammer_signed(double a, std::int64_t k);

/// Gamma(a) / Gamma(b).
///
/// A pole only in b gives an exact zero; a pole only in a gives a pole. When
/// both sit on nonpositive integers -p and -q the ratio of residues
/// (-1)^(p-q) q! / p! is returned.
SignedLogValue gamma_ratio(double a, double b);

/// prod Gamma(numerators) / prod Gamma(denominators).
///
/// Poles are counted on both sides. Surplus numerator poles give a pole,
/// surplus denominator poles give zero; paired poles contribute their
/// residue ratio, pairing in list order.
SignedLogValue gamma_quotient(std::span<const double> numerators,
                              std::span<const double> denominators);

}  // namespace brt
