// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace brt {

/// Parameters of pFq(a_1..a_p; b_1..b_q; z).
struct SeriesSpec {
  std::vector<double> numerators;
  std::vector<double> denominators;
  double argument = 1.0;
};

enum class SeriesClass {
  terminating,
  convergent_at_unit,
  divergent_at_unit,
  convergent_inside_disk,
};

enum class EvalStatus {
  converged,
  terminated_exactly,
  max_terms_reached,
};

struct EvalResult {
  double value = 0.0;
  std::int64_t terms_used = 0;
  double last_term_magnitude = 0.0;
  EvalStatus status = EvalStatus::converged;
};

std::string_view to_string(SeriesClass c);
std::string_view to_string(EvalStatus s);

inline constexpr double kDefaultSeriesTolerance = 1e-12;
inline constexpr std::int64_t kDefaultMaxTerms = 1'000'000;

/// Saalschuetz excess sum(b) - sum(a), which decides convergence at |z| = 1
/// when p = q + 1.
double parameter_excess(const SeriesSpec& spec);

/// Classifies the series. Throws Error(invalid_spec) when a denominator is a
/// nonpositive integer -M that no numerator -N with N < M cuts off first.
///
/// Mapping for the shapes not covered by the unit-argument test: p <= q is
/// entire and reported convergent_inside_disk for |z| < 1 and
/// convergent_at_unit otherwise; p > q + 1 is divergent_at_unit for z != 0.
SeriesClass classify(const SeriesSpec& spec);

/// Sums the series by the term recurrence with compensated accumulation.
///
/// Stops on exact termination, or after three consecutive terms below
/// rel_tol * |partial sum|, or at max_terms (reported via status). For the
/// logarithmically convergent case p = q + 1, z = 1 the partial sums are also
/// extrapolated at doubling checkpoints (Richardson elimination of the known
/// tail exponents excess, excess+1, ...); convergence of the extrapolants to
/// rel_tol also counts as converged. Throws Error(divergent) when the series
/// does not converge.
EvalResult evaluate(const SeriesSpec& spec, double rel_tol = kDefaultSeriesTolerance,
                    std::int64_t max_terms = kDefaultMaxTerms);

}  // namespace brt
