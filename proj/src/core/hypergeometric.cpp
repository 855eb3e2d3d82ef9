// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#include "hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>

#include "compensated.hpp"
#include "errors.hpp"
#include "special_functions.hpp"

namespace brt {

namespace {

double snap(double x) { return is_nonpositive_integer(x) ? std::round(x) : x; }

// Smallest N such that some numerator equals -N, if any.
std::optional<std::int64_t> termination_index(const std::vector<double>& numerators) {
  std::optional<std::int64_t> best;
  for (double a : numerators) {
    if (!is_nonpositive_integer(a)) continue;
    const auto n = -static_cast<std::int64_t>(std::llround(a));
    if (!best || n < *best) best = n;
  }
  return best;
}

void validate(const SeriesSpec& spec) {
  const auto cut = termination_index(spec.numerators);
  for (double b : spec.denominators) {
    if (!is_nonpositive_integer(b)) continue;
    const auto m = -static_cast<std::int64_t>(std::llround(b));
    if (!cut || *cut >= m) {
      std::ostringstream msg;
      msg << "invalid series: denominator parameter " << b
          << " is a nonpositive integer not preceded by a smaller terminating numerator";
      throw Error(ErrorCode::invalid_spec, msg.str());
    }
  }
}

// Richardson table over partial sums taken at term counts K, 2K, 4K, ...
// assuming S_K = S + c0 K^-e + c1 K^-(e+1) + ...
class TailExtrapolator {
 public:
  explicit TailExtrapolator(double leading_exponent) : exponent_(leading_exponent) {}

  // Returns the deepest available extrapolant.
  double push(double partial_sum) {
    std::vector<double> row{partial_sum};
    const std::size_t depth = std::min(previous_.size(), kDepth);
    for (std::size_t i = 0; i < depth; ++i) {
      const double factor = std::exp2(exponent_ + static_cast<double>(i));
      row.push_back((factor * row[i] - previous_[i]) / (factor - 1.0));
    }
    previous_ = std::move(row);
    return previous_.back();
  }

  bool full_depth() const { return previous_.size() == kDepth + 1; }

 private:
  static constexpr std::size_t kDepth = 4;
  double exponent_;
  std::vector<double> previous_;
};

}  // namespace

std::string_view to_string(SeriesClass c) {
  switch (c) {
    case SeriesClass::terminating: return "terminating";
    case SeriesClass::convergent_at_unit: return "convergent_at_unit";
    case SeriesClass::divergent_at_unit: return "divergent_at_unit";
    case SeriesClass::convergent_inside_disk: return "convergent_inside_disk";
  }
  return "unknown";
}

std::string_view to_string(EvalStatus s) {
  switch (s) {
    case EvalStatus::converged: return "converged";
    case EvalStatus::terminated_exactly: return "terminated_exactly";
    case EvalStatus::max_terms_reached: return "max_terms_reached";
  }
  return "unknown";
}

double parameter_excess(const SeriesSpec& spec) {
  const double sb = std::accumulate(spec.denominators.begin(), spec.denominators.end(), 0.0);
  const double sa = std::accumulate(spec.numerators.begin(), spec.numerators.end(), 0.0);
  return sb - sa;
}

SeriesClass classify(const SeriesSpec& spec) {
  validate(spec);
  if (termination_index(spec.numerators)) return SeriesClass::terminating;

  const std::size_t p = spec.numerators.size();
  const std::size_t q = spec.denominators.size();
  const double z = std::fabs(spec.argument);
  if (p <= q) {
    return z < 1.0 ? SeriesClass::convergent_inside_disk : SeriesClass::convergent_at_unit;
  }
  if (p > q + 1) {
    return spec.argument == 0.0 ? SeriesClass::convergent_inside_disk
                                : SeriesClass::divergent_at_unit;
  }
  if (z < 1.0) return SeriesClass::convergent_inside_disk;
  if (z > 1.0) return SeriesClass::divergent_at_unit;
  const double excess = parameter_excess(spec);
  // At z = -1 the alternating series converges for excess > -1.
  const double threshold = spec.argument > 0.0 ? 0.0 : -1.0;
  return excess > threshold ? SeriesClass::convergent_at_unit : SeriesClass::divergent_at_unit;
}

EvalResult evaluate(const SeriesSpec& spec, double rel_tol, std::int64_t max_terms) {
  const SeriesClass cls = classify(spec);
  if (cls == SeriesClass::divergent_at_unit) {
    std::ostringstream msg;
    msg << "series diverges: " << spec.numerators.size() << "F" << spec.denominators.size()
        << " at z=" << spec.argument << " needs sum(b)-sum(a) > 0, got "
        << parameter_excess(spec);
    throw Error(ErrorCode::divergent, msg.str());
  }

  // Sorted, snapped copies make the result independent of parameter order.
  std::vector<double> a(spec.numerators);
  std::vector<double> b(spec.denominators);
  std::transform(a.begin(), a.end(), a.begin(), snap);
  std::transform(b.begin(), b.end(), b.begin(), snap);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double z = spec.argument;

  const auto advance = [&](double term, std::int64_t k) {
    const double kk = static_cast<double>(k);
    double num = 1.0;
    double den = 1.0;
    for (double ai : a) num *= ai + kk;
    for (double bj : b) den *= bj + kk;
    return term * (num / den) * (z / (kk + 1.0));
  };

  EvalResult result;
  CompensatedSum sum;
  double term = 1.0;

  if (cls == SeriesClass::terminating) {
    const std::int64_t last = *termination_index(a);
    const std::int64_t count = std::min(last + 1, max_terms);
    for (std::int64_t k = 0; k < count; ++k) {
      sum += term;
      result.last_term_magnitude = std::fabs(term);
      if (k + 1 < count) term = advance(term, k);
    }
    result.value = sum.value();
    result.terms_used = count;
    result.status = count == last + 1 ? EvalStatus::terminated_exactly
                                      : EvalStatus::max_terms_reached;
    return result;
  }

  const bool logarithmic = a.size() == b.size() + 1 && z == 1.0;
  std::optional<TailExtrapolator> extrapolator;
  double largest_parameter = 1.0;
  if (logarithmic) {
    extrapolator.emplace(parameter_excess(spec));
    for (double x : a) largest_parameter = std::max(largest_parameter, std::fabs(x));
    for (double x : b) largest_parameter = std::max(largest_parameter, std::fabs(x));
  }
  // Remaining tail relative to the current term: about k/s for algebraic
  // decay at z=1, 1/(1-|z|) for geometric decay.
  const double excess = parameter_excess(spec);
  const double geometric_tail = std::fabs(z) < 1.0 ? 1.0 / (1.0 - std::fabs(z)) : 1.0;
  // Rounding in the term recurrence, amplified by the Richardson table, sets
  // a floor on how closely successive extrapolants can agree.
  const double agreement_tol = std::max(rel_tol, 1e-13);
  std::int64_t next_checkpoint = 64;
  double previous_extrapolant = 0.0;
  bool have_previous = false;
  int small_run = 0;

  for (std::int64_t k = 0; k < max_terms; ++k) {
    sum += term;
    result.last_term_magnitude = std::fabs(term);
    result.terms_used = k + 1;
    const double partial = sum.value();
    const double tail_scale =
        logarithmic ? std::max(1.0, static_cast<double>(k + 1) / excess) : geometric_tail;
    if (std::fabs(term) * tail_scale < rel_tol * std::fabs(partial)) {
      if (++small_run >= 3) {
        result.value = partial;
        result.status = EvalStatus::converged;
        return result;
      }
    } else {
      small_run = 0;
    }
    if (extrapolator && k + 1 == next_checkpoint) {
      next_checkpoint *= 2;
      const double estimate = extrapolator->push(partial);
      // The asymptotic tail expansion is only trusted well past the
      // parameters' scale.
      const bool asymptotic = static_cast<double>(k + 1) > 16.0 * largest_parameter;
      if (extrapolator->full_depth() && asymptotic && have_previous &&
          std::fabs(estimate - previous_extrapolant) <= agreement_tol * std::fabs(estimate)) {
        result.value = estimate;
        result.status = EvalStatus::converged;
        return result;
      }
      previous_extrapolant = estimate;
      have_previous = extrapolator->full_depth() && asymptotic;
    }
    term = advance(term, k);
  }
  result.value = have_previous ? previous_extrapolant : sum.value();
  result.status = EvalStatus::max_terms_reached;
  return result;
}

}  // namespace brt
