// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <variant>

#include "hypergeometric.hpp"
#include "special_functions.hpp"

namespace brt {

/// Well-poised 5F4 summed in closed form by Dougall's theorem:
///   5F4(m-1, (m+1)/2, -x, -y, -z; (m-1)/2, x+m, y+m, z+m; 1).
struct DougallRamanujanInstance {
  double m = 2.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Extension of Dougall's theorem to the 6F5
///   6F5(f-1, f/2+1, (f+1)/2, u, v, w; f/2-1, (f-1)/2, f-u, f-v, f-w; 1).
struct FatawatVyasInstance {
  double f = 4.0;
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
};

SeriesSpec dougall_ramanujan_series(const DougallRamanujanInstance& inst);
SeriesSpec fatawat_vyas_series(const FatawatVyasInstance& inst);

/// Gamma(x+m)Gamma(y+m)Gamma(z+m)Gamma(x+y+z+m) /
///   (Gamma(m)Gamma(x+y+m)Gamma(y+z+m)Gamma(x+z+m)).
SignedLogValue dougall_ramanujan_rhs(const DougallRamanujanInstance& inst);

/// kappa = (vw - h(1+u+v+w-f)) / (h(1+u+v-f)(1+u+w-f)), h = f(f-2)/(4u).
/// Throws Error(singular) for u == 0, h == 0 or a vanishing denominator.
double fatawat_vyas_kappa(const FatawatVyasInstance& inst);

/// h -> infinity limit of kappa, i.e. u -> 0:
///   -(1+v+w-f) / ((1+v-f)(1+w-f)).
double fatawat_vyas_kappa_limit(double f, double v, double w);

/// Gamma quotient of the extended Dougall theorem times kappa. Uses the
/// kappa limit when u is within kIntegerSnap of zero.
SignedLogValue fatawat_vyas_rhs(const FatawatVyasInstance& inst);

enum class IdentityKind { dougall, fatawat_vyas };

struct IdentityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_error = 0.0;
  EvalResult series;
};

/// Sums the series side with evaluate() and compares with the closed side.
IdentityReport check_identity(const DougallRamanujanInstance& inst,
                              double rel_tol = kDefaultSeriesTolerance,
                              std::int64_t max_terms = kDefaultMaxTerms);
IdentityReport check_identity(const FatawatVyasInstance& inst,
                              double rel_tol = kDefaultSeriesTolerance,
                              std::int64_t max_terms = kDefaultMaxTerms);

using IdentityInstance = std::variant<DougallRamanujanInstance, FatawatVyasInstance>;
IdentityReport check_identity(const IdentityInstance& inst,
                              double rel_tol = kDefaultSeriesTolerance,
                              std::int64_t max_terms = kDefaultMaxTerms);

/// |a - b| / max(|a|, |b|), zero when both vanish.
double relative_difference(double a, double b);

}  // namespace brt
