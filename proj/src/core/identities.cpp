// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#include "identities.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace brt {

SeriesSpec dougall_ramanujan_series(const DougallRamanujanInstance& d) {
  return {{d.m - 1.0, (d.m + 1.0) / 2.0, -d.x, -d.y, -d.z},
          {(d.m - 1.0) / 2.0, d.x + d.m, d.y + d.m, d.z + d.m},
          1.0};
}

SeriesSpec fatawat_vyas_series(const FatawatVyasInstance& i) {
  return {{i.f - 1.0, i.f / 2.0 + 1.0, (i.f + 1.0) / 2.0, i.u, i.v, i.w},
          {i.f / 2.0 - 1.0, (i.f - 1.0) / 2.0, i.f - i.u, i.f - i.v, i.f - i.w},
          1.0};
}

SignedLogValue dougall_ramanujan_rhs(const DougallRamanujanInstance& d) {
  const double num[] = {d.x + d.m, d.y + d.m, d.z + d.m, d.x + d.y + d.z + d.m};
  const double den[] = {d.m, d.x + d.y + d.m, d.y + d.z + d.m, d.x + d.z + d.m};
  return gamma_quotient(num, den);
}

double fatawat_vyas_kappa(const FatawatVyasInstance& i) {
  if (i.u == 0.0) {
    throw Error(ErrorCode::singular, "kappa: u = 0 makes h infinite; use the u -> 0 limit");
  }
  const double h = i.f * (i.f - 2.0) / (4.0 * i.u);
  const double c2 = 1.0 + i.u + i.v - i.f;
  const double c3 = 1.0 + i.u + i.w - i.f;
  const double denominator = h * c2 * c3;
  if (denominator == 0.0) {
    std::ostringstream msg;
    msg << "kappa: vanishing denominator h(1+u+v-f)(1+u+w-f) at f=" << i.f << " u=" << i.u
        << " v=" << i.v << " w=" << i.w;
    throw Error(ErrorCode::singular, msg.str());
  }
  return (i.v * i.w - h * (1.0 + i.u + i.v + i.w - i.f)) / denominator;
}

double fatawat_vyas_kappa_limit(double f, double v, double w) {
  const double denominator = (1.0 + v - f) * (1.0 + w - f);
  if (denominator == 0.0) {
    throw Error(ErrorCode::singular, "kappa limit: vanishing denominator (1+v-f)(1+w-f)");
  }
  return -(1.0 + v + w - f) / denominator;
}

SignedLogValue fatawat_vyas_rhs(const FatawatVyasInstance& i) {
  const double kappa = std::fabs(i.u) < kIntegerSnap ? fatawat_vyas_kappa_limit(i.f, i.v, i.w)
                                                     : fatawat_vyas_kappa(i);
  const double num[] = {i.f - i.u, i.f - i.v, i.f - i.w, i.f - i.u - i.v - i.w - 1.0};
  const double den[] = {i.f, i.f - i.v - i.w, i.f - i.u - i.v - 1.0, i.f - i.u - i.w - 1.0};
  return gamma_quotient(num, den) * SignedLogValue::from_real(kappa);
}

double relative_difference(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  if (scale == 0.0) return 0.0;
  return std::fabs(a - b) / scale;
}

namespace {

IdentityReport compare(const SeriesSpec& spec, const SignedLogValue& rhs, double rel_tol,
                       std::int64_t max_terms) {
  IdentityReport report;
  report.series = evaluate(spec, rel_tol, max_terms);
  report.lhs = report.series.value;
  report.rhs = rhs.to_real();
  report.rel_error = relative_difference(report.lhs, report.rhs);
  return report;
}

}  // namespace

IdentityReport check_identity(const DougallRamanujanInstance& inst, double rel_tol,
                              std::int64_t max_terms) {
  return compare(dougall_ramanujan_series(inst), dougall_ramanujan_rhs(inst), rel_tol,
                 max_terms);
}

IdentityReport check_identity(const FatawatVyasInstance& inst, double rel_tol,
                              std::int64_t max_terms) {
  return compare(fatawat_vyas_series(inst), fatawat_vyas_rhs(inst), rel_tol, max_terms);
}

IdentityReport check_identity(const IdentityInstance& inst, double rel_tol,
                              std::int64_t max_terms) {
  return std::visit([&](const auto& i) { return check_identity(i, rel_tol, max_terms); }, inst);
}

}  // namespace brt
