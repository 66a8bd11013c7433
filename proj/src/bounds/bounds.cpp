/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "bounds/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace gosvm {
namespace {

bool in_open01(double v) { return v > 0.0 && v < 1.0; }

}  // namespace

void validate(const BoundParams& p) {
  const bool ok = p.V >= 1 && std::isfinite(p.n) && p.n >= 1.0 &&
                  std::isfinite(p.C) && p.C > 0.0 && in_open01(p.delta1) &&
                  in_open01(p.delta2) && in_open01(p.delta3) &&
                  std::isfinite(p.d) && p.d >= 0.0 && std::isfinite(p.w) &&
                  p.w > 0.0 && p.phi > 0.0 && p.phi <= 1.0 &&
                  (p.ordering_multiplier == 2 || p.ordering_multiplier == 4);
  if (!ok) throw Error(ErrorCode::InvalidArgument, "bound parameters out of range");
}

double ordinal_bound(const BoundParams& p, double empirical_liso) {
  validate(p);
  const double logn = std::log(p.n);
  return empirical_liso +
         p.C * std::sqrt((p.ordering_multiplier * p.V * logn +
                          std::log(1.0 / p.delta2)) /
                         p.n);
}

double main_bound(const BoundParams& p) {
  validate(p);
  const double logn = std::log(p.n);
  const double vlog = p.V * logn;
  const double first =
      8.0 / (p.n * p.phi) *
      (4.0 * p.C * p.C * vlog + (1.0 + 2.0 * p.phi) * std::log(1.0 / p.delta1));
  const double second =
      128.0 * p.phi *
      (p.d + p.C * std::sqrt((vlog + std::log(1.0 / p.delta2)) / p.n));
  const double third = 128.0 * p.phi * p.C * std::max(p.w, 1.0 / p.w) *
                       std::sqrt((vlog + std::log(1.0 / p.delta3)) / p.n);
  return first + second + third;
}

double phi_schedule(double n, const PhiThresholds& t) {
  if (!(n >= 1.0) || !std::isfinite(n))
    throw Error(ErrorCode::InvalidArgument, "phi_schedule needs n >= 1");
  if (!(t.t_quarter >= 1.0) || !(t.t_half >= t.t_quarter))
    throw Error(ErrorCode::InvalidArgument, "phi thresholds must be ordered");
  if (n < t.t_quarter) return 1.0;
  if (n < t.t_half) return std::pow(n, -0.25);
  return std::pow(n, -0.5);
}

double appendix_epsilon(const BoundParams& p) {
  validate(p);
  const double vlog_n = p.V * std::log(p.n) / p.n;
  const double eps = p.C * p.C * vlog_n / p.phi + p.phi * p.d;
  const double radicand =
      p.C * p.C / (p.phi * p.phi) * vlog_n + 2.0 * p.d;
  const double psi = p.C * std::sqrt(radicand) * std::sqrt(vlog_n);
  if (eps + 1e-12 * std::max(1.0, eps) < psi)
    throw Error(ErrorCode::VerificationFailed,
                "fixed-point dominance check failed");
  return eps;
}

}  // namespace gosvm
