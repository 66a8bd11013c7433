/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <algorithm>
#include <cmath>
#include <vector>

#include "datagen/datagen.hpp"

namespace gosvm {

namespace {

void validate(const SurvivalConfig& c, bool need_horizon) {
  auto bad = [](const char* msg) { throw Error(ErrorCode::InvalidConfig, msg); };
  if (c.dim < 1) bad("dim must be >= 1");
  if (c.n < 1) bad("n must be >= 1");
  if (!(c.noise >= 0.0) || !std::isfinite(c.noise)) bad("noise must be >= 0");
  if (!(c.censor_rate >= 0.0) || !std::isfinite(c.censor_rate)) {
    bad("censor_rate must be >= 0");
  }
  if (need_horizon && (!(c.horizon > 0.0) || !std::isfinite(c.horizon))) {
    bad("horizon must be > 0");
  }
}

// Draws features and event times; the fixed direction theta has positive
// components so larger features always mean later events.
void draw_events(const SurvivalConfig& cfg, Rng* rng, Eigen::MatrixXd* x,
                 std::vector<double>* times) {
  Eigen::VectorXd theta(cfg.dim);
  for (int j = 0; j < cfg.dim; ++j) theta(j) = std::abs(rng->gaussian());
  const double nrm = theta.norm();
  if (nrm == 0.0) {
    theta.setConstant(1.0 / std::sqrt(static_cast<double>(cfg.dim)));
  } else {
    theta /= nrm;
  }
  x->resize(cfg.n, cfg.dim);
  times->resize(static_cast<std::size_t>(cfg.n));
  for (int i = 0; i < cfg.n; ++i) {
    for (int j = 0; j < cfg.dim; ++j) (*x)(i, j) = rng->uniform();
    const double eps = cfg.noise > 0.0 ? cfg.noise * rng->gaussian() : 0.0;
    (*times)[static_cast<std::size_t>(i)] = std::exp(theta.dot(x->row(i)) + eps);
    if (cfg.censor_rate > 0.0) {
      // Censoring time, drawn for stream stability but deliberately unused.
      (void)(-std::log(1.0 - rng->uniform()) / cfg.censor_rate);
    }
  }
}

Dataset label_by_horizon(Eigen::MatrixXd x, const std::vector<double>& times,
                         double horizon) {
  const auto n = static_cast<Eigen::Index>(times.size());
  Eigen::VectorXi y(n);
  Eigen::VectorXd oracle(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = times[static_cast<std::size_t>(i)];
    y(i) = t > horizon ? 1 : -1;
    oracle(i) = std::abs(t - horizon);
  }
  return Dataset(std::move(x), std::move(y), std::move(oracle));
}

}  // namespace

Dataset gen_survival(const SurvivalConfig& cfg, RngSeed seed) {
  validate(cfg, true);
  Rng rng(seed);
  Eigen::MatrixXd x;
  std::vector<double> times;
  draw_events(cfg, &rng, &x, &times);
  return label_by_horizon(std::move(x), times, cfg.horizon);
}

SurvivalSample gen_survival_median_horizon(const SurvivalConfig& cfg,
                                           RngSeed seed) {
  validate(cfg, false);
  Rng rng(seed);
  Eigen::MatrixXd x;
  std::vector<double> times;
  draw_events(cfg, &rng, &x, &times);
  std::vector<double> sorted(times);
  std::sort(sorted.begin(), sorted.end());
  // Nearest-rank median, consistent with the width quantile convention.
  const std::size_t rank = (sorted.size() + 1) / 2;
  SurvivalSample out;
  out.horizon = sorted[rank - 1];
  out.data = label_by_horizon(std::move(x), times, out.horizon);
  return out;
}

}  // namespace gosvm
