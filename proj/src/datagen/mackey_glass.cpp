/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <cmath>
#include <cstdint>
#include <vector>

#include "datagen/datagen.hpp"

namespace gosvm {

namespace {

void validate(const MackeyGlassConfig& c) {
  auto bad = [](const char* msg) { throw Error(ErrorCode::InvalidConfig, msg); };
  if (!(c.dt > 0.0) || !std::isfinite(c.dt)) bad("dt must be > 0");
  if (!(c.tau > 0.0) || !std::isfinite(c.tau)) bad("tau must be > 0");
  const double steps = c.tau / c.dt;
  if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps)) {
    bad("tau must be an integer multiple of dt");
  }
  if (std::round(steps) < 1.0) bad("tau must span at least one step");
  if (c.sample_every < 1) bad("sample_every must be >= 1");
  if (!(c.x0 > 0.0) || !std::isfinite(c.x0)) bad("x0 must be > 0");
  if (!(c.beta > 0.0) || !(c.gamma > 0.0)) bad("beta and gamma must be > 0");
  if (c.exponent < 1) bad("exponent must be >= 1");
  if (c.horizon < 1) bad("horizon must be >= 1");
  if (c.embed < 1) bad("embed must be >= 1");
}

}  // namespace

std::vector<double> gen_mackey_glass(const MackeyGlassConfig& cfg, int length,
                                     RngSeed seed) {
  validate(cfg);
  if (length < 1) {
    throw Error(ErrorCode::InvalidConfig, "length must be >= 1");
  }
  Rng rng(seed);
  const int offset = static_cast<int>(rng.uniform_int(512));

  const auto delay = static_cast<std::size_t>(std::llround(cfg.tau / cfg.dt));
  // Ring buffer holds x at the last delay+1 grid times, so both the exact
  // delayed value and its successor (for half-step interpolation) are at hand.
  std::vector<double> ring(delay + 1, cfg.x0);
  std::size_t head = 0;  // position of x(t - tau)

  const auto rhs = [&cfg](double x, double xd) {
    return cfg.beta * xd / (1.0 + std::pow(xd, cfg.exponent)) - cfg.gamma * x;
  };

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(length));
  const long total_emits = static_cast<long>(offset) + length;
  double x = cfg.x0;
  long emitted = 0;
  long step = 0;
  while (emitted < total_emits) {
    if (step % cfg.sample_every == 0) {
      if (emitted >= offset) out.push_back(x);
      ++emitted;
      if (emitted == total_emits) break;
    }
    const double xd0 = ring[head];
    const double xd1 = ring[(head + 1) % ring.size()];
    const double xdh = 0.5 * (xd0 + xd1);  // delayed value at the half step
    const double k1 = rhs(x, xd0);
    const double k2 = rhs(x + 0.5 * cfg.dt * k1, xdh);
    const double k3 = rhs(x + 0.5 * cfg.dt * k2, xdh);
    const double k4 = rhs(x + cfg.dt * k3, xd1);
    x += cfg.dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    // Overwrite the slot that just fell out of the delay window.
    ring[head] = x;
    head = (head + 1) % ring.size();
    ++step;
  }
  return out;
}

Dataset embed_series(const std::vector<double>& series,
                     const MackeyGlassConfig& cfg) {
  validate(cfg);
  const long n_raw = static_cast<long>(series.size());
  const long first_t = cfg.embed - 1;
  const long last_t = n_raw - 1 - cfg.horizon;
  if (last_t < first_t) {
    throw Error(ErrorCode::SeriesTooShort,
                "series shorter than embed + horizon");
  }
  const long n = last_t - first_t + 1;
  Eigen::MatrixXd x(n, cfg.embed);
  Eigen::VectorXi y(n);
  Eigen::VectorXd oracle(n);
  for (long t = first_t; t <= last_t; ++t) {
    const long row = t - first_t;
    for (int j = 0; j < cfg.embed; ++j) {
      x(row, j) = series[static_cast<std::size_t>(t - cfg.embed + 1 + j)];
    }
    const double future = series[static_cast<std::size_t>(t + cfg.horizon)];
    const double now = series[static_cast<std::size_t>(t)];
    y(row) = future > now ? 1 : -1;
    oracle(row) = std::abs(future - now);
  }
  return Dataset(std::move(x), std::move(y), std::move(oracle));
}

}  // namespace gosvm
