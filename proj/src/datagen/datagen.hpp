/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>
#include <vector>

#include "core/dataset.hpp"
#include "core/error.hpp"
#include "core/rng.hpp"

namespace gosvm {

struct MackeyGlassConfig {
  double tau = 17.0;      // delay, time units; must be an integer multiple of dt
  double dt = 0.1;        // integration step
  int sample_every = 10;  // steps per emitted point
  double x0 = 0.9;        // constant history for t <= 0
  double beta = 0.2;
  double gamma = 0.1;
  int exponent = 10;
  int horizon = 5;        // prediction offset, in emitted points
  int embed = 4;          // embedding length
};

/*
 * Integrates dx/dt = beta x(t-tau) / (1 + x(t-tau)^exponent) - gamma x(t)
 * with RK4 at step dt; the delayed value comes from a ring buffer of past
 * states, linearly interpolated at the half-step stages.  Emits every
 * sample_every-th state.  The seed only randomizes the start offset: between
 * 0 and 511 leading emitted points are discarded, so realizations sample
 * different stretches of one deterministic trajectory.
 */
std::vector<double> gen_mackey_glass(const MackeyGlassConfig& cfg, int length,
                                     RngSeed seed);

// Sliding windows (x_{t-embed+1}, ..., x_t); label +1 iff x_{t+horizon} > x_t;
// oracle |x_{t+horizon} - x_t|.
Dataset embed_series(const std::vector<double>& series,
                     const MackeyGlassConfig& cfg);

struct SurvivalConfig {
  int dim = 10;
  double noise = 0.1;        // stddev of the log-time noise
  double horizon = 1.0;      // fixed prediction time, > 0
  double censor_rate = 0.0;  // exponential censoring rate; 0 disables
  int n = 100;
};

/*
 * Log-linear event times: features x uniform on [0,1]^dim, direction theta a
 * fixed positive unit vector drawn once per seed, T = exp(theta.x + eps) with
 * eps ~ Normal(0, noise).  Label +1 iff T > horizon; oracle |T - horizon|.
 * Censoring times are drawn (to keep the stream layout stable) but ignored.
 */
Dataset gen_survival(const SurvivalConfig& cfg, RngSeed seed);

// Same generator, with the horizon set to the sample median event time.
struct SurvivalSample {
  Dataset data;
  double horizon = 0.0;
};
SurvivalSample gen_survival_median_horizon(const SurvivalConfig& cfg,
                                           RngSeed seed);

// CSV with header p0..p99,label[,confidence]; pixels real-valued, label -1/+1,
// confidence becomes the oracle when present.
Dataset load_digits(const std::string& path);

}  // namespace gosvm
