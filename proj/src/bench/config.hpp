/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "datagen/datagen.hpp"
#include "kernels/kernels.hpp"
#include "modelsel/modelsel.hpp"
#include "ordermetrics/ordermetrics.hpp"

namespace gosvm {

// Benchmark recipe, read from a flat sectioned key=value file.  One config
// describes one experiment: a data source, split sizes, the parameter grid,
// and which model-selection strategies to report.
struct ExperimentConfig {
  // [experiment]
  std::string name = "experiment";
  std::uint64_t seed = 1;
  int realizations = 12;
  int threads = 0;  // 0 = hardware concurrency
  std::string out_dir = ".";

  // [data]
  std::string generator;  // "mackey-glass" | "survival" | "file"
  std::string path;       // file source
  MackeyGlassConfig mg;
  SurvivalConfig survival;
  bool survival_median_horizon = true;  // balance classes via median event time
  long n_train = 50;
  long n_valid = -1;  // -1: same size as the training set
  long n_extended = 2000;
  long n_test = 4000;
  long min_test = 1800;  // declared lower bound on the test split

  // [grid]
  GridAxes axes = GridAxes::standard();

  // [methods]
  KernelKind kernel = KernelKind::Rbf;
  OrderingMode ordering = OrderingMode::Global;
  double fixed_width = 0.0;  // > 0 skips quantile width selection
  std::vector<double> quantiles = {0.1, 0.25, 0.5};
  std::vector<SelectionStrategy> strategies = {SelectionStrategy::Unsmooth,
                                               SelectionStrategy::Smoothed,
                                               SelectionStrategy::Extended};

  long valid_size() const { return n_valid >= 0 ? n_valid : n_train; }
};

// Throws InvalidConfig when any field is out of range or inconsistent.
void validate(const ExperimentConfig& cfg);

// Parses the sectioned key=value format; unknown sections or keys are Parse
// errors so typos cannot silently fall back to defaults.
ExperimentConfig parse_config(std::istream& in, const std::string& origin);
ExperimentConfig load_config(const std::string& path);

}  // namespace gosvm
