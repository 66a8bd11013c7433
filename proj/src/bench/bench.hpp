/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bench/config.hpp"
#include "core/dataset.hpp"

namespace gosvm {

// Reserved stream ids; realization r uses stream r (1-based), so these sit
// far above any plausible realization count.
inline constexpr std::uint64_t kSeriesStream = 1000000;
inline constexpr std::uint64_t kSplitStream = 1000001;

struct MethodResult {
  std::string method;    // "nu-svm" | "go-svm"
  std::string strategy;  // "std" / "ext" or "unsmooth" / "smoothed" / "extended"
  std::vector<double> errors;  // test error per realization, index r-1
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation (n-1); 0 when n < 2
};

struct BenchResult {
  std::string experiment;
  std::vector<MethodResult> methods;
};

/*
 * Full benchmark protocol.  The test split is held out once; each
 * realization reshuffles the remaining pool into train / validation /
 * extended-validation splits.  Per realization: kernel widths are proposed
 * from pairwise-distance quantiles of the training set, a nu-SVM sweep picks
 * (width, nu) by holdout ("std") and by extended holdout ("ext"), and the
 * std-selected width is reused for the GO-SVM grid, from which each
 * configured strategy picks a node.  All reported numbers are test errors.
 *
 * Determinism: the master dataset uses stream kSeriesStream, the test/pool
 * split uses kSplitStream, and realization r shuffles with stream r, so a
 * fixed config and seed reproduce results bit-for-bit regardless of thread
 * count.
 */
BenchResult run_bench(const ExperimentConfig& cfg);

// experiment,method,strategy,realization,error
void write_results_csv(const BenchResult& r, std::ostream& out);

// Fixed-width table: one row per experiment, one column per method/strategy,
// cells "mean (stddev)".
void write_summary_table(const BenchResult& r, std::ostream& out);

}  // namespace gosvm
