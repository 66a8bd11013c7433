/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "core/dataset.hpp"
#include "core/error.hpp"
#include "svm/gosvm.hpp"

namespace gosvm {

struct GridAxes {
  std::vector<double> nu_b;
  std::vector<double> nu_o;
  std::vector<double> alpha;

  // nu axes 0.1..0.9 step 0.1 plus 0.95; alpha {0.1, 0.25, 0.5}.
  static GridAxes standard();
};

enum class CellStatus { Ok, Failed };

// Validation error per grid node, row-major over (i_nub, i_nuo, i_alpha).
// Failed cells carry error 1.0 so they repel selection and smoothing.
struct ValidationTensor {
  GridAxes axes;
  std::vector<double> errors;
  std::vector<CellStatus> status;

  std::size_t cell(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * axes.nu_o.size() + j) * axes.alpha.size() + k;
  }
  std::size_t size() const { return errors.size(); }
};

struct GridNode {
  std::size_t i_nub = 0, i_nuo = 0, i_alpha = 0;
  double nu_b = 0.0, nu_o = 0.0, alpha = 0.0;
  double error = 0.0;
};

struct GridResult {
  ValidationTensor tensor;
  // One entry per cell (tensor order); empty for Failed cells.  Retained so
  // the Extended strategy can re-score every candidate on a larger set.
  std::vector<std::optional<GoSvmSolution>> models;
};

// One train + validate per node; infeasible parameter combinations become
// Failed cells rather than errors.
GridResult grid_search(const Dataset& train, const Dataset& valid,
                       const GridAxes& axes, const KernelSpec& ks,
                       OrderingMode mode, const qp::QpOptions& opt = {});

// Separable nonnegative filter, one 1-D kernel per tensor axis, total sum 1.
struct SmoothingFilter {
  std::vector<double> k_nub, k_nuo, k_alpha;

  // Discretized Gaussians of lengths 5, 5, 3 with the given sigma (in grid
  // cells), each normalized.
  static SmoothingFilter gaussian(double sigma = 1.0);
};

// Separable convolution with replicate padding; shape-preserving.
ValidationTensor gaussian_smooth(const ValidationTensor& t,
                                 const SmoothingFilter& f);

enum class SelectionStrategy { Unsmooth, Smoothed, Extended };

const char* selection_strategy_name(SelectionStrategy s);

// Per-cell selection score in tensor order.  Unsmooth: the raw tensor.
// Smoothed: the tensor after gaussian_smooth.  Extended: per-cell error
// recomputed on the extended validation set (Failed cells keep 1.0).
std::vector<double> selection_scores(
    const GridResult& r, SelectionStrategy strategy,
    const Dataset* extended_valid = nullptr,
    const SmoothingFilter& f = SmoothingFilter::gaussian());

// Argmin of selection_scores; ties break toward the lexicographically
// smallest (i_nub, i_nuo, i_alpha).
GridNode select(const GridResult& r, SelectionStrategy strategy,
                const Dataset* extended_valid = nullptr,
                const SmoothingFilter& f = SmoothingFilter::gaussian());

// Cell index -> grid node helper for callers that post-process scores.
GridNode node_at(const ValidationTensor& t, std::size_t cell, double score);

// CSV audit dump: i_nub,i_nuo,i_alpha,nu_b,nu_o,alpha,error,status.
void write_tensor_csv(const ValidationTensor& t, std::ostream& out);

}  // namespace gosvm
