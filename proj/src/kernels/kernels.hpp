/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/dataset.hpp"
#include "core/error.hpp"

namespace gosvm {

enum class KernelKind { Linear, Rbf };

// Rbf: k(x, x') = exp(-|x - x'|^2 / (2 width^2)), width in distance units.
struct KernelSpec {
  KernelKind kind = KernelKind::Linear;
  double width = 1.0;

  static KernelSpec linear() { return {KernelKind::Linear, 1.0}; }
  static KernelSpec rbf(double width) { return {KernelKind::Rbf, width}; }
};

const char* kernel_kind_name(KernelKind k);

// Gram matrix G_ij = k(a_i, b_j); rows of the inputs are samples.
Eigen::MatrixXd gram(const KernelSpec& ks, const Eigen::MatrixXd& a,
                     const Eigen::MatrixXd& b);
Eigen::MatrixXd gram(const KernelSpec& ks, const Dataset& a, const Dataset& b);

// Nearest-rank quantiles of the pairwise Euclidean distances over distinct
// index pairs.  Quantiles must lie in (0, 1].
std::vector<double> width_quantiles(const Dataset& ds,
                                    const std::vector<double>& qs);

}  // namespace gosvm
