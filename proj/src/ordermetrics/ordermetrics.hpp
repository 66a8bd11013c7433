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
#include "kernels/kernels.hpp"

namespace gosvm {

enum class OrderingMode { Global, PerClass };

const char* ordering_mode_name(OrderingMode m);

// Zero-one classification loss with the boundary yhat = 0 counted as a
// negative prediction.
int l01(double yhat, double y);

// Threshold loss: zero-one loss of the t-shifted pair.
int lthr(double yhat, double y, double t);

/*
 * Empirical isotonic discrepancy between a discriminant vector h and a
 * target vector: the worst case, over binarizations of the targets at a cut
 * t, of the best achievable zero-one error when h is binarized at a cut s.
 * Cuts run over midpoints of consecutive distinct sorted values plus the two
 * infinite sentinels, which exhausts every indicator labeling a monotone
 * transform of h could produce.  PerClass evaluates the same quantity within
 * each label class and takes the maximum.
 */
double empirical_liso(const Eigen::VectorXd& h, const Eigen::VectorXd& targets,
                      OrderingMode mode = OrderingMode::Global,
                      const Eigen::VectorXi* labels = nullptr);

// Worst-case over cuts on h2 of the best alignment of cut indicators of h1;
// zero exactly when h1 orders the sample like h2.
double empirical_order_distance(const Eigen::VectorXd& h1,
                                const Eigen::VectorXd& h2);

// Signed class-weighted classification loss: each false negative adds
// max(w, 1), each false positive subtracts max(1, 1/w); mean over samples.
double loss_balance(const Eigen::VectorXd& yhat, const Eigen::VectorXi& y,
                    double w);

/*
 * Ordinal slot loss: sum over samples of the minimal |adjustment| moving h_i
 * into [g_{j}+rho/2, g_{j+1}-rho/2] for its slot j = index[i].  Boundaries g
 * must be strictly increasing; the outermost entries may be -inf/+inf.
 */
double shashua_levin_loss(const Eigen::VectorXd& h,
                          const std::vector<int>& index,
                          const Eigen::VectorXd& g, double rho_o);

struct ExactOrdinalResult {
  // Weight vector for Linear kernels; expansion coefficients for Rbf.
  Eigen::VectorXd w;
  // Per-sample thresholds, reported in the original sample order.  In oracle
  // sort order consecutive thresholds are separated by at least rho.
  Eigen::VectorXd xi;
  double objective = 0.0;
  // max_i sum_j hinge(i, j), recomputed from (w, xi) directly.
  double hinge = 0.0;
};

/*
 * Small-n ordinal regression oracle.  Sorting the samples by oracle value
 * and writing y_ij = +1 when oracle_j > oracle_i (else -1), it solves
 *
 *   min (1/2)|w|^2 + C L
 *   s.t. e_ij >= rho - y_ij (w.x_j - xi_i),  e >= 0,
 *        sum_j e_ij <= L for every i,        xi_{i-1} + rho <= xi_i,
 *
 * as a dense QP over (w, xi, e, L).  Capped at n <= 12.
 */
ExactOrdinalResult exact_ordinal_objective(const Dataset& ds,
                                           const KernelSpec& ks,
                                           double C, double rho = 1.0);

}  // namespace gosvm
