/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <optional>
#include <vector>

#include "core/dataset.hpp"
#include "core/error.hpp"
#include "kernels/kernels.hpp"
#include "ordermetrics/ordermetrics.hpp"
#include "svm/nusvm.hpp"

namespace gosvm {

struct GoSvmParams {
  double nu_b = 0.5;   // classification capacity, in (0, 2 min(n+,n-)/n]
  double nu_o = 0.5;   // ordinal capacity, in [0, 1]
  double alpha = 0.5;  // blend between the classification and ordinal terms
  KernelSpec kernel;
  OrderingMode ordering = OrderingMode::Global;
};

// Slot assignment of samples to ordinal intervals.
struct SlotIndex {
  std::vector<int> indices;  // one slot per sample, in [0, n_slots)
  int n_slots = 0;
};

/*
 * Global: distinct oracle values get consecutive ranks, ties share a rank.
 * PerClass: negative-class ranks first, one reserved empty slot, then
 * positive-class ranks, giving each class its own ordering.
 */
SlotIndex build_index(const Dataset& ds, OrderingMode mode);

struct GoSvmSolution {
  TrainedModel model;   // shared discriminant: f(x) = sum_i alphas_i k(.,x) + b
  OrderingMode ordering = OrderingMode::Global;
  SlotIndex index;

  // Interval boundaries, n_slots+1 entries; the outer two are -inf/+inf.
  // Strictly increasing whenever rho_o > 0 at the optimum; adjacent interior
  // boundaries may coincide in the degenerate rho_o = 0 case.
  Eigen::VectorXd g;
  double rho_b = 0.0;
  double rho_o = 0.0;
  Eigen::VectorXd xi;    // classification slacks, >= 0
  Eigen::VectorXd zeta;  // signed ordinal adjustments
  double n_star = 0.0;
  double objective = 0.0;
  double achieved_balance = 0.0;  // loss_balance at w = 1 on training data
  int iterations = 0;
};

/*
 * Joint classification + ordinal trainer.  With f expanded over the training
 * kernel (Representer theorem), it solves
 *
 *   min (1/2) b'Kb + alpha (-nu_b rho_b + (1/n) sum xi_i)
 *          + (1-alpha) (-nu_o rho_o + (1/n*) sum (zp_i + zm_i))
 *   s.t. y_i ((Kb)_i + bias) >= rho_b - xi_i
 *        g_{J(i)} + rho_o/2 <= (Kb)_i + zp_i - zm_i <= g_{J(i)+1} - rho_o/2
 *        g nondecreasing, xi, zp, zm, rho_b, rho_o >= 0
 *
 * with n* = n(n-1)/2 and J the slot index.  The outermost boundaries are the
 * infinite sentinels, so their constraint rows are dropped; at alpha = 0 the
 * classification block is dropped (rho_b = 0, xi = 0 reported) and at
 * alpha = 1 the ordinal block is dropped (g reconstructed afterwards).
 */
GoSvmSolution train_gosvm(const Dataset& ds, const GoSvmParams& p,
                          const qp::QpOptions& opt = {});

struct EvalMetrics {
  double error_rate = 0.0;
  std::optional<double> liso;  // present when the test set carries an oracle
  double balance = 0.0;
};

EvalMetrics evaluate(const GoSvmSolution& sol, const Dataset& test);
EvalMetrics evaluate_model(const TrainedModel& m, const Dataset& test,
                           OrderingMode mode = OrderingMode::Global);

// Structured text round-trip ("gosvm-model v1", kind gosvm).  Slacks and the
// slot index are not persisted; loaded solutions carry the model, boundaries,
// margins, and balance.
void write_solution(const GoSvmSolution& sol, std::ostream& out);
GoSvmSolution read_solution(std::istream& in);

}  // namespace gosvm
