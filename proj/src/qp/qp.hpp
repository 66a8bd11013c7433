/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "core/error.hpp"

namespace gosvm::qp {

// Convex quadratic program
//
//   minimize    (1/2) x'Qx + c'x
//   subject to  A_eq x  = b_eq
//               A_in x <= b_in
//               lower <= x <= upper      (+-inf entries disable a bound)
//
// Q must be symmetric positive-semidefinite.
struct QpProblem {
  Eigen::MatrixXd Q;
  Eigen::VectorXd c;
  Eigen::MatrixXd A_eq;   // p x n (possibly 0 x n)
  Eigen::VectorXd b_eq;
  Eigen::MatrixXd A_in;   // m x n (possibly 0 x n)
  Eigen::VectorXd b_in;
  Eigen::VectorXd lower;  // size n or empty
  Eigen::VectorXd upper;  // size n or empty

  Eigen::Index n_var() const { return c.size(); }
};

enum class QpStatus { Optimal, Infeasible, Unbounded, MaxIter };

const char* qp_status_name(QpStatus s);

struct QpSolution {
  QpStatus status = QpStatus::MaxIter;
  Eigen::VectorXd x;
  double objective = 0.0;

  // Lagrange multipliers: eq free, the rest nonnegative.
  Eigen::VectorXd eq_duals;
  Eigen::VectorXd in_duals;
  Eigen::VectorXd lower_duals;
  Eigen::VectorXd upper_duals;

  int iterations = 0;

  // Infinity-norm KKT residuals at the returned point, unscaled.
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double complementarity = 0.0;
  double duality_gap = 0.0;

  // For Infeasible/Unbounded: residual of the returned certificate ray.
  double certificate_residual = 0.0;

  // Incumbent primal objective per interior-point iteration: the best value
  // seen so far, so the sequence is nonincreasing (diagnostics).
  std::vector<double> objective_history;
};

struct QpOptions {
  double tolerance = 1e-8;
  int max_iter = 200;
  // Iterate magnitude at which divergence is declared and the corresponding
  // infeasibility/unboundedness certificate is extracted.
  double divergence_threshold = 1e8;
};

// Primal-dual interior-point method (Mehrotra predictor-corrector) on dense
// KKT systems with static regularization 1e-9.  Throws IllConditioned when
// the KKT factorizations break down beyond rescue.
QpSolution solve_qp(const QpProblem& p, const QpOptions& opt = {});

// Plain-text dump.  Format: a "qp v1" magic line, a dimension header line
// "n <vars> eq <rows> ineq <rows> bounded <0|1>", then each block as a line
// naming it followed by its entries row-major, one row per line, 17
// significant digits.
void dump_problem(const QpProblem& p, std::ostream& out);

// Scale used for residual comparisons: 1 + max absolute entry of the data.
double problem_scale(const QpProblem& p);

}  // namespace gosvm::qp
