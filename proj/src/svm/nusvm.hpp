/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <Eigen/Dense>
#include <iosfwd>

#include "core/dataset.hpp"
#include "core/error.hpp"
#include "kernels/kernels.hpp"
#include "qp/qp.hpp"

namespace gosvm {

// Kernel-expansion model: f(x) = sum_i alphas_i k(support_i, x) + bias.
// alphas are the signed dual coefficients (alpha_i y_i in dual notation).
struct TrainedModel {
  Eigen::VectorXd alphas;
  double bias = 0.0;
  KernelSpec kernel;
  Eigen::MatrixXd support;  // rows are retained training samples
};

double predict(const TrainedModel& m, const Eigen::VectorXd& x);
Eigen::VectorXd predict(const TrainedModel& m, const Eigen::MatrixXd& x);

struct NuSvmResult {
  TrainedModel model;
  double rho = 0.0;    // achieved classification margin, >= 0
  double hinge = 0.0;  // mean training hinge loss at margin rho
  int iterations = 0;
};

/*
 * nu-SVM in its standard dual form,
 *
 *   min (1/2) a' (yy' . K) a   s.t.  y'a = 0,  1'a = nu,  0 <= a <= 1/n,
 *
 * solved with the interior-point QP.  The bias and margin are recovered from
 * the margin support vectors (0 < a_i < 1/n with activity tolerance 1e-6),
 * falling back to the equality-constraint multipliers when one class has no
 * free support vector.  An infeasibility certificate from the solver (which
 * occurs exactly when nu > 2 min(n+, n-)/n) surfaces as InfeasibleNu.
 */
NuSvmResult train_nusvm(const Dataset& ds, double nu, const KernelSpec& ks,
                        const qp::QpOptions& opt = {});

// Structured text round-trip ("gosvm-model v1", kind nusvm).
void write_model(const NuSvmResult& r, std::ostream& out);
NuSvmResult read_model(std::istream& in);

}  // namespace gosvm
