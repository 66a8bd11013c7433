/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "svm/nusvm.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "qp/qp.hpp"
#include "svm/model_io.hpp"

namespace gosvm {

namespace detail {

// Reads one whitespace-separated token, with a named error on EOF.
std::string next_token(std::istream& in, const char* what) {
  std::string t;
  if (!(in >> t)) {
    throw Error(ErrorCode::Parse,
                std::string("model file truncated, expected ") + what);
  }
  return t;
}

double next_real(std::istream& in, const char* what) {
  return parse_real(next_token(in, what), what);
}

long next_int(std::istream& in, const char* what) {
  const double v = next_real(in, what);
  if (v != std::floor(v)) {
    throw Error(ErrorCode::Parse, std::string(what) + " must be an integer");
  }
  return static_cast<long>(v);
}

void expect_token(std::istream& in, const char* want) {
  const std::string got = next_token(in, want);
  if (got != want) {
    throw Error(ErrorCode::Parse, std::string("expected '") + want +
                                      "', found '" + got + "'");
  }
}

KernelSpec read_kernel_spec(std::istream& in) {
  expect_token(in, "kernel");
  const std::string kind = next_token(in, "kernel kind");
  if (kind == "linear") return KernelSpec::linear();
  if (kind == "rbf") return KernelSpec::rbf(next_real(in, "kernel width"));
  throw Error(ErrorCode::Parse, "unknown kernel kind '" + kind + "'");
}

std::string read_magic_and_kind(std::istream& in) {
  expect_token(in, "gosvm-model");
  expect_token(in, "v1");
  expect_token(in, "kind");
  return next_token(in, "model kind");
}

void read_alphas_support(std::istream& in, TrainedModel* m, long d, long n) {
  expect_token(in, "alphas");
  m->alphas.resize(n);
  for (long i = 0; i < n; ++i) m->alphas(i) = next_real(in, "alpha");
  expect_token(in, "support");
  m->support.resize(n, d);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < d; ++j) m->support(i, j) = next_real(in, "support value");
  }
}

void write_kernel_spec(const KernelSpec& ks, std::ostream& out) {
  out << "kernel " << kernel_kind_name(ks.kind);
  if (ks.kind == KernelKind::Rbf) out << " " << format_real(ks.width);
  out << "\n";
}

void write_alphas_support(const TrainedModel& m, std::ostream& out) {
  out << "alphas\n";
  for (Eigen::Index i = 0; i < m.alphas.size(); ++i) {
    if (i) out << " ";
    out << format_real(m.alphas(i));
  }
  out << "\nsupport\n";
  for (Eigen::Index i = 0; i < m.support.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.support.cols(); ++j) {
      if (j) out << " ";
      out << format_real(m.support(i, j));
    }
    out << "\n";
  }
}

}  // namespace detail

double predict(const TrainedModel& m, const Eigen::VectorXd& x) {
  if (x.size() != m.support.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "query dimension does not match the model");
  }
  Eigen::MatrixXd q(1, x.size());
  q.row(0) = x;
  return predict(m, q)(0);
}

Eigen::VectorXd predict(const TrainedModel& m, const Eigen::MatrixXd& x) {
  if (x.cols() != m.support.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "query dimension does not match the model");
  }
  return (gram(m.kernel, x, m.support) * m.alphas).array() + m.bias;
}

NuSvmResult train_nusvm(const Dataset& ds, double nu, const KernelSpec& ks,
                        const qp::QpOptions& opt) {
  const Eigen::Index n = ds.size();
  if (n < 2) {
    throw Error(ErrorCode::InsufficientData, "need at least two samples");
  }
  const Eigen::Index n_pos = ds.positives();
  const Eigen::Index n_neg = ds.negatives();
  if (n_pos == 0 || n_neg == 0) {
    throw Error(ErrorCode::EmptyClass, "training data must contain both classes");
  }
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    throw Error(ErrorCode::InfeasibleNu, "nu must be positive");
  }

  const Eigen::MatrixXd K = gram(ks, ds, ds);
  const Eigen::VectorXd y = ds.labels().cast<double>();

  qp::QpProblem p;
  p.Q = K.cwiseProduct(y * y.transpose());
  p.c = Eigen::VectorXd::Zero(n);
  p.A_eq.resize(2, n);
  p.A_eq.row(0) = y.transpose();
  p.A_eq.row(1).setOnes();
  p.b_eq.resize(2);
  p.b_eq << 0.0, nu;
  p.A_in.resize(0, n);
  p.b_in.resize(0);
  p.lower = Eigen::VectorXd::Zero(n);
  p.upper = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));

  qp::QpSolution sol = qp::solve_qp(p, opt);
  if (sol.status == qp::QpStatus::Infeasible) {
    throw Error(ErrorCode::InfeasibleNu,
                "nu = " + format_real(nu) + " exceeds the feasible range (0, " +
                    format_real(2.0 * static_cast<double>(std::min(n_pos, n_neg)) /
                                static_cast<double>(n)) +
                    "]");
  }
  if (sol.status != qp::QpStatus::Optimal) {
    throw Error(ErrorCode::IllConditioned,
                std::string("nu-svm dual solve failed: ") +
                    qp::qp_status_name(sol.status));
  }

  NuSvmResult res;
  res.iterations = sol.iterations;
  res.model.kernel = ks;
  res.model.support = ds.features();
  res.model.alphas = sol.x.cwiseProduct(y);

  // Margin support vectors determine bias and margin; averaging makes the
  // recovery robust to interior-point roundoff.
  const Eigen::VectorXd f0 = K * res.model.alphas;  // discriminant minus bias
  const double cap = 1.0 / static_cast<double>(n);
  const double act = std::min(1e-6, 0.25 * cap);
  double sum_pos = 0.0, sum_neg = 0.0;
  int cnt_pos = 0, cnt_neg = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (sol.x(i) > act && sol.x(i) < cap - act) {
      if (y(i) > 0) {
        sum_pos += f0(i);
        ++cnt_pos;
      } else {
        sum_neg += f0(i);
        ++cnt_neg;
      }
    }
  }
  if (cnt_pos > 0 && cnt_neg > 0) {
    const double avg_pos = sum_pos / cnt_pos;
    const double avg_neg = sum_neg / cnt_neg;
    res.model.bias = -(avg_pos + avg_neg) / 2.0;
    res.rho = (avg_pos - avg_neg) / 2.0;
  } else {
    /*
     * Dual KKT stationarity reads (yy'.K)a + l_y y + l_1 1 - mu_lo + mu_up
     * = 0.  On a free support vector this reduces to rho - y_i b + l_y y_i
     * + l_1 = 0 for both signs of y_i, whence l_y = b and l_1 = -rho.
     */
    res.model.bias = sol.eq_duals(0);
    res.rho = -sol.eq_duals(1);
  }
  res.rho = std::max(res.rho, 0.0);

  const Eigen::VectorXd f = f0.array() + res.model.bias;
  double hinge = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    hinge += std::max(0.0, res.rho - y(i) * f(i));
  }
  res.hinge = hinge / static_cast<double>(n);
  return res;
}

void write_model(const NuSvmResult& r, std::ostream& out) {
  const TrainedModel& m = r.model;
  out << "gosvm-model v1\n";
  out << "kind nusvm\n";
  detail::write_kernel_spec(m.kernel, out);
  out << "dim " << m.support.cols() << "\n";
  out << "n_support " << m.support.rows() << "\n";
  out << "bias " << format_real(m.bias) << "\n";
  out << "rho " << format_real(r.rho) << "\n";
  detail::write_alphas_support(m, out);
}

NuSvmResult read_model(std::istream& in) {
  const std::string kind = detail::read_magic_and_kind(in);
  if (kind != "nusvm") {
    throw Error(ErrorCode::Parse, "expected a nusvm model, found '" + kind + "'");
  }
  NuSvmResult r;
  r.model.kernel = detail::read_kernel_spec(in);
  detail::expect_token(in, "dim");
  const long d = detail::next_int(in, "dim");
  detail::expect_token(in, "n_support");
  const long n = detail::next_int(in, "n_support");
  if (d < 0 || n < 0) {
    throw Error(ErrorCode::Parse, "negative model dimensions");
  }
  detail::expect_token(in, "bias");
  r.model.bias = detail::next_real(in, "bias");
  detail::expect_token(in, "rho");
  r.rho = detail::next_real(in, "rho");
  detail::read_alphas_support(in, &r.model, d, n);
  return r;
}

}  // namespace gosvm
