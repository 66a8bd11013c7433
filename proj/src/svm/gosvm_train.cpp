/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "svm/gosvm.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>

#include "qp/qp.hpp"
#include "svm/model_io.hpp"

namespace gosvm {

namespace {

// Consecutive ranks of the distinct oracle values of the given samples.
void rank_into(const Eigen::VectorXd& oracle, const std::vector<int>& rows,
               int base, std::vector<int>* out, int* n_ranks) {
  std::map<double, int> rank;
  for (int r : rows) rank.emplace(oracle(r), 0);
  int next = 0;
  for (auto& kv : rank) kv.second = next++;
  for (int r : rows) {
    (*out)[static_cast<size_t>(r)] = base + rank.at(oracle(r));
  }
  *n_ranks = next;
}

}  // namespace

SlotIndex build_index(const Dataset& ds, OrderingMode mode) {
  const Eigen::VectorXd& oracle = ds.oracle();  // throws MissingOracle
  const Eigen::Index n = ds.size();
  SlotIndex idx;
  idx.indices.assign(static_cast<size_t>(n), 0);
  if (mode == OrderingMode::Global) {
    std::vector<int> all(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) all[static_cast<size_t>(i)] = static_cast<int>(i);
    rank_into(oracle, all, 0, &idx.indices, &idx.n_slots);
    return idx;
  }
  std::vector<int> pos, neg;
  for (Eigen::Index i = 0; i < n; ++i) {
    (ds.label(i) > 0 ? pos : neg).push_back(static_cast<int>(i));
  }
  if (pos.empty() || neg.empty()) {
    throw Error(ErrorCode::EmptyClass, "per-class ordering needs both classes");
  }
  int k_neg = 0, k_pos = 0;
  rank_into(oracle, neg, 0, &idx.indices, &k_neg);
  // One reserved empty slot separates the two class orderings.
  rank_into(oracle, pos, k_neg + 1, &idx.indices, &k_pos);
  idx.n_slots = k_neg + 1 + k_pos;
  return idx;
}

GoSvmSolution train_gosvm(const Dataset& ds, const GoSvmParams& prm,
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
  if (!(prm.alpha >= 0.0 && prm.alpha <= 1.0)) {
    throw Error(ErrorCode::InfeasibleParams, "alpha must lie in [0, 1]");
  }
  if (!(prm.nu_o >= 0.0 && prm.nu_o <= 1.0)) {
    throw Error(ErrorCode::InfeasibleParams, "nu_o must lie in [0, 1]");
  }
  const double nu_b_max = 2.0 * static_cast<double>(std::min(n_pos, n_neg)) /
                          static_cast<double>(n);
  const bool use_cls = prm.alpha > 0.0;
  const bool use_ord = prm.alpha < 1.0;
  if (use_cls && !(prm.nu_b > 0.0 && prm.nu_b <= nu_b_max)) {
    throw Error(ErrorCode::InfeasibleParams,
                "nu_b must lie in (0, " + format_real(nu_b_max) + "]");
  }

  SlotIndex index = build_index(ds, prm.ordering);
  const int m = index.n_slots;
  if (use_ord && m < 2) {
    // A single slot leaves rho_o outside every constraint, so any positive
    // nu_o weight makes the objective unbounded.
    throw Error(ErrorCode::InfeasibleParams,
                "ordinal term requires at least two distinct oracle ranks");
  }

  const Eigen::MatrixXd K = gram(prm.kernel, ds, ds);
  const Eigen::VectorXd y = ds.labels().cast<double>();
  const double dn = static_cast<double>(n);
  const double n_star = dn * (dn - 1.0) / 2.0;
  const double a = prm.alpha;

  /*
   * Variable layout (blocks present only when their term is active):
   *   beta(n) | bias, rho_b, xi(n) [alpha > 0] |
   *   rho_o, zp(n), zm(n), g_1..g_{m-1} [alpha < 1]
   */
  const Eigen::Index off_beta = 0;
  Eigen::Index off = n;
  const Eigen::Index off_bias = use_cls ? off : -1;
  if (use_cls) off += 1;
  const Eigen::Index off_rho_b = use_cls ? off : -1;
  if (use_cls) off += 1;
  const Eigen::Index off_xi = use_cls ? off : -1;
  if (use_cls) off += n;
  const Eigen::Index off_rho_o = use_ord ? off : -1;
  if (use_ord) off += 1;
  const Eigen::Index off_zp = use_ord ? off : -1;
  if (use_ord) off += n;
  const Eigen::Index off_zm = use_ord ? off : -1;
  if (use_ord) off += n;
  const Eigen::Index off_g = use_ord ? off : -1;  // g_1 .. g_{m-1}
  const Eigen::Index n_gint = use_ord ? m - 1 : 0;
  if (use_ord) off += n_gint;
  const Eigen::Index nv = off;

  qp::QpProblem p;
  p.Q = Eigen::MatrixXd::Zero(nv, nv);
  p.Q.topLeftCorner(n, n) = K;
  p.c = Eigen::VectorXd::Zero(nv);
  const double inf = std::numeric_limits<double>::infinity();
  p.lower = Eigen::VectorXd::Constant(nv, -inf);
  p.upper = Eigen::VectorXd::Constant(nv, inf);
  if (use_cls) {
    p.c(off_rho_b) = -a * prm.nu_b;
    p.c.segment(off_xi, n).setConstant(a / dn);
    p.lower(off_rho_b) = 0.0;
    p.lower.segment(off_xi, n).setZero();
  }
  if (use_ord) {
    p.c(off_rho_o) = -(1.0 - a) * prm.nu_o;
    p.c.segment(off_zp, n).setConstant((1.0 - a) / n_star);
    p.c.segment(off_zm, n).setConstant((1.0 - a) / n_star);
    p.lower(off_rho_o) = 0.0;
    p.lower.segment(off_zp, n).setZero();
    p.lower.segment(off_zm, n).setZero();
  }
  p.A_eq.resize(0, nv);
  p.b_eq.resize(0);

  // Count inequality rows: classification n; ordinal lower/upper rows only
  // for finite boundaries; g monotonicity between consecutive interior ones.
  Eigen::Index rows = use_cls ? n : 0;
  if (use_ord) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const int j = index.indices[static_cast<size_t>(i)];
      if (j >= 1) ++rows;          // finite lower boundary g_j
      if (j + 1 <= m - 1) ++rows;  // finite upper boundary g_{j+1}
    }
    rows += std::max<Eigen::Index>(0, n_gint - 1);
  }
  p.A_in = Eigen::MatrixXd::Zero(rows, nv);
  p.b_in = Eigen::VectorXd::Zero(rows);

  Eigen::Index r = 0;
  if (use_cls) {
    // -y_i ((K beta)_i + bias) + rho_b - xi_i <= 0
    for (Eigen::Index i = 0; i < n; ++i, ++r) {
      p.A_in.row(r).segment(off_beta, n) = -y(i) * K.row(i);
      p.A_in(r, off_bias) = -y(i);
      p.A_in(r, off_rho_b) = 1.0;
      p.A_in(r, off_xi + i) = -1.0;
    }
  }
  if (use_ord) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const int j = index.indices[static_cast<size_t>(i)];
      if (j >= 1) {
        // g_j + rho_o/2 - (K beta)_i - zp_i + zm_i <= 0
        p.A_in.row(r).segment(off_beta, n) = -K.row(i);
        p.A_in(r, off_rho_o) = 0.5;
        p.A_in(r, off_zp + i) = -1.0;
        p.A_in(r, off_zm + i) = 1.0;
        p.A_in(r, off_g + j - 1) = 1.0;
        ++r;
      }
      if (j + 1 <= m - 1) {
        // (K beta)_i + zp_i - zm_i + rho_o/2 - g_{j+1} <= 0
        p.A_in.row(r).segment(off_beta, n) = K.row(i);
        p.A_in(r, off_rho_o) = 0.5;
        p.A_in(r, off_zp + i) = 1.0;
        p.A_in(r, off_zm + i) = -1.0;
        p.A_in(r, off_g + j) = -1.0;
        ++r;
      }
    }
    for (Eigen::Index j = 0; j + 1 < n_gint; ++j, ++r) {
      p.A_in(r, off_g + j) = 1.0;
      p.A_in(r, off_g + j + 1) = -1.0;
    }
  }

  qp::QpSolution sol = qp::solve_qp(p, opt);
  if (sol.status == qp::QpStatus::Infeasible ||
      sol.status == qp::QpStatus::Unbounded) {
    throw Error(ErrorCode::InfeasibleParams,
                std::string("parameters outside the solvable range (QP ") +
                    qp::qp_status_name(sol.status) + ")");
  }
  if (sol.status != qp::QpStatus::Optimal) {
    throw Error(ErrorCode::IllConditioned,
                std::string("joint QP solve failed: ") +
                    qp::qp_status_name(sol.status));
  }

  GoSvmSolution out;
  out.ordering = prm.ordering;
  out.index = std::move(index);
  out.iterations = sol.iterations;
  out.n_star = n_star;
  out.objective = sol.objective;
  out.model.kernel = prm.kernel;
  out.model.support = ds.features();
  out.model.alphas = sol.x.segment(off_beta, n);
  out.model.bias = use_cls ? sol.x(off_bias) : 0.0;

  const Eigen::VectorXd f0 = K * out.model.alphas;  // discriminant minus bias
  if (use_cls) {
    out.rho_b = std::max(0.0, sol.x(off_rho_b));
    out.xi = sol.x.segment(off_xi, n).cwiseMax(0.0);
  } else {
    out.rho_b = 0.0;
    out.xi = Eigen::VectorXd::Zero(n);
  }

  out.g.resize(m + 1);
  out.g(0) = -inf;
  out.g(m) = inf;
  if (use_ord) {
    out.rho_o = std::max(0.0, sol.x(off_rho_o));
    for (Eigen::Index j = 0; j < n_gint; ++j) out.g(j + 1) = sol.x(off_g + j);
    out.zeta = sol.x.segment(off_zp, n) - sol.x.segment(off_zm, n);
  } else {
    // Any boundary/adjustment assignment is admissible at alpha = 1; report
    // unit-spaced boundaries with zero margin and project the discriminant.
    out.rho_o = 0.0;
    for (int j = 1; j < m; ++j) out.g(j) = static_cast<double>(j);
    out.zeta.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const int j = out.index.indices[static_cast<size_t>(i)];
      const double lo = out.g(j);
      const double hi = out.g(j + 1);
      out.zeta(i) = f0(i) < lo ? lo - f0(i) : (f0(i) > hi ? hi - f0(i) : 0.0);
    }
  }

  const Eigen::VectorXd f = f0.array() + out.model.bias;
  out.achieved_balance = loss_balance(f, ds.labels(), 1.0);
  return out;
}

EvalMetrics evaluate_model(const TrainedModel& m, const Dataset& test,
                           OrderingMode mode) {
  const Eigen::VectorXd f = predict(m, test.features());
  EvalMetrics out;
  double err = 0.0;
  for (Eigen::Index i = 0; i < test.size(); ++i) {
    err += l01(f(i), static_cast<double>(test.label(i)));
  }
  out.error_rate = err / static_cast<double>(test.size());
  out.balance = loss_balance(f, test.labels(), 1.0);
  if (test.has_oracle()) {
    const Eigen::VectorXi& labels = test.labels();
    out.liso = empirical_liso(f, test.oracle(), mode,
                              mode == OrderingMode::PerClass ? &labels : nullptr);
  }
  return out;
}

EvalMetrics evaluate(const GoSvmSolution& sol, const Dataset& test) {
  return evaluate_model(sol.model, test, sol.ordering);
}

void write_solution(const GoSvmSolution& sol, std::ostream& out) {
  const TrainedModel& m = sol.model;
  out << "gosvm-model v1\n";
  out << "kind gosvm\n";
  detail::write_kernel_spec(m.kernel, out);
  out << "ordering " << ordering_mode_name(sol.ordering) << "\n";
  out << "dim " << m.support.cols() << "\n";
  out << "n_support " << m.support.rows() << "\n";
  out << "bias " << format_real(m.bias) << "\n";
  out << "rho_b " << format_real(sol.rho_b) << "\n";
  out << "rho_o " << format_real(sol.rho_o) << "\n";
  out << "balance " << format_real(sol.achieved_balance) << "\n";
  out << "n_slots " << (sol.g.size() - 1) << "\n";
  out << "g\n";
  for (Eigen::Index j = 0; j < sol.g.size(); ++j) {
    if (j) out << " ";
    out << format_real(sol.g(j));
  }
  out << "\n";
  detail::write_alphas_support(m, out);
}

GoSvmSolution read_solution(std::istream& in) {
  const std::string kind = detail::read_magic_and_kind(in);
  if (kind != "gosvm") {
    throw Error(ErrorCode::Parse, "expected a gosvm model, found '" + kind + "'");
  }
  GoSvmSolution sol;
  sol.model.kernel = detail::read_kernel_spec(in);
  detail::expect_token(in, "ordering");
  const std::string mode = detail::next_token(in, "ordering mode");
  if (mode == ordering_mode_name(OrderingMode::Global)) {
    sol.ordering = OrderingMode::Global;
  } else if (mode == ordering_mode_name(OrderingMode::PerClass)) {
    sol.ordering = OrderingMode::PerClass;
  } else {
    throw Error(ErrorCode::Parse, "unknown ordering mode '" + mode + "'");
  }
  detail::expect_token(in, "dim");
  const long d = detail::next_int(in, "dim");
  detail::expect_token(in, "n_support");
  const long n = detail::next_int(in, "n_support");
  if (d < 0 || n < 0) {
    throw Error(ErrorCode::Parse, "negative model dimensions");
  }
  detail::expect_token(in, "bias");
  sol.model.bias = detail::next_real(in, "bias");
  detail::expect_token(in, "rho_b");
  sol.rho_b = detail::next_real(in, "rho_b");
  detail::expect_token(in, "rho_o");
  sol.rho_o = detail::next_real(in, "rho_o");
  detail::expect_token(in, "balance");
  sol.achieved_balance = detail::next_real(in, "balance");
  detail::expect_token(in, "n_slots");
  const long m = detail::next_int(in, "n_slots");
  if (m < 1) {
    throw Error(ErrorCode::Parse, "n_slots must be positive");
  }
  detail::expect_token(in, "g");
  sol.g.resize(m + 1);
  for (long j = 0; j <= m; ++j) sol.g(j) = detail::next_real(in, "boundary");
  detail::read_alphas_support(in, &sol.model, d, n);
  sol.index.n_slots = static_cast<int>(m);
  sol.n_star = static_cast<double>(n) * (static_cast<double>(n) - 1.0) / 2.0;
  return sol;
}

}  // namespace gosvm
