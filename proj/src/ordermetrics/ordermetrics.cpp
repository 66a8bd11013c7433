/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "ordermetrics/ordermetrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qp/qp.hpp"

namespace gosvm {

namespace {

void require_finite(const Eigen::VectorXd& v, const char* what) {
  if (!v.allFinite()) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " contains non-finite values");
  }
}

/*
 * Exact max-min cut sweep.  For the sample subset idx, returns
 *
 *   max over cuts t on ref of ( min over cuts s on h of
 *       #{i : 1[h_i > s] != 1[ref_i > t]} )
 *
 * as an integer count.  Cuts separate distinct sorted values only, so tied
 * points are never split and the count is invariant under any strictly
 * increasing transform of h or ref.  A cut position c in sorted-by-h order
 * means the first c distinct-value groups fall on the "<= s" side; sweeping
 * c from 0 to #groups visits every labeling, updating the mismatch count by
 * the group's label imbalance.  O(n^2) overall.
 */
long long sweep_max_min(const Eigen::VectorXd& h, const Eigen::VectorXd& ref,
                        const std::vector<int>& idx) {
  const int n = static_cast<int>(idx.size());
  std::vector<int> by_h(idx), by_ref(idx);
  std::sort(by_h.begin(), by_h.end(),
            [&](int a, int b) { return h(a) < h(b); });
  std::sort(by_ref.begin(), by_ref.end(),
            [&](int a, int b) { return ref(a) < ref(b); });

  // Distinct-value group id of each sample along the h order.
  std::vector<int> hgroup_of(static_cast<size_t>(n));
  int n_hgroups = 0;
  for (int k = 0; k < n; ++k) {
    if (k > 0 && h(by_h[k]) != h(by_h[k - 1])) ++n_hgroups;
    hgroup_of[static_cast<size_t>(k)] = n_hgroups;
  }
  ++n_hgroups;

  // Ref cut positions: c ref-value groups on the "<= t" side, c = 0..G_ref.
  std::vector<int> ref_group_end;  // exclusive end in by_ref per group
  for (int k = 0; k < n; ++k) {
    if (k + 1 == n || ref(by_ref[k + 1]) != ref(by_ref[k])) {
      ref_group_end.push_back(k + 1);
    }
  }

  std::vector<char> u(static_cast<size_t>(n), 1);  // u = 1[ref > t], by idx pos
  std::vector<int> pos_of(static_cast<size_t>(n));
  {
    // Map sample id -> position along by_h, to look up its h-group.
    std::vector<int> tmp;
    tmp.assign(static_cast<size_t>(*std::max_element(idx.begin(), idx.end())) + 1, -1);
    for (int k = 0; k < n; ++k) tmp[static_cast<size_t>(by_h[k])] = k;
    for (int k = 0; k < n; ++k) {
      pos_of[static_cast<size_t>(k)] = tmp[static_cast<size_t>(by_ref[k])];
    }
  }

  long long best_max = 0;
  int consumed = 0;
  // ones[g] / zeros[g]: per-h-group counts of u under the current t cut.
  std::vector<long long> ones(static_cast<size_t>(n_hgroups), 0);
  std::vector<long long> zeros(static_cast<size_t>(n_hgroups), 0);
  for (int k = 0; k < n; ++k) {
    ++ones[static_cast<size_t>(hgroup_of[static_cast<size_t>(pos_of[static_cast<size_t>(k)])])];
  }
  const int n_cuts = static_cast<int>(ref_group_end.size()) + 1;
  for (int c = 0; c < n_cuts; ++c) {
    if (c > 0) {
      // Move ref group c-1 to the u = 0 side.
      const int end = ref_group_end[static_cast<size_t>(c - 1)];
      for (; consumed < end; ++consumed) {
        const size_t g = static_cast<size_t>(
            hgroup_of[static_cast<size_t>(pos_of[static_cast<size_t>(consumed)])]);
        --ones[g];
        ++zeros[g];
      }
    }
    // Inner sweep over h cuts: d groups predicted negative, d = 0..n_hgroups.
    long long total_ones = 0;
    for (int g = 0; g < n_hgroups; ++g) total_ones += ones[static_cast<size_t>(g)];
    long long mism = static_cast<long long>(n) - total_ones;  // d = 0: all predicted 1
    long long best_min = mism;
    for (int g = 0; g < n_hgroups; ++g) {
      mism += ones[static_cast<size_t>(g)] - zeros[static_cast<size_t>(g)];
      best_min = std::min(best_min, mism);
    }
    best_max = std::max(best_max, best_min);
  }
  return best_max;
}

std::vector<int> all_indices(Eigen::Index n) {
  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

}  // namespace

const char* ordering_mode_name(OrderingMode m) {
  return m == OrderingMode::Global ? "global" : "per-class";
}

int l01(double yhat, double y) {
  const bool pred_pos = yhat > 0.0;
  const bool is_pos = y > 0.0;
  return pred_pos == is_pos ? 0 : 1;
}

int lthr(double yhat, double y, double t) { return l01(yhat - t, y - t); }

double empirical_liso(const Eigen::VectorXd& h, const Eigen::VectorXd& targets,
                      OrderingMode mode, const Eigen::VectorXi* labels) {
  if (h.size() != targets.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "discriminant and target lengths differ");
  }
  if (h.size() == 0) {
    throw Error(ErrorCode::InsufficientData, "empty sample");
  }
  require_finite(h, "discriminant");
  require_finite(targets, "targets");
  if (mode == OrderingMode::Global) {
    const long long c = sweep_max_min(h, targets, all_indices(h.size()));
    return static_cast<double>(c) / static_cast<double>(h.size());
  }
  if (labels == nullptr || labels->size() != h.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "per-class mode requires labels of matching length");
  }
  std::vector<int> pos, neg;
  for (Eigen::Index i = 0; i < labels->size(); ++i) {
    ((*labels)(i) > 0 ? pos : neg).push_back(static_cast<int>(i));
  }
  if (pos.empty() || neg.empty()) {
    throw Error(ErrorCode::EmptyClass, "per-class mode needs both classes");
  }
  const double lp = static_cast<double>(sweep_max_min(h, targets, pos)) /
                    static_cast<double>(pos.size());
  const double ln = static_cast<double>(sweep_max_min(h, targets, neg)) /
                    static_cast<double>(neg.size());
  return std::max(lp, ln);
}

double empirical_order_distance(const Eigen::VectorXd& h1,
                                const Eigen::VectorXd& h2) {
  if (h1.size() != h2.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "order distance arguments have different lengths");
  }
  if (h1.size() == 0) {
    throw Error(ErrorCode::InsufficientData, "empty sample");
  }
  require_finite(h1, "h1");
  require_finite(h2, "h2");
  const long long c = sweep_max_min(h1, h2, all_indices(h1.size()));
  return static_cast<double>(c) / static_cast<double>(h1.size());
}

double loss_balance(const Eigen::VectorXd& yhat, const Eigen::VectorXi& y,
                    double w) {
  if (!(std::isfinite(w) && w > 0.0)) {
    throw Error(ErrorCode::NonPositiveWeight,
                "balance weight must be finite and > 0");
  }
  if (yhat.size() != y.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "prediction and label lengths differ");
  }
  if (yhat.size() == 0) {
    throw Error(ErrorCode::InsufficientData, "empty sample");
  }
  double total = 0.0;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    const bool pred_pos = yhat(i) > 0.0;
    const bool is_pos = y(i) > 0;
    if (!pred_pos && is_pos) {
      total += std::max(w, 1.0);
    } else if (pred_pos && !is_pos) {
      total -= std::max(1.0, 1.0 / w);
    }
  }
  return total / static_cast<double>(y.size());
}

double shashua_levin_loss(const Eigen::VectorXd& h,
                          const std::vector<int>& index,
                          const Eigen::VectorXd& g, double rho_o) {
  if (static_cast<Eigen::Index>(index.size()) != h.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "slot index length differs from discriminant length");
  }
  if (!(rho_o >= 0.0) || !std::isfinite(rho_o)) {
    throw Error(ErrorCode::InvalidArgument, "rho_o must be >= 0");
  }
  if (g.size() < 2) {
    throw Error(ErrorCode::InvalidIntervals, "need at least two boundaries");
  }
  for (Eigen::Index j = 0; j + 1 < g.size(); ++j) {
    if (std::isnan(g(j)) || std::isnan(g(j + 1)) || !(g(j) < g(j + 1))) {
      throw Error(ErrorCode::InvalidIntervals,
                  "boundaries must be strictly increasing");
    }
  }
  require_finite(h, "discriminant");
  double total = 0.0;
  for (Eigen::Index i = 0; i < h.size(); ++i) {
    const int j = index[static_cast<size_t>(i)];
    if (j < 0 || j + 1 >= g.size()) {
      throw Error(ErrorCode::InvalidArgument, "slot index out of range");
    }
    const double lo = g(j) + rho_o / 2.0;
    const double hi = g(j + 1) - rho_o / 2.0;
    if (lo > hi) {
      throw Error(ErrorCode::InvalidIntervals,
                  "slot narrower than the required margin");
    }
    if (h(i) < lo) {
      total += lo - h(i);
    } else if (h(i) > hi) {
      total += h(i) - hi;
    }
  }
  return total;
}

ExactOrdinalResult exact_ordinal_objective(const Dataset& ds,
                                           const KernelSpec& ks, double C,
                                           double rho) {
  const Eigen::Index n = ds.size();
  if (n < 1) {
    throw Error(ErrorCode::InsufficientData, "empty dataset");
  }
  if (n > 12) {
    throw Error(ErrorCode::TooLarge,
                "exact ordinal oracle is capped at 12 samples");
  }
  if (!(C > 0.0) || !std::isfinite(C)) {
    throw Error(ErrorCode::InvalidArgument, "C must be finite and > 0");
  }
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw Error(ErrorCode::InvalidArgument, "rho must be finite and > 0");
  }
  const Eigen::VectorXd& oracle = ds.oracle();
  std::vector<int> order = all_indices(n);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return oracle(a) < oracle(b); });
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (oracle(order[static_cast<size_t>(k)]) ==
        oracle(order[static_cast<size_t>(k + 1)])) {
      throw Error(ErrorCode::DuplicateOracle, "oracle values must be distinct");
    }
  }

  // Discriminant values per sample: Linear h_j = w.x_j; Rbf h_j = (K beta)_j.
  const bool linear = ks.kind == KernelKind::Linear;
  const Eigen::Index d = linear ? ds.dim() : n;
  Eigen::MatrixXd K;  // rows: samples in sorted order; columns: w variables
  if (linear) {
    K.resize(n, d);
    for (Eigen::Index k = 0; k < n; ++k) {
      K.row(k) = ds.features().row(order[static_cast<size_t>(k)]);
    }
  } else {
    Eigen::MatrixXd full = gram(ks, ds, ds);
    K.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index j = 0; j < n; ++j) {
        K(k, j) = full(order[static_cast<size_t>(k)], static_cast<Eigen::Index>(j));
      }
    }
  }
  // Capacity block: |w|^2 for Linear, beta' K_full beta for Rbf (columns of K
  // are then indexed by the original sample order, matching beta).
  Eigen::MatrixXd cap = linear ? Eigen::MatrixXd::Identity(d, d)
                               : gram(ks, ds, ds);

  /*
   * Variable layout: v = [w(d), xi(n), e(n*n), L].  e is indexed row-major by
   * (i, j) over sorted positions.  The threshold box |xi| <= B removes the
   * flat recession directions of the extreme thresholds; B escalates if a
   * bound binds at the solution.
   */
  const Eigen::Index nv = d + n + n * n + 1;
  const Eigen::Index off_xi = d;
  const Eigen::Index off_e = d + n;
  const Eigen::Index off_l = d + n + n * n;

  qp::QpProblem p;
  p.Q = Eigen::MatrixXd::Zero(nv, nv);
  p.Q.topLeftCorner(d, d) = cap;
  p.c = Eigen::VectorXd::Zero(nv);
  p.c(off_l) = C;
  p.A_eq.resize(0, nv);
  p.b_eq.resize(0);

  const Eigen::Index rows = n * n + n + (n - 1);
  p.A_in = Eigen::MatrixXd::Zero(rows, nv);
  p.b_in = Eigen::VectorXd::Zero(rows);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j, ++r) {
      const double yij = j > i ? 1.0 : -1.0;
      // -e_ij - yij (K_j . w) + yij xi_i <= -rho
      p.A_in.row(r).segment(0, d) = -yij * K.row(j);
      p.A_in(r, off_xi + i) = yij;
      p.A_in(r, off_e + i * n + j) = -1.0;
      p.b_in(r) = -rho;
    }
  }
  for (Eigen::Index i = 0; i < n; ++i, ++r) {
    p.A_in.row(r).segment(off_e + i * n, n).setConstant(1.0);
    p.A_in(r, off_l) = -1.0;
  }
  for (Eigen::Index k = 1; k < n; ++k, ++r) {
    p.A_in(r, off_xi + k - 1) = 1.0;
    p.A_in(r, off_xi + k) = -1.0;
    p.b_in(r) = -rho;
  }

  const double inf = std::numeric_limits<double>::infinity();
  p.lower = Eigen::VectorXd::Constant(nv, -inf);
  p.upper = Eigen::VectorXd::Constant(nv, inf);
  p.lower.segment(off_e, n * n).setZero();

  // Start the box tight: a loose box dominates the problem scale and stalls
  // the interior-point iteration.  Escalate only when a bound actually binds.
  double feat_scale = 1.0;
  if (K.size() > 0) feat_scale += K.cwiseAbs().maxCoeff();
  double box = 10.0 * (feat_scale + rho * static_cast<double>(n));
  qp::QpSolution sol;
  qp::QpOptions opt;
  for (int attempt = 0;; ++attempt) {
    p.lower.segment(off_xi, n).setConstant(-box);
    p.upper.segment(off_xi, n).setConstant(box);
    sol = qp::solve_qp(p, opt);
    if (sol.status != qp::QpStatus::Optimal) {
      throw Error(ErrorCode::IllConditioned,
                  std::string("exact ordinal QP did not converge: ") +
                      qp::qp_status_name(sol.status));
    }
    const double xi_max = sol.x.segment(off_xi, n).cwiseAbs().maxCoeff();
    if (xi_max < 0.9 * box || attempt >= 5) break;
    box *= 10.0;
    opt.max_iter = 1000;  // wider boxes condition worse
  }

  ExactOrdinalResult res;
  res.w = sol.x.head(d);
  res.xi.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    res.xi(order[static_cast<size_t>(k)]) = sol.x(off_xi + k);
  }
  // Recompute capacity and hinge from (w, xi) so the report does not inherit
  // slack-variable looseness.
  const Eigen::VectorXd hvals = K * res.w;  // sorted order
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double li = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double yij = j > i ? 1.0 : -1.0;
      li += std::max(0.0, rho - yij * (hvals(j) - sol.x(off_xi + i)));
    }
    worst = std::max(worst, li);
  }
  res.hinge = worst;
  res.objective = 0.5 * res.w.dot(cap * res.w) + C * worst;
  return res;
}

}  // namespace gosvm
