/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

#include "core/error.hpp"
#include "core/rng.hpp"
#include "doctest.h"
#include "svm/gosvm.hpp"

using namespace gosvm;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Random two-class data with a noisy monotone oracle along the first axis.
Dataset ordered_blobs(Rng& rng, int n, int d, double gap, double onoise = 0.1) {
  Eigen::MatrixXd x(n, d);
  Eigen::VectorXi y(n);
  Eigen::VectorXd o(n);
  for (int i = 0; i < n; ++i) {
    y(i) = i % 2 ? 1 : -1;
    for (int j = 0; j < d; ++j) x(i, j) = 0.4 * rng.gaussian();
    x(i, 0) += y(i) * gap / 2;
    o(i) = x(i, 0) + onoise * rng.gaussian() + i * 1e-9;  // tie-free
  }
  return Dataset(x, y, o);
}

Eigen::VectorXd linear_weights(const TrainedModel& m) {
  return m.support.transpose() * m.alphas;
}

/*
 * Ordinal-only program assembled from scratch (variables beta, rho_o,
 * zeta+-, interior boundaries), used as the independent reference for the
 * alpha = 0 reduction.
 */
double standalone_ordinal_objective(const Dataset& ds, double nu_o,
                                    const KernelSpec& ks) {
  const Eigen::Index n = ds.size();
  const SlotIndex slots = build_index(ds, OrderingMode::Global);
  const int k = slots.n_slots;
  const double n_star = static_cast<double>(n * (n - 1)) / 2.0;
  const Eigen::MatrixXd K = gram(ks, ds, ds);

  const Eigen::Index off_rho = n;
  const Eigen::Index off_zp = n + 1;
  const Eigen::Index off_zm = off_zp + n;
  const Eigen::Index off_g = off_zm + n;
  const Eigen::Index nv = off_g + (k - 1);

  qp::QpProblem p;
  p.Q = Eigen::MatrixXd::Zero(nv, nv);
  p.Q.topLeftCorner(n, n) = 0.5 * (K + K.transpose());
  p.c = Eigen::VectorXd::Zero(nv);
  p.c(off_rho) = -nu_o;
  p.c.segment(off_zp, 2 * n).setConstant(1.0 / n_star);
  p.A_eq.resize(0, nv);
  p.b_eq.resize(0);

  std::vector<Eigen::VectorXd> rows;
  auto row = [&]() -> Eigen::VectorXd& {
    rows.emplace_back(Eigen::VectorXd::Zero(nv));
    return rows.back();
  };
  for (Eigen::Index i = 0; i < n; ++i) {
    const int j = slots.indices[static_cast<std::size_t>(i)];
    if (j >= 1) {  // finite floor: g_j + rho/2 <= (K b)_i + zp - zm
      Eigen::VectorXd& r = row();
      r.head(n) = -K.row(i).transpose();
      r(off_zp + i) = -1.0;
      r(off_zm + i) = 1.0;
      r(off_g + j - 1) = 1.0;
      r(off_rho) = 0.5;
    }
    if (j <= k - 2) {  // finite ceiling
      Eigen::VectorXd& r = row();
      r.head(n) = K.row(i).transpose();
      r(off_zp + i) = 1.0;
      r(off_zm + i) = -1.0;
      r(off_g + j) = -1.0;
      r(off_rho) = 0.5;
    }
  }
  for (int m = 0; m + 1 < k - 1; ++m) {  // boundaries nondecreasing
    Eigen::VectorXd& r = row();
    r(off_g + m) = 1.0;
    r(off_g + m + 1) = -1.0;
  }
  p.A_in.resize(static_cast<Eigen::Index>(rows.size()), nv);
  for (std::size_t i = 0; i < rows.size(); ++i)
    p.A_in.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  p.b_in = Eigen::VectorXd::Zero(p.A_in.rows());
  p.lower = Eigen::VectorXd::Constant(nv, -kInf);
  p.upper = Eigen::VectorXd::Constant(nv, kInf);
  p.lower(off_rho) = 0.0;
  p.lower.segment(off_zp, 2 * n).setZero();

  const qp::QpSolution s = solve_qp(p);
  REQUIRE(s.status == qp::QpStatus::Optimal);
  return s.objective;
}

}  // namespace

TEST_CASE("slot index ranks distinct oracle values") {
  Eigen::MatrixXd x(3, 1);
  x << 0, 0, 0;
  Eigen::VectorXi y(3);
  y << -1, 1, -1;
  Eigen::VectorXd o(3);
  o << 0.3, 0.1, 0.7;
  const SlotIndex s = build_index(Dataset(x, y, o), OrderingMode::Global);
  CHECK(s.indices == std::vector<int>{1, 0, 2});
  CHECK(s.n_slots == 3);
}

TEST_CASE("slot index shares ranks across ties") {
  Eigen::MatrixXd x(3, 1);
  x << 0, 0, 0;
  Eigen::VectorXi y(3);
  y << -1, 1, -1;
  Eigen::VectorXd o(3);
  o << 0.5, 0.5, 0.2;
  const SlotIndex s = build_index(Dataset(x, y, o), OrderingMode::Global);
  CHECK(s.indices == std::vector<int>{1, 1, 0});
  CHECK(s.n_slots == 2);
}

TEST_CASE("per-class index inserts an empty slot between classes") {
  Eigen::MatrixXd x(2, 1);
  x << 0, 1;
  Eigen::VectorXi y(2);
  y << -1, 1;
  Eigen::VectorXd o(2);
  o << 0.9, 0.1;
  const SlotIndex s = build_index(Dataset(x, y, o), OrderingMode::PerClass);
  CHECK(s.indices == std::vector<int>{0, 2});
  CHECK(s.n_slots == 3);
}

TEST_CASE("per-class index orders within each class") {
  Eigen::MatrixXd x(5, 1);
  x.setZero();
  Eigen::VectorXi y(5);
  y << -1, -1, 1, 1, -1;
  Eigen::VectorXd o(5);
  o << 0.5, 0.1, 0.9, 0.2, 0.3;
  const SlotIndex s = build_index(Dataset(x, y, o), OrderingMode::PerClass);
  // negatives {0.5, 0.1, 0.3} -> slots {2, 0, 1}; empty slot 3;
  // positives {0.9, 0.2} -> slots {5, 4}
  CHECK(s.indices == std::vector<int>{2, 0, 5, 4, 1});
  CHECK(s.n_slots == 6);
}

TEST_CASE("missing oracle is rejected") {
  Eigen::MatrixXd x(2, 1);
  x << 0, 1;
  Eigen::VectorXi y(2);
  y << -1, 1;
  try {
    static_cast<void>(build_index(Dataset(x, y, std::nullopt),
                                  OrderingMode::Global));
    FAIL("expected MissingOracle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingOracle);
  }
}

TEST_CASE("parameter range validation") {
  Rng rng(1, 0);
  const Dataset ds = ordered_blobs(rng, 8, 2, 1.0);
  GoSvmParams p;
  p.nu_b = 0.3;
  p.alpha = 0.5;

  p.nu_o = 1.2;
  try {
    static_cast<void>(train_gosvm(ds, p));
    FAIL("expected InfeasibleParams");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfeasibleParams);
  }

  p.nu_o = 0.5;
  p.alpha = 1.5;
  CHECK_THROWS_AS(static_cast<void>(train_gosvm(ds, p)), Error);

  p.alpha = 0.5;
  p.nu_b = 1.5;  // above 2 min(n+,n-)/n = 1 for balanced labels
  try {
    static_cast<void>(train_gosvm(ds, p));
    FAIL("expected InfeasibleParams");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfeasibleParams);
  }
}

TEST_CASE("nu_o boundedness flips at floor(n^2/4)/n*") {
  // For n = 4 distinct oracle values the ordinal term stays bounded only up
  // to nu_o = floor(16/4)/6 = 2/3, strictly inside the paper's [0, 1] range.
  Rng rng(2, 0);
  const Dataset ds = ordered_blobs(rng, 4, 2, 1.0);
  GoSvmParams p;
  p.nu_b = 0.4;
  p.alpha = 0.5;

  p.nu_o = 2.0 / 3.0 - 0.05;
  CHECK_NOTHROW(static_cast<void>(train_gosvm(ds, p)));

  p.nu_o = 2.0 / 3.0 + 0.05;
  try {
    static_cast<void>(train_gosvm(ds, p));
    FAIL("expected InfeasibleParams");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfeasibleParams);
  }
}

TEST_CASE("alpha = 1 reduces to the nu-svm discriminant") {
  Rng rng(3, 0);
  for (int trial = 0; trial < 3; ++trial) {
    const Dataset ds = ordered_blobs(rng, 12 + 2 * trial, 2, 1.0);
    GoSvmParams p;
    p.nu_b = 0.3;
    p.nu_o = 0.4;
    p.alpha = 1.0;
    p.kernel = trial == 2 ? KernelSpec::rbf(1.0) : KernelSpec::linear();
    const GoSvmSolution sol = train_gosvm(ds, p);
    const NuSvmResult nu = train_nusvm(ds, p.nu_b, p.kernel);
    const Eigen::VectorXd fg = predict(sol.model, ds.features());
    const Eigen::VectorXd fn = predict(nu.model, ds.features());
    const double scale = 1.0 + fn.lpNorm<Eigen::Infinity>();
    CHECK((fg - fn).lpNorm<Eigen::Infinity>() <= 1e-4 * scale);
  }
}

TEST_CASE("alpha = 0 matches a standalone ordinal solve") {
  Rng rng(4, 0);
  for (int trial = 0; trial < 3; ++trial) {
    const Dataset ds = ordered_blobs(rng, 8, 2, 1.0);
    GoSvmParams p;
    p.nu_b = 0.3;
    p.nu_o = 0.4;
    p.alpha = 0.0;
    const GoSvmSolution sol = train_gosvm(ds, p);
    const double ref = standalone_ordinal_objective(ds, p.nu_o, p.kernel);
    CHECK(sol.objective == doctest::Approx(ref).epsilon(1e-4));
    CHECK(sol.rho_b == 0.0);
    CHECK(sol.xi.lpNorm<Eigen::Infinity>() == 0.0);
  }
}

TEST_CASE("solution structure invariants") {
  Rng rng(5, 0);
  const Dataset ds = ordered_blobs(rng, 10, 3, 1.2);
  GoSvmParams p;
  p.nu_b = 0.4;
  p.nu_o = 0.3;
  p.alpha = 0.5;
  const GoSvmSolution sol = train_gosvm(ds, p);

  CHECK(sol.n_star == 45.0);  // 10 * 9 / 2
  CHECK(sol.rho_b >= -1e-9);
  CHECK(sol.rho_o >= -1e-9);
  REQUIRE(sol.g.size() == sol.index.n_slots + 1);
  CHECK(sol.g(0) == -kInf);
  CHECK(sol.g(sol.g.size() - 1) == kInf);

  // occupied slots are at least rho_o wide (no empty intervals)
  for (int j = 1; j + 2 < sol.g.size(); ++j)
    CHECK(sol.g(j + 1) - sol.g(j) >= sol.rho_o - 1e-6);

  // interval constraints hold at the optimum within solver tolerance
  const Eigen::VectorXd f =
      (predict(sol.model, ds.features()).array() - sol.model.bias).matrix();
  for (Eigen::Index i = 0; i < ds.size(); ++i) {
    const int j = sol.index.indices[static_cast<std::size_t>(i)];
    const double adjusted = f(i) + sol.zeta(i);
    CHECK(adjusted >= sol.g(j) + sol.rho_o / 2 - 1e-6);
    CHECK(adjusted <= sol.g(j + 1) - sol.rho_o / 2 + 1e-6);
  }

  // reported balance is the training loss balance at w = 1
  const Eigen::VectorXd scores = predict(sol.model, ds.features());
  CHECK(sol.achieved_balance ==
        doctest::Approx(loss_balance(scores, ds.labels(), 1.0))
            .epsilon(1e-12));
}

TEST_CASE("objective nonincreasing in nu_b and nu_o") {
  Rng rng(6, 0);
  const Dataset ds = ordered_blobs(rng, 10, 2, 1.0);
  GoSvmParams p;
  p.nu_o = 0.3;
  p.alpha = 0.5;
  double prev = kInf;
  for (double nub : {0.1, 0.3, 0.5, 0.7}) {
    p.nu_b = nub;
    const double obj = train_gosvm(ds, p).objective;
    CHECK(obj <= prev + 1e-7 * (1 + std::abs(prev)));
    prev = obj;
  }
  p.nu_b = 0.4;
  prev = kInf;
  for (double nuo : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    p.nu_o = nuo;
    const double obj = train_gosvm(ds, p).objective;
    CHECK(obj <= prev + 1e-7 * (1 + std::abs(prev)));
    prev = obj;
  }
}

TEST_CASE("kernelized linear training equals an explicit primal assembly") {
  Rng rng(7, 0);
  const Dataset ds = ordered_blobs(rng, 9, 2, 1.0);
  const Eigen::Index n = ds.size(), d = ds.dim();
  const double alpha = 0.5, nu_b = 0.4, nu_o = 0.3;
  const SlotIndex slots = build_index(ds, OrderingMode::Global);
  const int k = slots.n_slots;
  const double n_star = static_cast<double>(n * (n - 1)) / 2.0;

  // primal variables: w(d), b, rho_b, rho_o, xi(n), zp(n), zm(n), g(k-1)
  const Eigen::Index off_b = d, off_rb = d + 1, off_ro = d + 2, off_xi = d + 3;
  const Eigen::Index off_zp = off_xi + n, off_zm = off_zp + n;
  const Eigen::Index off_g = off_zm + n;
  const Eigen::Index nv = off_g + (k - 1);

  qp::QpProblem p;
  p.Q = Eigen::MatrixXd::Zero(nv, nv);
  p.Q.topLeftCorner(d, d).setIdentity();
  p.c = Eigen::VectorXd::Zero(nv);
  p.c(off_rb) = -alpha * nu_b;
  p.c(off_ro) = -(1 - alpha) * nu_o;
  p.c.segment(off_xi, n).setConstant(alpha / static_cast<double>(n));
  p.c.segment(off_zp, 2 * n).setConstant((1 - alpha) / n_star);
  p.A_eq.resize(0, nv);
  p.b_eq.resize(0);

  std::vector<Eigen::VectorXd> rows;
  auto row = [&]() -> Eigen::VectorXd& {
    rows.emplace_back(Eigen::VectorXd::Zero(nv));
    return rows.back();
  };
  for (Eigen::Index i = 0; i < n; ++i) {
    const double yi = ds.label(i);
    Eigen::VectorXd& r = row();  // rho_b - xi_i - y_i (w.x_i + b) <= 0
    r.head(d) = -yi * ds.features().row(i).transpose();
    r(off_b) = -yi;
    r(off_rb) = 1.0;
    r(off_xi + i) = -1.0;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const int j = slots.indices[static_cast<std::size_t>(i)];
    if (j >= 1) {
      Eigen::VectorXd& r = row();
      r.head(d) = -ds.features().row(i).transpose();
      r(off_zp + i) = -1.0;
      r(off_zm + i) = 1.0;
      r(off_g + j - 1) = 1.0;
      r(off_ro) = 0.5;
    }
    if (j <= k - 2) {
      Eigen::VectorXd& r = row();
      r.head(d) = ds.features().row(i).transpose();
      r(off_zp + i) = 1.0;
      r(off_zm + i) = -1.0;
      r(off_g + j) = -1.0;
      r(off_ro) = 0.5;
    }
  }
  for (int m = 0; m + 1 < k - 1; ++m) {
    Eigen::VectorXd& r = row();
    r(off_g + m) = 1.0;
    r(off_g + m + 1) = -1.0;
  }
  p.A_in.resize(static_cast<Eigen::Index>(rows.size()), nv);
  for (std::size_t i = 0; i < rows.size(); ++i)
    p.A_in.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  p.b_in = Eigen::VectorXd::Zero(p.A_in.rows());
  p.lower = Eigen::VectorXd::Constant(nv, -kInf);
  p.upper = Eigen::VectorXd::Constant(nv, kInf);
  p.lower(off_rb) = 0.0;
  p.lower(off_ro) = 0.0;
  p.lower.segment(off_xi, 3 * n).setZero();

  const qp::QpSolution primal = solve_qp(p);
  REQUIRE(primal.status == qp::QpStatus::Optimal);

  GoSvmParams gp;
  gp.nu_b = nu_b;
  gp.nu_o = nu_o;
  gp.alpha = alpha;
  const GoSvmSolution sol = train_gosvm(ds, gp);
  CHECK(sol.objective ==
        doctest::Approx(primal.objective).epsilon(1e-5));
  const Eigen::VectorXd w_primal = primal.x.head(d);
  const Eigen::VectorXd f_primal =
      ds.features() * w_primal +
      Eigen::VectorXd::Constant(n, primal.x(off_b));
  const Eigen::VectorXd f_kern = predict(sol.model, ds.features());
  CHECK((f_primal - f_kern).lpNorm<Eigen::Infinity>() <=
        1e-4 * (1 + f_primal.lpNorm<Eigen::Infinity>()));
}

TEST_CASE("relaxation loss upper-bounds the exact ordinal hinge") {
  // alpha = 0 optimum with slot margin rho_o, compared against the exact
  // ordinal program at per-threshold margin rho_o / 2 with the capacity term
  // made negligible.
  Rng rng(8, 0);
  int evaluated = 0;
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 4 + static_cast<int>(rng.uniform_int(4));  // 4..7
    Eigen::MatrixXd x(n, 1);
    Eigen::VectorXi y(n);
    Eigen::VectorXd o(n);
    for (int i = 0; i < n; ++i) {
      // duplicated feature values with conflicting oracle ranks force
      // genuinely positive ordinal loss on some draws
      x(i, 0) = std::floor(rng.uniform(0, 3));
      y(i) = i % 2 ? 1 : -1;
      o(i) = rng.uniform();
    }
    const Dataset ds(x, y, o);
    GoSvmParams p;
    p.nu_b = 0.3;
    p.nu_o = 0.4;
    p.alpha = 0.0;
    const GoSvmSolution sol = train_gosvm(ds, p);
    if (sol.rho_o <= 1e-6) continue;  // degenerate margin, nothing to match
    ++evaluated;

    const Eigen::VectorXd f =
        (predict(sol.model, ds.features()).array() - sol.model.bias).matrix();
    const double relax =
        shashua_levin_loss(f, sol.index.indices, sol.g, sol.rho_o);

    const Eigen::VectorXd w = linear_weights(sol.model);
    const double cap = 0.5 * w.squaredNorm();
    const double C = 1e9 * std::max(1.0, cap);
    const ExactOrdinalResult exact = exact_ordinal_objective(
        ds, KernelSpec::linear(), C, sol.rho_o / 2.0);
    CHECK(exact.hinge <= relax + cap / C + 1e-8);
  }
  CHECK(evaluated >= 3);
}

TEST_CASE("evaluate reports error, ordering loss, and balance") {
  Rng rng(9, 0);
  const Dataset train = ordered_blobs(rng, 14, 2, 3.0, 0.01);
  GoSvmParams p;
  p.nu_b = 0.2;
  p.nu_o = 0.3;
  p.alpha = 0.5;
  const GoSvmSolution sol = train_gosvm(train, p);
  const EvalMetrics m = evaluate(sol, train);
  CHECK(m.error_rate == 0.0);  // well-separated training set
  REQUIRE(m.liso.has_value());
  CHECK(*m.liso >= 0.0);
  CHECK(*m.liso <= 1.0);
}

TEST_CASE("constant discriminant errs on exactly one class") {
  TrainedModel constant;
  constant.alphas = Eigen::VectorXd::Zero(1);
  constant.bias = 0.3;  // predicts +1 everywhere
  constant.kernel = KernelSpec::linear();
  constant.support = Eigen::MatrixXd::Zero(1, 1);

  Eigen::MatrixXd x(5, 1);
  x << 1, 2, 3, 4, 5;
  Eigen::VectorXi y(5);
  y << 1, 1, -1, -1, -1;
  const EvalMetrics m =
      evaluate_model(constant, Dataset(x, y, std::nullopt));
  CHECK(m.error_rate == doctest::Approx(0.6).epsilon(1e-12));
  CHECK_FALSE(m.liso.has_value());
}

TEST_CASE("discriminant equal to the oracle has zero ordering loss") {
  TrainedModel identity;  // f(x) = x for 1-d inputs
  identity.alphas = Eigen::VectorXd::Ones(1);
  identity.bias = 0.0;
  identity.kernel = KernelSpec::linear();
  identity.support = Eigen::MatrixXd::Ones(1, 1);

  Eigen::MatrixXd x(4, 1);
  x << -2, -1, 1, 2;
  Eigen::VectorXi y(4);
  y << -1, -1, 1, 1;
  Eigen::VectorXd o(4);
  o << -2, -1, 1, 2;
  const EvalMetrics m = evaluate_model(identity, Dataset(x, y, o));
  CHECK(m.error_rate == 0.0);
  REQUIRE(m.liso.has_value());
  CHECK(*m.liso == 0.0);
  CHECK(m.balance == 0.0);
}

TEST_CASE("discriminant invariant to sample permutation") {
  Rng rng(10, 0);
  const Dataset ds = ordered_blobs(rng, 12, 2, 1.0);
  std::vector<Eigen::Index> perm(12);
  std::iota(perm.begin(), perm.end(), 0);
  Rng shuf(11, 0);
  shuf.shuffle(perm);
  GoSvmParams p;
  p.nu_b = 0.4;
  p.nu_o = 0.3;
  p.alpha = 0.5;
  const GoSvmSolution a = train_gosvm(ds, p);
  const GoSvmSolution b = train_gosvm(ds.subset(perm), p);
  const Eigen::VectorXd fa = predict(a.model, ds.features());
  const Eigen::VectorXd fb = predict(b.model, ds.features());
  CHECK((fa - fb).lpNorm<Eigen::Infinity>() <=
        1e-5 * (1 + fa.lpNorm<Eigen::Infinity>()));
}

TEST_CASE("solution serialization round-trip") {
  Rng rng(12, 0);
  const Dataset ds = ordered_blobs(rng, 10, 2, 1.0);
  GoSvmParams p;
  p.nu_b = 0.4;
  p.nu_o = 0.3;
  p.alpha = 0.25;
  p.kernel = KernelSpec::rbf(0.9);
  const GoSvmSolution sol = train_gosvm(ds, p);
  std::ostringstream os;
  write_solution(sol, os);
  std::istringstream is(os.str());
  const GoSvmSolution back = read_solution(is);
  CHECK(back.model.alphas == sol.model.alphas);
  CHECK(back.model.bias == sol.model.bias);
  CHECK(back.model.support == sol.model.support);
  CHECK(back.model.kernel.width == sol.model.kernel.width);
  CHECK(back.g == sol.g);
  CHECK(back.rho_b == sol.rho_b);
  CHECK(back.rho_o == sol.rho_o);
  CHECK(back.achieved_balance == sol.achieved_balance);
  CHECK(back.ordering == sol.ordering);
}

TEST_CASE("per-class training keeps the empty separator slot") {
  Rng rng(13, 0);
  const Dataset ds = ordered_blobs(rng, 10, 2, 1.5);
  GoSvmParams p;
  p.nu_b = 0.3;
  p.nu_o = 0.2;
  p.alpha = 0.5;
  p.ordering = OrderingMode::PerClass;
  const GoSvmSolution sol = train_gosvm(ds, p);
  CHECK(sol.index.n_slots == 11);  // 5 + empty + 5
  const EvalMetrics m = evaluate(sol, ds);
  CHECK(m.error_rate <= 0.5);
}
