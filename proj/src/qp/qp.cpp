/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "qp/qp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "core/dataset.hpp"  // format_real

/*
 * Primal-dual interior-point method for the convex QP
 *
 *   min (1/2) x'Qx + c'x   s.t.  Ax = b,  Gx + s = h,  s >= 0,
 *
 * where G stacks the general inequality rows and the finite variable bounds.
 * KKT conditions:
 *
 *   Qx + c + A'y + G'z = 0,   Ax = b,   Gx + s = h,   s,z >= 0,  s.z = 0.
 *
 * Newton equations for a target s.z = sigma*mu (with the Mehrotra
 * second-order correction folded into r_sz):
 *
 *   Q dx + A'dy + G'dz = -r_d
 *   A dx               = -r_p
 *   G dx + ds          = -r_g
 *   Z ds + S dz        = -r_sz
 *
 * Eliminating ds and dz gives the reduced saddle system
 *
 *   [ Q + G'WG   A' ] [dx]   [ -r_d - G'(W r_g - S^-1 r_sz) ]
 *   [ A          0  ] [dy] = [ -r_p                         ]
 *
 * with W = S^-1 Z, then dz = W(G dx + r_g) - S^-1 r_sz and
 * ds = -(r_sz + s.dz)/z.  The (1,1) block gets +1e-9 I and the (2,2) block
 * -1e-9 I of static regularization.  Infeasibility and unboundedness are
 * certified from the diverging iterates: if |(y,z)| blows up, the normalized
 * (y,z) approaches a Farkas certificate (A'y + G'z = 0, z >= 0,
 * b'y + h'z < 0); if |x| blows up, x/|x| approaches a ray with Qd = 0,
 * Ad = 0, Gd <= 0, c'd < 0.
 */

namespace gosvm::qp {

namespace {

constexpr double kStaticReg = 1e-9;

struct Canonical {
  const QpProblem* p = nullptr;
  Eigen::Index n = 0;
  Eigen::Index p_eq = 0;
  Eigen::Index m_gen = 0;              // general inequality rows
  std::vector<Eigen::Index> lo_idx;    // variables with finite lower bound
  std::vector<Eigen::Index> up_idx;
  Eigen::Index m = 0;                  // m_gen + bounds
  Eigen::VectorXd h;                   // stacked rhs of Gx <= h

  // G row order: [A_in; -e_i (lower); +e_i (upper)].
  Eigen::VectorXd mult_G(const Eigen::VectorXd& x) const {
    Eigen::VectorXd out(m);
    if (m_gen > 0) out.head(m_gen) = p->A_in * x;
    Eigen::Index r = m_gen;
    for (Eigen::Index i : lo_idx) out(r++) = -x(i);
    for (Eigen::Index i : up_idx) out(r++) = x(i);
    return out;
  }

  Eigen::VectorXd multT_G(const Eigen::VectorXd& t) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    if (m_gen > 0) out = p->A_in.transpose() * t.head(m_gen);
    Eigen::Index r = m_gen;
    for (Eigen::Index i : lo_idx) out(i) -= t(r++);
    for (Eigen::Index i : up_idx) out(i) += t(r++);
    return out;
  }

  // H = Q + G' diag(w) G + gamma I, assembled without materializing bound rows.
  Eigen::MatrixXd form_H(const Eigen::VectorXd& w, double gamma) const {
    Eigen::MatrixXd H = p->Q;
    if (m_gen > 0) {
      H.noalias() +=
          p->A_in.transpose() * w.head(m_gen).asDiagonal() * p->A_in;
    }
    Eigen::Index r = m_gen;
    for (Eigen::Index i : lo_idx) H(i, i) += w(r++);
    for (Eigen::Index i : up_idx) H(i, i) += w(r++);
    H.diagonal().array() += gamma;
    return H;
  }
};

Canonical canonicalize(const QpProblem& p) {
  const Eigen::Index n = p.n_var();
  if (p.Q.rows() != n || p.Q.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "Q must be n x n");
  }
  if (p.Q.rows() > 0) {
    const double asym = (p.Q - p.Q.transpose()).cwiseAbs().maxCoeff();
    const double qn = std::max(1.0, p.Q.cwiseAbs().maxCoeff());
    if (asym > 1e-12 * qn) {
      throw Error(ErrorCode::InvalidArgument, "Q is not symmetric");
    }
  }
  if (p.A_eq.rows() != p.b_eq.size() ||
      (p.A_eq.rows() > 0 && p.A_eq.cols() != n)) {
    throw Error(ErrorCode::DimensionMismatch, "equality block shape mismatch");
  }
  if (p.A_in.rows() != p.b_in.size() ||
      (p.A_in.rows() > 0 && p.A_in.cols() != n)) {
    throw Error(ErrorCode::DimensionMismatch, "inequality block shape mismatch");
  }
  if ((p.lower.size() != 0 && p.lower.size() != n) ||
      (p.upper.size() != 0 && p.upper.size() != n)) {
    throw Error(ErrorCode::DimensionMismatch, "bound vector length mismatch");
  }

  Canonical c;
  c.p = &p;
  c.n = n;
  c.p_eq = p.A_eq.rows();
  c.m_gen = p.A_in.rows();
  const double inf = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < p.lower.size(); ++i) {
    if (p.lower(i) > -inf) c.lo_idx.push_back(i);
  }
  for (Eigen::Index i = 0; i < p.upper.size(); ++i) {
    if (p.upper(i) < inf) c.up_idx.push_back(i);
  }
  c.m = c.m_gen + static_cast<Eigen::Index>(c.lo_idx.size() + c.up_idx.size());
  c.h.resize(c.m);
  if (c.m_gen > 0) c.h.head(c.m_gen) = p.b_in;
  Eigen::Index r = c.m_gen;
  for (Eigen::Index i : c.lo_idx) c.h(r++) = -p.lower(i);
  for (Eigen::Index i : c.up_idx) c.h(r++) = p.upper(i);
  return c;
}

// Factorization of the reduced saddle system, SPD fast path when no
// equality rows are present.
class KktSolver {
 public:
  KktSolver(const Canonical& c, const Eigen::VectorXd& w) : c_(c) {
    double gamma = kStaticReg;
    for (int attempt = 0; attempt < 5; ++attempt) {
      Eigen::MatrixXd H = c.form_H(w, gamma);
      if (c.p_eq == 0) {
        llt_.compute(H);
        if (llt_.info() == Eigen::Success) {
          ok_ = true;
          return;
        }
      } else {
        Eigen::MatrixXd M(c.n + c.p_eq, c.n + c.p_eq);
        M.setZero();
        M.topLeftCorner(c.n, c.n) = H;
        M.topRightCorner(c.n, c.p_eq) = c.p->A_eq.transpose();
        M.bottomLeftCorner(c.p_eq, c.n) = c.p->A_eq;
        M.bottomRightCorner(c.p_eq, c.p_eq).diagonal().setConstant(-kStaticReg);
        lu_.compute(M);
        // PartialPivLU has no rank query; probe with a solve.
        Eigen::VectorXd probe = lu_.solve(Eigen::VectorXd::Ones(M.rows()));
        if (probe.allFinite()) {
          ok_ = true;
          return;
        }
      }
      gamma *= 100.0;
    }
  }

  bool ok() const { return ok_; }

  // Solves the saddle system with one step of iterative refinement.
  void solve(const Eigen::VectorXd& rx, const Eigen::VectorXd& ry,
             const Eigen::VectorXd& w, Eigen::VectorXd* dx,
             Eigen::VectorXd* dy) const {
    auto apply = [&](const Eigen::VectorXd& vx, const Eigen::VectorXd& vy,
                     Eigen::VectorXd* ox, Eigen::VectorXd* oy) {
      // Residual operator uses the exact (unregularized) blocks.
      *ox = c_.p->Q * vx + c_.multT_G(w.cwiseProduct(c_.mult_G(vx)));
      if (c_.p_eq > 0) {
        *ox += c_.p->A_eq.transpose() * vy;
        *oy = c_.p->A_eq * vx;
      }
    };
    auto raw_solve = [&](const Eigen::VectorXd& vx, const Eigen::VectorXd& vy,
                         Eigen::VectorXd* ox, Eigen::VectorXd* oy) {
      if (c_.p_eq == 0) {
        *ox = llt_.solve(vx);
        oy->resize(0);
      } else {
        Eigen::VectorXd rhs(c_.n + c_.p_eq);
        rhs.head(c_.n) = vx;
        rhs.tail(c_.p_eq) = vy;
        Eigen::VectorXd sol = lu_.solve(rhs);
        *ox = sol.head(c_.n);
        *oy = sol.tail(c_.p_eq);
      }
    };
    raw_solve(rx, ry, dx, dy);
    Eigen::VectorXd ax, ay;
    apply(*dx, c_.p_eq > 0 ? *dy : Eigen::VectorXd(), &ax, &ay);
    Eigen::VectorXd ex = rx - ax;
    Eigen::VectorXd ey = c_.p_eq > 0 ? Eigen::VectorXd(ry - ay) : Eigen::VectorXd();
    Eigen::VectorXd fx, fy;
    raw_solve(ex, ey, &fx, &fy);
    *dx += fx;
    if (c_.p_eq > 0) *dy += fy;
  }

 private:
  const Canonical& c_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  bool ok_ = false;
};

double inf_norm(const Eigen::VectorXd& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

// Fills the per-block duals of the solution from the stacked z.
void scatter_duals(const Canonical& c, const Eigen::VectorXd& y,
                   const Eigen::VectorXd& z, QpSolution* sol) {
  sol->eq_duals = y;
  sol->in_duals = z.head(c.m_gen);
  sol->lower_duals = Eigen::VectorXd::Zero(c.n);
  sol->upper_duals = Eigen::VectorXd::Zero(c.n);
  Eigen::Index r = c.m_gen;
  for (Eigen::Index i : c.lo_idx) sol->lower_duals(i) = z(r++);
  for (Eigen::Index i : c.up_idx) sol->upper_duals(i) = z(r++);
}

struct Certificate {
  bool found = false;
  QpStatus status = QpStatus::MaxIter;
  double residual = 0.0;
};

// Farkas certificate of primal infeasibility from the scaled dual iterate.
Certificate check_infeasibility(const Canonical& c, const Eigen::VectorXd& y,
                                const Eigen::VectorXd& z) {
  const double nyz = std::max(inf_norm(y), inf_norm(z));
  Certificate cert;
  if (nyz < 1.0) return cert;
  Eigen::VectorXd ty = y / nyz;
  Eigen::VectorXd tz = (z / nyz).cwiseMax(0.0);
  Eigen::VectorXd at = c.multT_G(tz);
  if (c.p_eq > 0) at += c.p->A_eq.transpose() * ty;
  const double res = inf_norm(at);
  double val = c.h.dot(tz);
  if (c.p_eq > 0) val += c.p->b_eq.dot(ty);
  if (val < -1e-10 && res <= 0.01 * (-val) && res <= 1e-5) {
    cert.found = true;
    cert.status = QpStatus::Infeasible;
    cert.residual = res;
  }
  return cert;
}

// Recession ray certificate of unboundedness from the scaled primal iterate.
Certificate check_unboundedness(const Canonical& c, const Eigen::VectorXd& x) {
  const double nx = inf_norm(x);
  Certificate cert;
  if (nx < 1.0) return cert;
  Eigen::VectorXd d = x / nx;
  const double res_q = inf_norm(c.p->Q * d);
  const double res_a = c.p_eq > 0 ? inf_norm(c.p->A_eq * d) : 0.0;
  const double res_g = std::max(0.0, c.mult_G(d).maxCoeff());
  const double val = c.p->c.dot(d);
  const double res = std::max({res_q, res_a, res_g});
  if (val < -1e-10 && res <= 0.01 * (-val) && res <= 1e-5) {
    cert.found = true;
    cert.status = QpStatus::Unbounded;
    cert.residual = res;
  }
  return cert;
}

// Direct solve for problems with no inequality rows and no bounds.
QpSolution solve_equality_only(const QpProblem& p, const Canonical& c,
                               const QpOptions& opt) {
  QpSolution sol;
  const double scale = problem_scale(p);
  Eigen::MatrixXd M(c.n + c.p_eq, c.n + c.p_eq);
  M.setZero();
  M.topLeftCorner(c.n, c.n) = p.Q;
  M.topLeftCorner(c.n, c.n).diagonal().array() += kStaticReg;
  if (c.p_eq > 0) {
    M.topRightCorner(c.n, c.p_eq) = p.A_eq.transpose();
    M.bottomLeftCorner(c.p_eq, c.n) = p.A_eq;
    M.bottomRightCorner(c.p_eq, c.p_eq).diagonal().setConstant(-kStaticReg);
  }
  Eigen::VectorXd rhs(c.n + c.p_eq);
  rhs.head(c.n) = -p.c;
  if (c.p_eq > 0) rhs.tail(c.p_eq) = p.b_eq;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
  Eigen::VectorXd v = lu.solve(rhs);
  // One refinement pass.
  v += lu.solve(rhs - M * v);
  if (!v.allFinite()) {
    throw Error(ErrorCode::IllConditioned,
                "equality KKT system is numerically singular");
  }
  sol.x = v.head(c.n);
  sol.eq_duals = c.p_eq > 0 ? Eigen::VectorXd(v.tail(c.p_eq)) : Eigen::VectorXd();
  sol.in_duals.resize(0);
  sol.lower_duals = Eigen::VectorXd::Zero(c.n);
  sol.upper_duals = Eigen::VectorXd::Zero(c.n);
  sol.objective = 0.5 * sol.x.dot(p.Q * sol.x) + p.c.dot(sol.x);
  sol.objective_history.push_back(sol.objective);
  Eigen::VectorXd rd = p.Q * sol.x + p.c;
  if (c.p_eq > 0) rd += p.A_eq.transpose() * sol.eq_duals;
  sol.dual_residual = inf_norm(rd);
  sol.primal_residual = c.p_eq > 0 ? inf_norm(p.A_eq * sol.x - p.b_eq) : 0.0;
  sol.complementarity = 0.0;
  sol.duality_gap = 0.0;
  sol.iterations = 1;
  if (sol.primal_residual <= opt.tolerance * scale &&
      sol.dual_residual <= opt.tolerance * scale) {
    sol.status = QpStatus::Optimal;
    return sol;
  }
  if (sol.primal_residual > opt.tolerance * scale) {
    // Equalities inconsistent: least-squares certificate.
    sol.status = QpStatus::Infeasible;
    sol.certificate_residual = sol.primal_residual;
    return sol;
  }
  // Dual residual irreducible: descent ray with Qd ~ 0.
  sol.status = QpStatus::Unbounded;
  sol.certificate_residual = sol.dual_residual;
  return sol;
}

}  // namespace

const char* qp_status_name(QpStatus s) {
  switch (s) {
    case QpStatus::Optimal: return "Optimal";
    case QpStatus::Infeasible: return "Infeasible";
    case QpStatus::Unbounded: return "Unbounded";
    case QpStatus::MaxIter: return "MaxIter";
  }
  return "?";
}

double problem_scale(const QpProblem& p) {
  double s = 0.0;
  auto upd_m = [&](const Eigen::MatrixXd& m) {
    if (m.size() > 0) s = std::max(s, m.cwiseAbs().maxCoeff());
  };
  auto upd_v = [&](const Eigen::VectorXd& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (std::isfinite(v(i))) s = std::max(s, std::abs(v(i)));
    }
  };
  upd_m(p.Q);
  upd_v(p.c);
  upd_m(p.A_eq);
  upd_v(p.b_eq);
  upd_m(p.A_in);
  upd_v(p.b_in);
  upd_v(p.lower);
  upd_v(p.upper);
  return 1.0 + s;
}

QpSolution solve_qp(const QpProblem& p, const QpOptions& opt) {
  Canonical c = canonicalize(p);
  if (c.m == 0) return solve_equality_only(p, c, opt);

  const double scale = problem_scale(p);
  const double tol = opt.tolerance;
  QpSolution sol;

  // Mehrotra-style starting point: one solve with W = I, then shift the
  // slack/dual pair into the positive orthant.
  Eigen::VectorXd x, y(c.p_eq), s, z;
  {
    Eigen::VectorXd w = Eigen::VectorXd::Ones(c.m);
    KktSolver kkt(c, w);
    if (!kkt.ok()) {
      throw Error(ErrorCode::IllConditioned, "initial KKT factorization failed");
    }
    Eigen::VectorXd rx = -p.c + c.multT_G(c.h);
    Eigen::VectorXd ry = p.b_eq;
    kkt.solve(rx, ry, w, &x, &y);
    Eigen::VectorXd sg = c.h - c.mult_G(x);
    const double shift = std::max(0.0, -1.5 * (sg.size() ? sg.minCoeff() : 0.0));
    s = sg.array() + shift;
    z = sg.array() + shift;
    double dot = s.dot(z);
    if (dot <= 0.0) {
      s.array() += 1.0;
      z.array() += 1.0;
      dot = s.dot(z);
    }
    const double ds_shift = 0.5 * dot / z.sum();
    const double dz_shift = 0.5 * dot / s.sum();
    s.array() += ds_shift;
    z.array() += dz_shift;
    const double floor0 = 1e-4 * scale;
    s = s.cwiseMax(floor0);
    z = z.cwiseMax(floor0);
  }

  const double mdbl = static_cast<double>(c.m);
  Certificate best_cert;

  for (int iter = 0; iter < opt.max_iter; ++iter) {
    Eigen::VectorXd rd = p.Q * x + p.c + c.multT_G(z);
    if (c.p_eq > 0) rd += p.A_eq.transpose() * y;
    Eigen::VectorXd rp = c.p_eq > 0 ? Eigen::VectorXd(p.A_eq * x - p.b_eq)
                                    : Eigen::VectorXd();
    Eigen::VectorXd rg = c.mult_G(x) + s - c.h;
    const double mu = s.dot(z) / mdbl;
    const double primal_obj = 0.5 * x.dot(p.Q * x) + p.c.dot(x);
    // Incumbent objective: raw iterate values are not monotone while the
    // iterate is still infeasible, so the history tracks the best seen.
    sol.objective_history.push_back(
        sol.objective_history.empty()
            ? primal_obj
            : std::min(primal_obj, sol.objective_history.back()));
    sol.iterations = iter + 1;

    const double rp_norm = std::max(inf_norm(rp), inf_norm(rg));
    const double rd_norm = inf_norm(rd);

    if (rp_norm <= tol * scale && rd_norm <= tol * scale &&
        s.dot(z) <= tol * scale) {
      sol.status = QpStatus::Optimal;
      sol.x = x;
      scatter_duals(c, y, z, &sol);
      sol.objective = primal_obj;
      sol.primal_residual = rp_norm;
      sol.dual_residual = rd_norm;
      sol.complementarity = s.cwiseProduct(z).maxCoeff();
      sol.duality_gap = s.dot(z);
      return sol;
    }

    // Divergence and certificates.
    const double nyz = std::max(inf_norm(y), inf_norm(z));
    const double nx = inf_norm(x);
    if (nyz > 1e3 * scale) {
      Certificate cert = check_infeasibility(c, y, z);
      if (cert.found) best_cert = cert;
      if (cert.found && (nyz > opt.divergence_threshold || cert.residual < 1e-9)) {
        sol.status = QpStatus::Infeasible;
        sol.x = x;
        scatter_duals(c, y, z, &sol);
        sol.objective = primal_obj;
        sol.certificate_residual = cert.residual;
        return sol;
      }
    }
    if (nx > 1e3 * scale) {
      Certificate cert = check_unboundedness(c, x);
      if (cert.found) best_cert = cert;
      if (cert.found && (nx > opt.divergence_threshold || cert.residual < 1e-9)) {
        sol.status = QpStatus::Unbounded;
        sol.x = x;
        scatter_duals(c, y, z, &sol);
        sol.objective = primal_obj;
        sol.certificate_residual = cert.residual;
        return sol;
      }
    }
    if (std::max(nyz, nx) > opt.divergence_threshold) {
      // Diverged without a clean certificate: report the better-matching
      // non-optimal status.
      sol.status = best_cert.found ? best_cert.status
                   : (nyz >= nx ? QpStatus::Infeasible : QpStatus::Unbounded);
      sol.x = x;
      scatter_duals(c, y, z, &sol);
      sol.objective = primal_obj;
      sol.certificate_residual =
          best_cert.found ? best_cert.residual
                          : std::numeric_limits<double>::quiet_NaN();
      return sol;
    }

    Eigen::VectorXd w = (z.array() / s.array())
                            .cwiseMax(1e-14)
                            .cwiseMin(1e14)
                            .matrix();
    KktSolver kkt(c, w);
    if (!kkt.ok()) {
      throw Error(ErrorCode::IllConditioned,
                  "KKT factorization failed at iteration " +
                      std::to_string(iter));
    }

    // Affine predictor: r_sz = ZSe.
    Eigen::VectorXd s_inv_rsz = z;
    Eigen::VectorXd rx = -rd - c.multT_G(w.cwiseProduct(rg) - s_inv_rsz);
    Eigen::VectorXd ry = c.p_eq > 0 ? Eigen::VectorXd(-rp) : Eigen::VectorXd();
    Eigen::VectorXd dx_a, dy_a;
    kkt.solve(rx, ry, w, &dx_a, &dy_a);
    Eigen::VectorXd dz_a =
        w.cwiseProduct(c.mult_G(dx_a) + rg) - s_inv_rsz;
    Eigen::VectorXd ds_a =
        -(z.cwiseProduct(s) + s.cwiseProduct(dz_a)).cwiseQuotient(z);

    auto max_step = [](const Eigen::VectorXd& v, const Eigen::VectorXd& dv) {
      double a = 1.0;
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (dv(i) < 0.0) a = std::min(a, -v(i) / dv(i));
      }
      return a;
    };
    const double ap = max_step(s, ds_a);
    const double ad = max_step(z, dz_a);
    const double mu_aff =
        (s + ap * ds_a).dot(z + ad * dz_a) / mdbl;
    double sigma = std::pow(mu_aff / mu, 3);
    sigma = std::clamp(sigma, 0.0, 1.0);

    // Corrector: r_sz = ZSe - sigma*mu*e + ds_a.dz_a.
    s_inv_rsz =
        z + (ds_a.cwiseProduct(dz_a).array() - sigma * mu).matrix().cwiseQuotient(s);
    rx = -rd - c.multT_G(w.cwiseProduct(rg) - s_inv_rsz);
    Eigen::VectorXd dx, dy;
    kkt.solve(rx, ry, w, &dx, &dy);
    Eigen::VectorXd dz = w.cwiseProduct(c.mult_G(dx) + rg) - s_inv_rsz;
    Eigen::VectorXd ds = -(s_inv_rsz.cwiseProduct(s) + s.cwiseProduct(dz))
                              .cwiseQuotient(z);

    const double eta = 0.99;
    double alpha = std::min({1.0, eta * max_step(s, ds), eta * max_step(z, dz)});
    if (!std::isfinite(alpha) || alpha < 1e-13) {
      break;  // stalled
    }
    x += alpha * dx;
    if (c.p_eq > 0) y += alpha * dy;
    s += alpha * ds;
    z += alpha * dz;
  }

  // Not converged: report MaxIter (or the best certificate if one was seen).
  sol.x = x;
  scatter_duals(c, y, z, &sol);
  sol.objective = 0.5 * x.dot(p.Q * x) + p.c.dot(x);
  Eigen::VectorXd rd = p.Q * x + p.c + c.multT_G(z);
  if (c.p_eq > 0) rd += p.A_eq.transpose() * y;
  sol.dual_residual = inf_norm(rd);
  Eigen::VectorXd rg = c.mult_G(x) + s - c.h;
  sol.primal_residual =
      std::max(c.p_eq > 0 ? inf_norm(p.A_eq * x - p.b_eq) : 0.0, inf_norm(rg));
  sol.complementarity = s.cwiseProduct(z).maxCoeff();
  sol.duality_gap = s.dot(z);
  if (best_cert.found) {
    sol.status = best_cert.status;
    sol.certificate_residual = best_cert.residual;
  } else {
    sol.status = QpStatus::MaxIter;
  }
  return sol;
}

void dump_problem(const QpProblem& p, std::ostream& out) {
  const bool bounded = p.lower.size() > 0 || p.upper.size() > 0;
  out << "qp v1\n";
  out << "n " << p.n_var() << " eq " << p.A_eq.rows() << " ineq "
      << p.A_in.rows() << " bounded " << (bounded ? 1 : 0) << "\n";
  auto emit_matrix = [&](const char* name, const Eigen::MatrixXd& m) {
    out << name << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (j) out << " ";
        out << format_real(m(i, j));
      }
      out << "\n";
    }
  };
  auto emit_vector = [&](const char* name, const Eigen::VectorXd& v) {
    out << name << "\n";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (i) out << " ";
      out << format_real(v(i));
    }
    out << "\n";
  };
  emit_matrix("Q", p.Q);
  emit_vector("c", p.c);
  emit_matrix("A_eq", p.A_eq);
  emit_vector("b_eq", p.b_eq);
  emit_matrix("A_in", p.A_in);
  emit_vector("b_in", p.b_in);
  if (bounded) {
    Eigen::VectorXd lo = p.lower.size()
                             ? p.lower
                             : Eigen::VectorXd::Constant(
                                   p.n_var(), -std::numeric_limits<double>::infinity());
    Eigen::VectorXd up = p.upper.size()
                             ? p.upper
                             : Eigen::VectorXd::Constant(
                                   p.n_var(), std::numeric_limits<double>::infinity());
    emit_vector("lower", lo);
    emit_vector("upper", up);
  }
}

}  // namespace gosvm::qp
