/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "gosvm/gosvm.h"

#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bench/bench.hpp"
#include "bounds/bounds.hpp"
#include "core/dataset.hpp"
#include "core/error.hpp"
#include "datagen/datagen.hpp"
#include "modelsel/modelsel.hpp"
#include "svm/gosvm.hpp"
#include "svm/model_io.hpp"
#include "svm/nusvm.hpp"

/* Handle definitions; each wraps one core object. */
struct gosvm_dataset {
  gosvm::Dataset ds;
};
struct gosvm_model {
  /* Exactly one of these is engaged. */
  std::optional<gosvm::NuSvmResult> plain;
  std::optional<gosvm::GoSvmSolution> joint;
  const gosvm::TrainedModel& model() const {
    return plain ? plain->model : joint->model;
  }
};
struct gosvm_grid {
  gosvm::GridResult grid;
};
struct gosvm_bench_result {
  gosvm::BenchResult result;
  std::string out_dir;
  std::string csv;
  std::string table;
};

namespace {

thread_local std::string tl_last_error;

int set_error(int status, const std::string& what) {
  tl_last_error = what;
  return status;
}

template <typename F>
int guarded(F&& body) {
  try {
    body();
    return GOSVM_OK;
  } catch (const gosvm::Error& e) {
    return set_error(static_cast<int>(e.code()), e.what());
  } catch (const std::exception& e) {
    return set_error(GOSVM_E_UNKNOWN, e.what());
  }
}

int require(bool cond, const char* what) {
  return cond ? GOSVM_OK : set_error(GOSVM_E_INVALID_ARGUMENT, what);
}

gosvm::KernelSpec make_kernel(int kernel, double width) {
  if (kernel == GOSVM_KERNEL_LINEAR) return gosvm::KernelSpec::linear();
  if (kernel == GOSVM_KERNEL_RBF) return gosvm::KernelSpec::rbf(width);
  throw gosvm::Error(gosvm::ErrorCode::InvalidArgument, "unknown kernel kind");
}

gosvm::OrderingMode make_ordering(int ordering) {
  if (ordering == GOSVM_ORDERING_GLOBAL) return gosvm::OrderingMode::Global;
  if (ordering == GOSVM_ORDERING_PER_CLASS)
    return gosvm::OrderingMode::PerClass;
  throw gosvm::Error(gosvm::ErrorCode::InvalidArgument,
                     "unknown ordering mode");
}

gosvm::SelectionStrategy make_strategy(int strategy) {
  switch (strategy) {
    case GOSVM_SELECT_UNSMOOTH: return gosvm::SelectionStrategy::Unsmooth;
    case GOSVM_SELECT_SMOOTHED: return gosvm::SelectionStrategy::Smoothed;
    case GOSVM_SELECT_EXTENDED: return gosvm::SelectionStrategy::Extended;
  }
  throw gosvm::Error(gosvm::ErrorCode::InvalidArgument,
                     "unknown selection strategy");
}

gosvm::BoundParams make_bound_params(const gosvm_bound_params& p) {
  gosvm::BoundParams b;
  b.V = p.V;
  b.n = p.n;
  b.C = p.C;
  b.delta1 = p.delta1;
  b.delta2 = p.delta2;
  b.delta3 = p.delta3;
  b.d = p.d;
  b.w = p.w;
  b.phi = p.phi;
  b.ordering_multiplier = p.ordering_multiplier;
  return b;
}

}  // namespace

extern "C" {

const char* gosvm_last_error(void) { return tl_last_error.c_str(); }

const char* gosvm_status_name(int status) {
  if (status == GOSVM_OK) return "Ok";
  if (status == GOSVM_E_UNKNOWN) return "Unknown";
  return gosvm::error_code_name(static_cast<gosvm::ErrorCode>(status));
}

/* ---- datasets ---- */

int gosvm_dataset_create(const double* x, const int* y, const double* oracle,
                         long n, long d, gosvm_dataset** out) {
  if (int rc = require(x && y && out && n > 0 && d > 0,
                       "dataset_create needs x, y, out and positive shape"))
    return rc;
  return guarded([&] {
    Eigen::MatrixXd xm(n, d);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < d; ++j) xm(i, j) = x[i * d + j];
    Eigen::VectorXi ym(n);
    for (long i = 0; i < n; ++i) ym[i] = y[i];
    std::optional<Eigen::VectorXd> om;
    if (oracle) {
      om = Eigen::VectorXd(n);
      for (long i = 0; i < n; ++i) (*om)[i] = oracle[i];
    }
    *out = new gosvm_dataset{
        gosvm::Dataset(std::move(xm), std::move(ym), std::move(om))};
  });
}

int gosvm_dataset_read(const char* path, gosvm_dataset** out) {
  if (int rc = require(path && out, "dataset_read needs path and out"))
    return rc;
  return guarded(
      [&] { *out = new gosvm_dataset{gosvm::read_dataset(path)}; });
}

int gosvm_dataset_write(const gosvm_dataset* ds, const char* path) {
  if (int rc = require(ds && path, "dataset_write needs dataset and path"))
    return rc;
  return guarded([&] { gosvm::write_dataset(ds->ds, path); });
}

int gosvm_dataset_read_digits(const char* path, gosvm_dataset** out) {
  if (int rc = require(path && out, "dataset_read_digits needs path and out"))
    return rc;
  return guarded(
      [&] { *out = new gosvm_dataset{gosvm::load_digits(path)}; });
}

long gosvm_dataset_size(const gosvm_dataset* ds) {
  return ds ? static_cast<long>(ds->ds.size()) : 0;
}
long gosvm_dataset_dim(const gosvm_dataset* ds) {
  return ds ? static_cast<long>(ds->ds.dim()) : 0;
}
int gosvm_dataset_has_oracle(const gosvm_dataset* ds) {
  return ds && ds->ds.has_oracle() ? 1 : 0;
}
long gosvm_dataset_positives(const gosvm_dataset* ds) {
  return ds ? static_cast<long>(ds->ds.positives()) : 0;
}
void gosvm_dataset_free(gosvm_dataset* ds) { delete ds; }

/* ---- generators ---- */

void gosvm_mackey_glass_config_default(gosvm_mackey_glass_config* cfg) {
  if (!cfg) return;
  const gosvm::MackeyGlassConfig d;
  *cfg = {d.tau, d.dt,       d.sample_every, d.x0,   d.beta,
          d.gamma, d.exponent, d.horizon,      d.embed};
}

int gosvm_gen_mackey_glass(const gosvm_mackey_glass_config* cfg, long n,
                           uint64_t seed, gosvm_dataset** out) {
  if (int rc = require(cfg && out && n > 0,
                       "gen_mackey_glass needs cfg, out and n > 0"))
    return rc;
  return guarded([&] {
    gosvm::MackeyGlassConfig c;
    c.tau = cfg->tau;
    c.dt = cfg->dt;
    c.sample_every = cfg->sample_every;
    c.x0 = cfg->x0;
    c.beta = cfg->beta;
    c.gamma = cfg->gamma;
    c.exponent = cfg->exponent;
    c.horizon = cfg->horizon;
    c.embed = cfg->embed;
    const int len = static_cast<int>(n) + c.horizon + c.embed - 1;
    const std::vector<double> series =
        gosvm::gen_mackey_glass(c, len, gosvm::RngSeed{seed, 0});
    *out = new gosvm_dataset{gosvm::embed_series(series, c)};
  });
}

void gosvm_survival_config_default(gosvm_survival_config* cfg) {
  if (!cfg) return;
  const gosvm::SurvivalConfig d;
  *cfg = {d.dim, d.noise, d.horizon, d.censor_rate};
}

int gosvm_gen_survival(const gosvm_survival_config* cfg, long n,
                       int median_horizon, uint64_t seed,
                       gosvm_dataset** out) {
  if (int rc =
          require(cfg && out && n > 0, "gen_survival needs cfg, out and n > 0"))
    return rc;
  return guarded([&] {
    gosvm::SurvivalConfig c;
    c.dim = cfg->dim;
    c.noise = cfg->noise;
    c.horizon = cfg->horizon;
    c.censor_rate = cfg->censor_rate;
    c.n = static_cast<int>(n);
    if (median_horizon)
      *out = new gosvm_dataset{
          gosvm::gen_survival_median_horizon(c, gosvm::RngSeed{seed, 0}).data};
    else
      *out = new gosvm_dataset{gosvm::gen_survival(c, gosvm::RngSeed{seed, 0})};
  });
}

/* ---- training ---- */

void gosvm_params_default(gosvm_params* p) {
  if (!p) return;
  const gosvm::GoSvmParams d;
  p->nu_b = d.nu_b;
  p->nu_o = d.nu_o;
  p->alpha = d.alpha;
  p->kernel = GOSVM_KERNEL_LINEAR;
  p->width = 1.0;
  p->ordering = GOSVM_ORDERING_GLOBAL;
}

int gosvm_train_nusvm(const gosvm_dataset* train, double nu, int kernel,
                      double width, gosvm_model** out) {
  if (int rc = require(train && out, "train_nusvm needs dataset and out"))
    return rc;
  return guarded([&] {
    auto m = new gosvm_model{};
    try {
      m->plain = gosvm::train_nusvm(train->ds, nu, make_kernel(kernel, width));
    } catch (...) {
      delete m;
      throw;
    }
    *out = m;
  });
}

int gosvm_train(const gosvm_dataset* train, const gosvm_params* p,
                gosvm_model** out) {
  if (int rc = require(train && p && out, "train needs dataset, params, out"))
    return rc;
  return guarded([&] {
    gosvm::GoSvmParams gp;
    gp.nu_b = p->nu_b;
    gp.nu_o = p->nu_o;
    gp.alpha = p->alpha;
    gp.kernel = make_kernel(p->kernel, p->width);
    gp.ordering = make_ordering(p->ordering);
    auto m = new gosvm_model{};
    try {
      m->joint = gosvm::train_gosvm(train->ds, gp);
    } catch (...) {
      delete m;
      throw;
    }
    *out = m;
  });
}

int gosvm_model_save(const gosvm_model* m, const char* path) {
  if (int rc = require(m && path, "model_save needs model and path")) return rc;
  return guarded([&] {
    std::ofstream f(path);
    if (!f)
      throw gosvm::Error(gosvm::ErrorCode::Io,
                         std::string("cannot open for writing: ") + path);
    if (m->plain)
      gosvm::write_model(*m->plain, f);
    else
      gosvm::write_solution(*m->joint, f);
    if (!f)
      throw gosvm::Error(gosvm::ErrorCode::Io,
                         std::string("write failed: ") + path);
  });
}

int gosvm_model_load(const char* path, gosvm_model** out) {
  if (int rc = require(path && out, "model_load needs path and out")) return rc;
  return guarded([&] {
    std::ifstream f(path);
    if (!f)
      throw gosvm::Error(gosvm::ErrorCode::Io,
                         std::string("cannot open: ") + path);
    std::stringstream buf;
    buf << f.rdbuf();
    const std::string text = buf.str();
    std::istringstream sniff(text);
    const std::string kind = gosvm::detail::read_magic_and_kind(sniff);
    std::istringstream body(text);
    auto m = new gosvm_model{};
    try {
      if (kind == "nusvm")
        m->plain = gosvm::read_model(body);
      else if (kind == "gosvm")
        m->joint = gosvm::read_solution(body);
      else
        throw gosvm::Error(gosvm::ErrorCode::Parse,
                           "unknown model kind: " + kind);
    } catch (...) {
      delete m;
      throw;
    }
    *out = m;
  });
}

int gosvm_model_predict(const gosvm_model* m, const double* x, long n, long d,
                        double* out_scores) {
  if (int rc = require(m && x && out_scores && n > 0 && d > 0,
                       "model_predict needs model, x, out and positive shape"))
    return rc;
  return guarded([&] {
    Eigen::MatrixXd xm(n, d);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < d; ++j) xm(i, j) = x[i * d + j];
    const Eigen::VectorXd f = gosvm::predict(m->model(), xm);
    for (long i = 0; i < n; ++i) out_scores[i] = f[i];
  });
}

int gosvm_model_evaluate(const gosvm_model* m, const gosvm_dataset* test,
                         int ordering, gosvm_eval* out) {
  if (int rc = require(m && test && out, "model_evaluate needs model, test, out"))
    return rc;
  return guarded([&] {
    const gosvm::EvalMetrics e =
        gosvm::evaluate_model(m->model(), test->ds, make_ordering(ordering));
    out->error = e.error_rate;
    out->liso = e.liso.value_or(-1.0);
    out->balance = e.balance;
  });
}

void gosvm_model_free(gosvm_model* m) { delete m; }

/* ---- grid selection ---- */

int gosvm_grid_search(const gosvm_dataset* train, const gosvm_dataset* valid,
                      const double* nu_b, long n_nu_b, const double* nu_o,
                      long n_nu_o, const double* alpha, long n_alpha,
                      int kernel, double width, int ordering,
                      gosvm_grid** out) {
  if (int rc = require(train && valid && nu_b && nu_o && alpha && out &&
                           n_nu_b > 0 && n_nu_o > 0 && n_alpha > 0,
                       "grid_search needs datasets, non-empty axes and out"))
    return rc;
  return guarded([&] {
    gosvm::GridAxes axes;
    axes.nu_b.assign(nu_b, nu_b + n_nu_b);
    axes.nu_o.assign(nu_o, nu_o + n_nu_o);
    axes.alpha.assign(alpha, alpha + n_alpha);
    *out = new gosvm_grid{gosvm::grid_search(train->ds, valid->ds, axes,
                                             make_kernel(kernel, width),
                                             make_ordering(ordering))};
  });
}

int gosvm_grid_select(const gosvm_grid* g, int strategy,
                      const gosvm_dataset* extended, gosvm_grid_choice* out) {
  if (int rc = require(g && out, "grid_select needs grid and out")) return rc;
  return guarded([&] {
    const gosvm::GridNode n = gosvm::select(
        g->grid, make_strategy(strategy), extended ? &extended->ds : nullptr);
    out->i_nu_b = static_cast<long>(n.i_nub);
    out->i_nu_o = static_cast<long>(n.i_nuo);
    out->i_alpha = static_cast<long>(n.i_alpha);
    out->nu_b = n.nu_b;
    out->nu_o = n.nu_o;
    out->alpha = n.alpha;
    out->score = n.error;
  });
}

int gosvm_grid_model(const gosvm_grid* g, long i_nu_b, long i_nu_o,
                     long i_alpha, gosvm_model** out) {
  if (int rc = require(g && out, "grid_model needs grid and out")) return rc;
  return guarded([&] {
    const gosvm::GridAxes& a = g->grid.tensor.axes;
    if (i_nu_b < 0 || i_nu_b >= static_cast<long>(a.nu_b.size()) ||
        i_nu_o < 0 || i_nu_o >= static_cast<long>(a.nu_o.size()) ||
        i_alpha < 0 || i_alpha >= static_cast<long>(a.alpha.size()))
      throw gosvm::Error(gosvm::ErrorCode::InvalidArgument,
                         "grid index out of range");
    const std::size_t c = g->grid.tensor.cell(
        static_cast<std::size_t>(i_nu_b), static_cast<std::size_t>(i_nu_o),
        static_cast<std::size_t>(i_alpha));
    if (!g->grid.models[c].has_value())
      throw gosvm::Error(gosvm::ErrorCode::InfeasibleParams,
                         "selected grid cell did not train");
    auto m = new gosvm_model{};
    m->joint = *g->grid.models[c];
    *out = m;
  });
}

int gosvm_grid_write_csv(const gosvm_grid* g, const char* path) {
  if (int rc = require(g && path, "grid_write_csv needs grid and path"))
    return rc;
  return guarded([&] {
    std::ofstream f(path);
    if (!f)
      throw gosvm::Error(gosvm::ErrorCode::Io,
                         std::string("cannot open for writing: ") + path);
    gosvm::write_tensor_csv(g->grid.tensor, f);
    if (!f)
      throw gosvm::Error(gosvm::ErrorCode::Io,
                         std::string("write failed: ") + path);
  });
}

void gosvm_grid_free(gosvm_grid* g) { delete g; }

/* ---- bench ---- */

int gosvm_bench_run(const char* config_path,
                    const gosvm_bench_overrides* overrides,
                    gosvm_bench_result** out) {
  if (int rc = require(config_path && out, "bench_run needs config path and out"))
    return rc;
  return guarded([&] {
    gosvm::ExperimentConfig cfg = gosvm::load_config(config_path);
    if (overrides) {
      if (overrides->has_seed) cfg.seed = overrides->seed;
      if (overrides->has_threads) cfg.threads = overrides->threads;
      if (overrides->out_dir) cfg.out_dir = overrides->out_dir;
      gosvm::validate(cfg);
    }
    auto r = new gosvm_bench_result{};
    try {
      r->result = gosvm::run_bench(cfg);
      r->out_dir = cfg.out_dir;
      std::ostringstream csv, table;
      gosvm::write_results_csv(r->result, csv);
      gosvm::write_summary_table(r->result, table);
      r->csv = csv.str();
      r->table = table.str();
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
  });
}

const char* gosvm_bench_result_name(const gosvm_bench_result* r) {
  return r ? r->result.experiment.c_str() : "";
}
const char* gosvm_bench_result_out_dir(const gosvm_bench_result* r) {
  return r ? r->out_dir.c_str() : "";
}
const char* gosvm_bench_result_csv(const gosvm_bench_result* r) {
  return r ? r->csv.c_str() : "";
}
const char* gosvm_bench_result_table(const gosvm_bench_result* r) {
  return r ? r->table.c_str() : "";
}
void gosvm_bench_result_free(gosvm_bench_result* r) { delete r; }

/* ---- bounds ---- */

void gosvm_bound_params_default(gosvm_bound_params* p) {
  if (!p) return;
  const gosvm::BoundParams d;
  p->V = d.V;
  p->n = d.n;
  p->C = d.C;
  p->delta1 = d.delta1;
  p->delta2 = d.delta2;
  p->delta3 = d.delta3;
  p->d = d.d;
  p->w = d.w;
  p->phi = d.phi;
  p->ordering_multiplier = d.ordering_multiplier;
}

int gosvm_ordinal_bound(const gosvm_bound_params* p, double empirical_liso,
                        double* out) {
  if (int rc = require(p && out, "ordinal_bound needs params and out"))
    return rc;
  return guarded(
      [&] { *out = gosvm::ordinal_bound(make_bound_params(*p), empirical_liso); });
}

int gosvm_main_bound(const gosvm_bound_params* p, double* out) {
  if (int rc = require(p && out, "main_bound needs params and out")) return rc;
  return guarded([&] { *out = gosvm::main_bound(make_bound_params(*p)); });
}

int gosvm_phi_schedule(double n, double t_quarter, double t_half,
                       double* out) {
  if (int rc = require(out != nullptr, "phi_schedule needs out")) return rc;
  return guarded([&] {
    *out = gosvm::phi_schedule(n, gosvm::PhiThresholds{t_quarter, t_half});
  });
}

int gosvm_appendix_epsilon(const gosvm_bound_params* p, double* out) {
  if (int rc = require(p && out, "appendix_epsilon needs params and out"))
    return rc;
  return guarded(
      [&] { *out = gosvm::appendix_epsilon(make_bound_params(*p)); });
}

} /* extern "C" */
