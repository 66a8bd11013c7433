/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

/*
 * gosvm: train and benchmark order-restricted SVM classifiers.
 *
 * Verbs: gen, train, eval, grid, bench, bounds.  Exit codes: 0 success,
 * 1 runtime failure, 2 usage error.  Talks to the library exclusively
 * through the public C interface.
 */
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gosvm/gosvm.h"

namespace {

// Runtime failure: prints "error: [Code] message" and exits 1.
struct CliError {
  std::string message;
};

void check(int rc) {
  if (rc != GOSVM_OK)
    throw CliError{std::string("[") + gosvm_status_name(rc) + "] " +
                   gosvm_last_error()};
}

using DatasetPtr = std::unique_ptr<gosvm_dataset, void (*)(gosvm_dataset*)>;
using ModelPtr = std::unique_ptr<gosvm_model, void (*)(gosvm_model*)>;
using GridPtr = std::unique_ptr<gosvm_grid, void (*)(gosvm_grid*)>;

DatasetPtr load_data(const std::string& path, const std::string& format) {
  gosvm_dataset* ds = nullptr;
  if (format == "digits")
    check(gosvm_dataset_read_digits(path.c_str(), &ds));
  else
    check(gosvm_dataset_read(path.c_str(), &ds));
  return {ds, gosvm_dataset_free};
}

ModelPtr load_model(const std::string& path) {
  gosvm_model* m = nullptr;
  check(gosvm_model_load(path.c_str(), &m));
  return {m, gosvm_model_free};
}

int parse_kernel(const std::string& name) {
  if (name == "linear") return GOSVM_KERNEL_LINEAR;
  if (name == "rbf") return GOSVM_KERNEL_RBF;
  throw CLI::ValidationError("kernel must be linear or rbf");
}

int parse_ordering(const std::string& name) {
  if (name == "global") return GOSVM_ORDERING_GLOBAL;
  if (name == "per-class") return GOSVM_ORDERING_PER_CLASS;
  throw CLI::ValidationError("ordering must be global or per-class");
}

int parse_strategy(const std::string& name) {
  if (name == "unsmooth") return GOSVM_SELECT_UNSMOOTH;
  if (name == "smoothed") return GOSVM_SELECT_SMOOTHED;
  if (name == "extended") return GOSVM_SELECT_EXTENDED;
  throw CLI::ValidationError("strategy must be unsmooth, smoothed or extended");
}

void print_dataset_summary(const gosvm_dataset* ds, const std::string& path) {
  const long n = gosvm_dataset_size(ds);
  const long pos = gosvm_dataset_positives(ds);
  std::cout << "file=" << path << "\n"
            << "n=" << n << "\n"
            << "d=" << gosvm_dataset_dim(ds) << "\n"
            << "positives=" << pos << "\n"
            << "negatives=" << (n - pos) << "\n"
            << "oracle=" << (gosvm_dataset_has_oracle(ds) ? "yes" : "no")
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"order-restricted SVM toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  std::string out;
  int threads = 0;
  app.add_option("--seed", seed, "root random seed");
  app.add_option("--out", out, "output file or directory");
  app.add_option("--threads", threads, "worker threads (0 = hardware)");

  // ---- gen ----
  CLI::App* gen = app.add_subcommand("gen", "generate a dataset CSV");
  gen->require_subcommand(1);
  gen->fallthrough();

  gosvm_mackey_glass_config mg;
  gosvm_mackey_glass_config_default(&mg);
  long gen_n = 1000;
  CLI::App* gen_mg =
      gen->add_subcommand("mackey-glass", "delay chaotic series, embedded");
  gen_mg->add_option("--n", gen_n, "number of samples");
  gen_mg->add_option("--tau", mg.tau, "delay");
  gen_mg->add_option("--dt", mg.dt, "integration step");
  gen_mg->add_option("--sample-every", mg.sample_every, "steps per point");
  gen_mg->add_option("--x0", mg.x0, "constant history value");
  gen_mg->add_option("--beta", mg.beta, "production coefficient");
  gen_mg->add_option("--gamma", mg.gamma, "decay coefficient");
  gen_mg->add_option("--exponent", mg.exponent, "nonlinearity exponent");
  gen_mg->add_option("--horizon", mg.horizon, "prediction offset, points");
  gen_mg->add_option("--embed", mg.embed, "embedding length");

  gosvm_survival_config surv;
  gosvm_survival_config_default(&surv);
  bool fixed_horizon = false;
  CLI::App* gen_surv =
      gen->add_subcommand("survival", "synthetic survival-past-horizon data");
  gen_surv->add_option("--n", gen_n, "number of samples");
  gen_surv->add_option("--dim", surv.dim, "feature dimension");
  gen_surv->add_option("--noise", surv.noise, "log-time noise stddev");
  gen_surv->add_option("--censor-rate", surv.censor_rate,
                       "censoring rate (drawn but ignored)");
  gen_surv
      ->add_option("--horizon", surv.horizon,
                   "fixed prediction horizon (default: median event time)")
      ->trigger_on_parse();
  gen_surv->parse_complete_callback(
      [&] { fixed_horizon = gen_surv->count("--horizon") > 0; });

  // ---- train ----
  CLI::App* train = app.add_subcommand("train", "train and save a model");
  std::string train_data, train_model_path, train_format = "csv";
  std::string train_method = "gosvm", train_kernel = "linear",
              train_ordering = "global";
  gosvm_params params;
  gosvm_params_default(&params);
  double train_nu = 0.5;
  train->add_option("--data", train_data, "training dataset CSV")->required();
  train->add_option("--model", train_model_path, "output model path")
      ->required();
  train->add_option("--format", train_format, "data format: csv or digits");
  train->add_option("--method", train_method, "nusvm or gosvm");
  train->add_option("--kernel", train_kernel, "linear or rbf");
  train->add_option("--width", params.width, "rbf width");
  train->add_option("--nu", train_nu, "nu (nusvm)");
  train->add_option("--nu-b", params.nu_b, "classification nu (gosvm)");
  train->add_option("--nu-o", params.nu_o, "ordinal nu (gosvm)");
  train->add_option("--alpha", params.alpha, "loss balance (gosvm)");
  train->add_option("--ordering", train_ordering, "global or per-class");

  // ---- eval ----
  CLI::App* eval = app.add_subcommand("eval", "evaluate a saved model");
  std::string eval_data, eval_model_path, eval_format = "csv",
              eval_ordering = "global";
  eval->add_option("--model", eval_model_path, "model path")->required();
  eval->add_option("--data", eval_data, "dataset CSV")->required();
  eval->add_option("--format", eval_format, "data format: csv or digits");
  eval->add_option("--ordering", eval_ordering, "global or per-class");

  // ---- grid ----
  CLI::App* grid = app.add_subcommand("grid", "grid model selection");
  std::string grid_train, grid_valid, grid_extended, grid_format = "csv";
  std::string grid_kernel = "rbf", grid_ordering = "global";
  double grid_width = 1.0;
  std::vector<double> nu_b = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
  std::vector<double> nu_o = nu_b;
  std::vector<double> alpha = {0.1, 0.25, 0.5};
  std::vector<std::string> grid_strategies = {"unsmooth", "smoothed"};
  std::string grid_model_out;
  grid->add_option("--train", grid_train, "training dataset CSV")->required();
  grid->add_option("--valid", grid_valid, "validation dataset CSV")->required();
  grid->add_option("--extended", grid_extended,
                   "extended validation CSV (enables strategy extended)");
  grid->add_option("--format", grid_format, "data format: csv or digits");
  grid->add_option("--kernel", grid_kernel, "linear or rbf");
  grid->add_option("--width", grid_width, "rbf width");
  grid->add_option("--ordering", grid_ordering, "global or per-class");
  grid->add_option("--nu-b", nu_b, "nu_b axis values");
  grid->add_option("--nu-o", nu_o, "nu_o axis values");
  grid->add_option("--alpha", alpha, "alpha axis values");
  grid->add_option("--strategy", grid_strategies, "strategies to report");
  grid->add_option("--save-model", grid_model_out,
                   "save the first listed strategy's winning model here");

  // ---- bench ----
  CLI::App* bench = app.add_subcommand("bench", "run a benchmark config");
  std::string bench_config;
  bench->add_option("config", bench_config, "experiment config file")
      ->required();

  // ---- bounds ----
  CLI::App* bounds = app.add_subcommand("bounds", "emit bound-vs-n curves");
  gosvm_bound_params bp;
  gosvm_bound_params_default(&bp);
  double n_min = 10, n_max = 1e6, liso = 0.0, t_quarter = 100, t_half = 10000;
  int points = 50;
  bool fixed_phi = false;
  bounds->add_option("--v", bp.V, "level VC-dimension");
  bounds->add_option("--c", bp.C, "universal-constant stand-in");
  bounds->add_option("--delta", bp.delta1, "confidence delta (shared)")
      ->trigger_on_parse();
  bounds->add_option("--d", bp.d, "ordinal slack");
  bounds->add_option("--w", bp.w, "balance parameter");
  bounds->add_option("--multiplier", bp.ordering_multiplier,
                     "ordering shattering multiplier (2 or 4)");
  bounds->add_option("--phi", bp.phi, "fixed phi (default: schedule)")
      ->trigger_on_parse();
  bounds->parse_complete_callback(
      [&] { fixed_phi = bounds->count("--phi") > 0; });
  bounds->add_option("--liso", liso, "empirical ordering loss");
  bounds->add_option("--n-min", n_min, "smallest n");
  bounds->add_option("--n-max", n_max, "largest n");
  bounds->add_option("--points", points, "curve resolution");
  bounds->add_option("--t-quarter", t_quarter, "schedule crossover to n^-1/4");
  bounds->add_option("--t-half", t_half, "schedule crossover to n^-1/2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      gosvm_dataset* ds = nullptr;
      std::string path = out;
      if (gen_mg->parsed()) {
        if (path.empty()) path = "mackey-glass.csv";
        check(gosvm_gen_mackey_glass(&mg, gen_n, seed, &ds));
      } else {
        if (path.empty()) path = "survival.csv";
        check(gosvm_gen_survival(&surv, gen_n, fixed_horizon ? 0 : 1, seed,
                                 &ds));
      }
      DatasetPtr holder(ds, gosvm_dataset_free);
      check(gosvm_dataset_write(ds, path.c_str()));
      print_dataset_summary(ds, path);
    } else if (train->parsed()) {
      DatasetPtr ds = load_data(train_data, train_format);
      gosvm_model* m = nullptr;
      if (train_method == "nusvm") {
        check(gosvm_train_nusvm(ds.get(), train_nu,
                                parse_kernel(train_kernel), params.width, &m));
      } else if (train_method == "gosvm") {
        params.kernel = parse_kernel(train_kernel);
        params.ordering = parse_ordering(train_ordering);
        check(gosvm_train(ds.get(), &params, &m));
      } else {
        std::cerr << "error: method must be nusvm or gosvm\n";
        return 2;
      }
      ModelPtr holder(m, gosvm_model_free);
      check(gosvm_model_save(m, train_model_path.c_str()));
      std::cout << "model=" << train_model_path << "\n";
    } else if (eval->parsed()) {
      ModelPtr m = load_model(eval_model_path);
      DatasetPtr ds = load_data(eval_data, eval_format);
      gosvm_eval metrics;
      check(gosvm_model_evaluate(m.get(), ds.get(),
                                 parse_ordering(eval_ordering), &metrics));
      std::cout << "error=" << metrics.error << "\n";
      if (metrics.liso >= 0.0) std::cout << "liso=" << metrics.liso << "\n";
      std::cout << "balance=" << metrics.balance << "\n";
    } else if (grid->parsed()) {
      DatasetPtr train_ds = load_data(grid_train, grid_format);
      DatasetPtr valid_ds = load_data(grid_valid, grid_format);
      DatasetPtr ext_ds(nullptr, gosvm_dataset_free);
      if (!grid_extended.empty()) ext_ds = load_data(grid_extended, grid_format);
      gosvm_grid* g = nullptr;
      check(gosvm_grid_search(train_ds.get(), valid_ds.get(), nu_b.data(),
                              static_cast<long>(nu_b.size()), nu_o.data(),
                              static_cast<long>(nu_o.size()), alpha.data(),
                              static_cast<long>(alpha.size()),
                              parse_kernel(grid_kernel), grid_width,
                              parse_ordering(grid_ordering), &g));
      GridPtr holder(g, gosvm_grid_free);
      if (!out.empty()) {
        check(gosvm_grid_write_csv(g, out.c_str()));
        std::cout << "tensor=" << out << "\n";
      }
      bool first = true;
      for (const std::string& name : grid_strategies) {
        gosvm_grid_choice choice;
        check(gosvm_grid_select(g, parse_strategy(name), ext_ds.get(),
                                &choice));
        std::cout << name << ".nu_b=" << choice.nu_b << "\n"
                  << name << ".nu_o=" << choice.nu_o << "\n"
                  << name << ".alpha=" << choice.alpha << "\n"
                  << name << ".score=" << choice.score << "\n";
        if (first && !grid_model_out.empty()) {
          gosvm_model* best = nullptr;
          check(gosvm_grid_model(g, choice.i_nu_b, choice.i_nu_o,
                                 choice.i_alpha, &best));
          ModelPtr best_holder(best, gosvm_model_free);
          check(gosvm_model_save(best, grid_model_out.c_str()));
          std::cout << name << ".model=" << grid_model_out << "\n";
        }
        first = false;
      }
    } else if (bench->parsed()) {
      gosvm_bench_overrides ov{};
      ov.has_seed = app.count("--seed") > 0;
      ov.seed = seed;
      ov.has_threads = app.count("--threads") > 0;
      ov.threads = threads;
      ov.out_dir = out.empty() ? nullptr : out.c_str();
      gosvm_bench_result* r = nullptr;
      check(gosvm_bench_run(bench_config.c_str(), &ov, &r));
      std::unique_ptr<gosvm_bench_result, void (*)(gosvm_bench_result*)>
          holder(r, gosvm_bench_result_free);
      const std::filesystem::path dir(gosvm_bench_result_out_dir(r));
      std::filesystem::create_directories(dir);
      const std::string base = gosvm_bench_result_name(r);
      const auto csv_path = dir / (base + "_results.csv");
      const auto table_path = dir / (base + "_summary.txt");
      std::ofstream csv(csv_path);
      csv << gosvm_bench_result_csv(r);
      std::ofstream table(table_path);
      table << gosvm_bench_result_table(r);
      if (!csv || !table) throw CliError{"failed writing result files"};
      std::cout << gosvm_bench_result_table(r);
      std::cout << "results=" << csv_path.string() << "\n"
                << "summary=" << table_path.string() << "\n";
    } else if (bounds->parsed()) {
      bp.delta2 = bp.delta1;
      bp.delta3 = bp.delta1;
      std::ostream* os = &std::cout;
      std::ofstream file;
      if (!out.empty()) {
        file.open(out);
        if (!file) throw CliError{"cannot open for writing: " + out};
        os = &file;
      }
      *os << "n,phi,ordinal_bound,main_bound,epsilon\n";
      const double lmin = std::log(n_min), lmax = std::log(n_max);
      for (int i = 0; i < points; ++i) {
        const double frac = points > 1 ? static_cast<double>(i) / (points - 1) : 0.0;
        bp.n = std::exp(lmin + frac * (lmax - lmin));
        if (!fixed_phi)
          check(gosvm_phi_schedule(bp.n, t_quarter, t_half, &bp.phi));
        double ob = 0, mb = 0, eps = 0;
        check(gosvm_ordinal_bound(&bp, liso, &ob));
        check(gosvm_main_bound(&bp, &mb));
        check(gosvm_appendix_epsilon(&bp, &eps));
        *os << bp.n << ',' << bp.phi << ',' << ob << ',' << mb << ',' << eps
            << "\n";
      }
      if (!out.empty() && !file) throw CliError{"write failed: " + out};
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
