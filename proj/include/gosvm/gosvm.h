/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

/*
 * C interface to the GO-SVM library: binary classifiers whose hypothesis
 * space is empirically restricted by a privileged ordering of the training
 * examples.
 *
 * Conventions:
 *   - Every fallible call returns a gosvm_status (GOSVM_OK == 0 on success)
 *     and writes results through out-parameters.
 *   - On failure, gosvm_last_error() returns a thread-local description of
 *     the most recent error on the calling thread.
 *   - Objects returned through handle out-parameters are owned by the caller
 *     and released with the matching *_free function.  Freeing NULL is a
 *     no-op.
 *   - Config structs are initialised with their *_default function before
 *     overriding fields.
 */
#ifndef GOSVM_GOSVM_H
#define GOSVM_GOSVM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gosvm_status {
  GOSVM_OK = 0,
  GOSVM_E_PARSE = 1,
  GOSVM_E_IO = 2,
  GOSVM_E_DIMENSION_MISMATCH = 3,
  GOSVM_E_INSUFFICIENT_DATA = 4,
  GOSVM_E_MISSING_ORACLE = 5,
  GOSVM_E_EMPTY_CLASS = 6,
  GOSVM_E_DEGENERATE_DATA = 7,
  GOSVM_E_DUPLICATE_ORACLE = 8,
  GOSVM_E_TOO_LARGE = 9,
  GOSVM_E_INVALID_INTERVALS = 10,
  GOSVM_E_NON_POSITIVE_WEIGHT = 11,
  GOSVM_E_INFEASIBLE_NU = 12,
  GOSVM_E_INFEASIBLE_PARAMS = 13,
  GOSVM_E_INVALID_CONFIG = 14,
  GOSVM_E_SERIES_TOO_SHORT = 15,
  GOSVM_E_MISSING_EXTENDED_SET = 16,
  GOSVM_E_ILL_CONDITIONED = 17,
  GOSVM_E_VERIFICATION_FAILED = 18,
  GOSVM_E_INVALID_ARGUMENT = 19,
  GOSVM_E_UNKNOWN = 100
} gosvm_status;

/* Thread-local message for the last failing call on this thread. */
const char* gosvm_last_error(void);
const char* gosvm_status_name(int status);

/* ------------------------------------------------------------------ */
/* Datasets                                                            */
/* ------------------------------------------------------------------ */

typedef struct gosvm_dataset gosvm_dataset;

/* x is row-major n x d; y entries are -1/+1; oracle may be NULL. */
int gosvm_dataset_create(const double* x, const int* y, const double* oracle,
                         long n, long d, gosvm_dataset** out);
/* CSV with header f0,...,f{d-1},label[,oracle]. */
int gosvm_dataset_read(const char* path, gosvm_dataset** out);
int gosvm_dataset_write(const gosvm_dataset* ds, const char* path);
/* Digit-recognition export: p0..p99 pixel columns, label, confidence. */
int gosvm_dataset_read_digits(const char* path, gosvm_dataset** out);

long gosvm_dataset_size(const gosvm_dataset* ds);
long gosvm_dataset_dim(const gosvm_dataset* ds);
int gosvm_dataset_has_oracle(const gosvm_dataset* ds);
long gosvm_dataset_positives(const gosvm_dataset* ds);
void gosvm_dataset_free(gosvm_dataset* ds);

/* ------------------------------------------------------------------ */
/* Generators                                                          */
/* ------------------------------------------------------------------ */

typedef struct gosvm_mackey_glass_config {
  double tau;       /* delay, an integer multiple of dt */
  double dt;        /* integration step */
  int sample_every; /* steps per emitted point */
  double x0;        /* constant history */
  double beta, gamma;
  int exponent;
  int horizon; /* prediction offset, emitted points */
  int embed;   /* embedding length */
} gosvm_mackey_glass_config;

void gosvm_mackey_glass_config_default(gosvm_mackey_glass_config* cfg);

/* Emits n embedded samples (label: series rises over the horizon; oracle:
 * magnitude of the move). */
int gosvm_gen_mackey_glass(const gosvm_mackey_glass_config* cfg, long n,
                           uint64_t seed, gosvm_dataset** out);

typedef struct gosvm_survival_config {
  int dim;
  double noise;
  double horizon;     /* ignored when median_horizon is nonzero */
  double censor_rate; /* drawn but ignored; kept for stream stability */
} gosvm_survival_config;

void gosvm_survival_config_default(gosvm_survival_config* cfg);

/* Labels survival past the horizon; median_horizon != 0 balances classes by
 * setting the horizon to the median event time. */
int gosvm_gen_survival(const gosvm_survival_config* cfg, long n,
                       int median_horizon, uint64_t seed, gosvm_dataset** out);

/* ------------------------------------------------------------------ */
/* Training and evaluation                                             */
/* ------------------------------------------------------------------ */

enum { GOSVM_KERNEL_LINEAR = 0, GOSVM_KERNEL_RBF = 1 };
enum { GOSVM_ORDERING_GLOBAL = 0, GOSVM_ORDERING_PER_CLASS = 1 };

typedef struct gosvm_params {
  double nu_b;  /* classification margin control, (0, 2 min(n+,n-)/n] */
  double nu_o;  /* ordinal margin control, [0, 1] */
  double alpha; /* loss balance, [0, 1]; 1 = pure classification */
  int kernel;   /* GOSVM_KERNEL_* */
  double width; /* rbf width; ignored for linear */
  int ordering; /* GOSVM_ORDERING_* */
} gosvm_params;

void gosvm_params_default(gosvm_params* p);

typedef struct gosvm_model gosvm_model;

int gosvm_train_nusvm(const gosvm_dataset* train, double nu, int kernel,
                      double width, gosvm_model** out);
int gosvm_train(const gosvm_dataset* train, const gosvm_params* p,
                gosvm_model** out);

/* Structured-text model file; load sniffs the model kind. */
int gosvm_model_save(const gosvm_model* m, const char* path);
int gosvm_model_load(const char* path, gosvm_model** out);

/* Decision values for row-major n x d inputs. */
int gosvm_model_predict(const gosvm_model* m, const double* x, long n, long d,
                        double* out_scores);

typedef struct gosvm_eval {
  double error;   /* mean 0/1 error */
  double liso;    /* empirical ordering loss; -1 when no oracle present */
  double balance; /* signed class-conditional loss balance at w = 1 */
} gosvm_eval;

int gosvm_model_evaluate(const gosvm_model* m, const gosvm_dataset* test,
                         int ordering, gosvm_eval* out);
void gosvm_model_free(gosvm_model* m);

/* ------------------------------------------------------------------ */
/* Grid model selection                                                */
/* ------------------------------------------------------------------ */

enum {
  GOSVM_SELECT_UNSMOOTH = 0,
  GOSVM_SELECT_SMOOTHED = 1,
  GOSVM_SELECT_EXTENDED = 2
};

typedef struct gosvm_grid gosvm_grid;

/* One GO-SVM fit per (nu_b, nu_o, alpha) node; infeasible nodes become
 * failed cells with validation error pinned to 1. */
int gosvm_grid_search(const gosvm_dataset* train, const gosvm_dataset* valid,
                      const double* nu_b, long n_nu_b, const double* nu_o,
                      long n_nu_o, const double* alpha, long n_alpha,
                      int kernel, double width, int ordering,
                      gosvm_grid** out);

typedef struct gosvm_grid_choice {
  long i_nu_b, i_nu_o, i_alpha;
  double nu_b, nu_o, alpha;
  double score; /* validation score that won the argmin */
} gosvm_grid_choice;

/* extended may be NULL except for GOSVM_SELECT_EXTENDED. */
int gosvm_grid_select(const gosvm_grid* g, int strategy,
                      const gosvm_dataset* extended, gosvm_grid_choice* out);
/* Clones the trained model at a cell; fails for cells that did not train. */
int gosvm_grid_model(const gosvm_grid* g, long i_nu_b, long i_nu_o,
                     long i_alpha, gosvm_model** out);
/* i_nub,i_nuo,i_alpha,nu_b,nu_o,alpha,error,status audit dump. */
int gosvm_grid_write_csv(const gosvm_grid* g, const char* path);
void gosvm_grid_free(gosvm_grid* g);

/* ------------------------------------------------------------------ */
/* Benchmark harness                                                   */
/* ------------------------------------------------------------------ */

typedef struct gosvm_bench_result gosvm_bench_result;

/* Command-line style overrides on top of the config file; the has_* flags
 * select which fields apply.  A NULL pointer means no overrides. */
typedef struct gosvm_bench_overrides {
  int has_seed;
  uint64_t seed;
  int has_threads;
  int threads;
  const char* out_dir; /* NULL keeps the config's output directory */
} gosvm_bench_overrides;

/* Runs the full protocol described by a sectioned key=value config file. */
int gosvm_bench_run(const char* config_path,
                    const gosvm_bench_overrides* overrides,
                    gosvm_bench_result** out);

const char* gosvm_bench_result_name(const gosvm_bench_result* r);
const char* gosvm_bench_result_out_dir(const gosvm_bench_result* r);
/* experiment,method,strategy,realization,error rows. */
const char* gosvm_bench_result_csv(const gosvm_bench_result* r);
/* Fixed-width mean (stddev) table. */
const char* gosvm_bench_result_table(const gosvm_bench_result* r);
void gosvm_bench_result_free(gosvm_bench_result* r);

/* ------------------------------------------------------------------ */
/* Risk-bound evaluators                                               */
/* ------------------------------------------------------------------ */

typedef struct gosvm_bound_params {
  int V;    /* level VC-dimension */
  double n; /* sample size */
  double C; /* universal-constant stand-in (non-rigorous) */
  double delta1, delta2, delta3;
  double d; /* ordinal slack */
  double w; /* balance parameter */
  double phi;
  int ordering_multiplier; /* 2 single ordering, 4 per-class */
} gosvm_bound_params;

void gosvm_bound_params_default(gosvm_bound_params* p);

int gosvm_ordinal_bound(const gosvm_bound_params* p, double empirical_liso,
                        double* out);
int gosvm_main_bound(const gosvm_bound_params* p, double* out);
int gosvm_phi_schedule(double n, double t_quarter, double t_half, double* out);
int gosvm_appendix_epsilon(const gosvm_bound_params* p, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GOSVM_GOSVM_H */
