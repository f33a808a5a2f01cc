/*
   Copyright 2026 The dzhcp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DZHCP_DZHCP_H
#define DZHCP_DZHCP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DZHCP_BUILDING_LIBRARY)
#    define DZHCP_API __declspec(dllexport)
#  else
#    define DZHCP_API __declspec(dllimport)
#  endif
#else
#  define DZHCP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dzhcp_status {
    DZHCP_OK = 0,
    DZHCP_ERR_DOMAIN = 1,
    DZHCP_ERR_RESOURCE = 2,
    DZHCP_ERR_CONVERGENCE = 3,
    DZHCP_ERR_ACCEPTANCE = 4,
    DZHCP_ERR_INVALID_ARGUMENT = 5,
    DZHCP_ERR_IO = 6,
    DZHCP_ERR_INTERNAL = 7
} dzhcp_status;

typedef enum dzhcp_process {
    DZHCP_TYPE_I = 0,
    DZHCP_TYPE_II = 1,
    DZHCP_MATERN_I = 2,
    DZHCP_MATERN_II = 3
} dzhcp_process;

/* Kernel branch of a pair configuration. */
typedef enum dzhcp_region {
    DZHCP_REGION_SUPPRESSED = 0,      /* kernel 0 */
    DZHCP_REGION_SURVIVES = 1,        /* Type I: exp(-lambda_p V) */
    DZHCP_REGION_DOUBLE_SURVIVAL = 2, /* Type II: 2 eta */
    DZHCP_REGION_SINGLE_SURVIVAL = 3  /* Type II: eta */
} dzhcp_region;

typedef struct dzhcp_params dzhcp_params;
typedef struct dzhcp_realization dzhcp_realization;

typedef struct dzhcp_quad_spec {
    double r_max; /* <= 0 selects 10 R_cs */
    int n_r;
    int n_beta;
    int n_theta;
    double rel_tol;
    int tail_correction;
    int max_depth;
} dzhcp_quad_spec;

typedef struct dzhcp_window {
    int disk;      /* 0 square, 1 disk */
    double extent; /* side or diameter [m] */
    double guard;  /* < 0 selects the minimum guard */
} dzhcp_window;

typedef struct dzhcp_estimate {
    double mean;
    double std_error;
    double ci_low;
    double ci_high;
    uint64_t n_effective;
    uint64_t seed;
} dzhcp_estimate;

typedef struct dzhcp_interference {
    double mean_interference;
    double misr;
    double gain;
    double integral;
    double tail;
    double quad_error;
    int levels;
} dzhcp_interference;

typedef struct dzhcp_pair {
    double x;
    double y;
    double theta;
    double mark;
    int active; /* access indicator e */
} dzhcp_pair;

/* Message of the last failed call on this thread; empty after success. */
DZHCP_API const char* dzhcp_last_error(void);
DZHCP_API const char* dzhcp_version(void);

/* 0 uses the hardware concurrency. */
DZHCP_API void dzhcp_set_threads(unsigned threads);

DZHCP_API dzhcp_status dzhcp_process_parse(const char* name, dzhcp_process* out);
DZHCP_API const char* dzhcp_process_name(dzhcp_process process);

/* Parameters start at the reference configuration. Keys: lambda_p, R_tx,
   R_cs, d, P_t (W), A, alpha, T (linear), r_0. */
DZHCP_API dzhcp_params* dzhcp_params_create(void);
DZHCP_API dzhcp_params* dzhcp_params_clone(const dzhcp_params* params);
DZHCP_API void dzhcp_params_destroy(dzhcp_params* params);
DZHCP_API dzhcp_status dzhcp_params_set(dzhcp_params* params, const char* key, double value);
DZHCP_API dzhcp_status dzhcp_params_get(const dzhcp_params* params, const char* key, double* out);
DZHCP_API dzhcp_status dzhcp_params_validate(const dzhcp_params* params);

DZHCP_API void dzhcp_quad_spec_default(const dzhcp_params* params, dzhcp_quad_spec* out);
DZHCP_API void dzhcp_window_default(dzhcp_window* out);

DZHCP_API double dzhcp_dbm_to_watt(double dbm);
DZHCP_API double dzhcp_db_to_linear(double db);

/* Geometry. */
DZHCP_API dzhcp_status dzhcp_lens_area(double r1, double r2, double separation, double* out);
DZHCP_API dzhcp_status dzhcp_exclusion_area(const dzhcp_params* params, double* out);
DZHCP_API dzhcp_status dzhcp_combined_area(const dzhcp_params* params, double r, double beta,
                                           double theta, double* out);
/* centers: n (x, y) pairs; radii: n values. */
DZHCP_API dzhcp_status dzhcp_union_area(const double* centers, const double* radii, size_t n,
                                        double* out);
DZHCP_API dzhcp_status dzhcp_classify(const dzhcp_params* params, dzhcp_process process, double r,
                                      double beta, double theta, dzhcp_region* out);

/* Analytics. */
DZHCP_API dzhcp_status dzhcp_intensity(const dzhcp_params* params, dzhcp_process process, double* out);
DZHCP_API dzhcp_status dzhcp_intensity_for_area(dzhcp_process process, double lambda_p, double area,
                                                double* out);
DZHCP_API dzhcp_status dzhcp_retention_area(const dzhcp_params* params, dzhcp_process process,
                                            double* out);
DZHCP_API dzhcp_status dzhcp_eta(double v, double v_o, double lambda_p, double* out);
DZHCP_API dzhcp_status dzhcp_kernel(const dzhcp_params* params, dzhcp_process process, double r,
                                    double beta, double theta, double* out);
/* spec may be NULL for defaults. */
DZHCP_API dzhcp_status dzhcp_mean_interference(const dzhcp_params* params, dzhcp_process process,
                                               const dzhcp_quad_spec* spec, dzhcp_interference* out);
DZHCP_API dzhcp_status dzhcp_success_ppp(double threshold, double alpha, double* out);
DZHCP_API dzhcp_status dzhcp_success_ppp_integral(double threshold, double alpha, double* out);
DZHCP_API dzhcp_status dzhcp_success_from_gain(double threshold, double gain, double alpha, double* out);
/* Uses the threshold T stored in params. */
DZHCP_API dzhcp_status dzhcp_success(const dzhcp_params* params, dzhcp_process process,
                                     const dzhcp_quad_spec* spec, double* out);

/* Realizations. */
DZHCP_API dzhcp_status dzhcp_realization_sample(const dzhcp_params* params, const dzhcp_window* window,
                                                uint64_t seed, uint64_t replication,
                                                dzhcp_realization** out);
/* Sets the access indicator of every pair in place. */
DZHCP_API dzhcp_status dzhcp_realization_mark(dzhcp_realization* realization,
                                              const dzhcp_params* params, dzhcp_process process);
/* New realization holding the retained pairs only. */
DZHCP_API dzhcp_status dzhcp_realization_thin(const dzhcp_realization* in, const dzhcp_params* params,
                                              dzhcp_process process, dzhcp_realization** out);
DZHCP_API void dzhcp_realization_destroy(dzhcp_realization* realization);
DZHCP_API size_t dzhcp_realization_size(const dzhcp_realization* realization);
DZHCP_API dzhcp_status dzhcp_realization_get(const dzhcp_realization* realization, size_t index,
                                             dzhcp_pair* out);
/* "-" writes to stdout. */
DZHCP_API dzhcp_status dzhcp_realization_write_csv(const dzhcp_realization* realization,
                                                   const char* path);

/* Monte Carlo. window may be NULL for defaults. */
DZHCP_API dzhcp_status dzhcp_mc_intensity(const dzhcp_params* params, dzhcp_process process,
                                          const dzhcp_window* window, uint64_t n_reps, uint64_t seed,
                                          dzhcp_estimate* out);
/* acceptance may be NULL. */
DZHCP_API dzhcp_status dzhcp_mc_palm_interference(const dzhcp_params* params, dzhcp_process process,
                                                  const dzhcp_window* window, uint64_t n_accepted,
                                                  uint64_t seed, dzhcp_estimate* out,
                                                  dzhcp_estimate* acceptance);
/* out receives n_thresholds estimates. */
DZHCP_API dzhcp_status dzhcp_mc_success(const dzhcp_params* params, dzhcp_process process,
                                        const double* thresholds, size_t n_thresholds,
                                        const dzhcp_window* window, uint64_t n_accepted,
                                        uint64_t seed, dzhcp_estimate* out);
DZHCP_API dzhcp_status dzhcp_mc_two_pair(const dzhcp_params* params, dzhcp_process process, double r,
                                         double beta, double theta, uint64_t n_reps, uint64_t seed,
                                         dzhcp_estimate* out);

#ifdef __cplusplus
}
#endif

#endif /* DZHCP_DZHCP_H */
