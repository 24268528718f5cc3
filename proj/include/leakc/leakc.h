// Copyright 2026 The leakc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// C interface to leakc. Every function that can fail returns an lk_status;
// on failure lk_last_error() describes the problem for the calling thread.
// Objects are opaque and released with their matching *_free function.

#ifndef LEAKC_LEAKC_H_
#define LEAKC_LEAKC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LEAKC_API __declspec(dllexport)
#else
#define LEAKC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lk_status {
  LK_OK = 0,
  LK_NEGATIVE_ENTRY = 1,
  LK_SUM_OUT_OF_TOLERANCE = 2,
  LK_EMPTY_VECTOR = 3,
  LK_LENGTH_MISMATCH = 4,
  LK_ALL_LIKELIHOODS_ZERO = 5,
  LK_COUNT_MISMATCH = 6,
  LK_ALPHA_OUT_OF_RANGE = 7,
  LK_DOMAIN_ERROR = 8,
  LK_ZERO_PRIOR_REALISATION = 9,
  LK_NUMERICALLY_SINGULAR = 10,
  LK_SHAPE_MISMATCH = 11,
  LK_SIZE_LIMIT = 12,
  LK_INFINITE_LEAKAGE = 13,
  LK_SINGLE_CLASS = 14,
  LK_INSUFFICIENT_POINTS = 15,
  LK_NON_POSITIVE_GAP = 16,
  LK_INVALID_ARGUMENT = 17,
  LK_PARSE_ERROR = 18,
  LK_IO_ERROR = 19,
  LK_INTERNAL_ERROR = 100
} lk_status;

typedef enum lk_rate_mode {
  LK_RATE_GLOBAL_GAP = 0,
  LK_RATE_POINTWISE_L1 = 1
} lk_rate_mode;

typedef struct lk_system lk_system;
typedef struct lk_metric lk_metric;
typedef struct lk_dist lk_dist;
typedef struct lk_type_table lk_type_table;

typedef struct lk_rate_fit {
  double slope;
  double intercept;
  double r_squared;
  size_t points_used;
  double c_min;
  double relative_error;
} lk_rate_fit;

LEAKC_API const char* lk_version(void);
LEAKC_API const char* lk_status_name(lk_status status);
// Message of the last failure on this thread; "" after a success.
LEAKC_API const char* lk_last_error(void);
// Caps internal worker threads; 0 restores the hardware default.
LEAKC_API void lk_set_threads(unsigned threads);
LEAKC_API void lk_string_free(char* str);

// Systems.
LEAKC_API lk_status lk_system_from_json(const char* json, lk_system** out);
LEAKC_API lk_status lk_system_builtin(const char* name, lk_system** out);
LEAKC_API lk_status lk_system_to_json(const lk_system* sys, char** out);
LEAKC_API void lk_system_free(lk_system* sys);
LEAKC_API size_t lk_system_num_x(const lk_system* sys);
LEAKC_API size_t lk_system_num_y(const lk_system* sys);
LEAKC_API double lk_system_prior(const lk_system* sys, size_t x);
// Borrowed; valid while `sys` lives. NULL for an out-of-range index.
LEAKC_API const char* lk_system_x_label(const lk_system* sys, size_t x);
LEAKC_API const char* lk_system_y_label(const lk_system* sys, size_t y);
// Groups identical channel rows. `mapping` (length num_x) receives the
// class of each x and may be NULL.
LEAKC_API lk_status lk_system_merge(const lk_system* sys, double tol,
                                    lk_system** merged, size_t* mapping);

// Metrics.
LEAKC_API lk_status lk_metric_from_json(const char* json, lk_metric** out);
LEAKC_API lk_status lk_metric_to_json(const lk_metric* m, char** out);
LEAKC_API size_t lk_catalog_size(void);
// Entry `index` of the default catalog for an alphabet of `num_x` secrets.
LEAKC_API lk_status lk_catalog_metric(size_t num_x, size_t index,
                                      lk_metric** out);
// Borrowed; valid while `m` lives.
LEAKC_API const char* lk_metric_name(const lk_metric* m);
LEAKC_API void lk_metric_free(lk_metric* m);

// Pointwise leakage per type class of n observations.
LEAKC_API lk_status lk_pointwise_by_type(const lk_metric* m,
                                         const lk_system* sys, uint64_t n,
                                         lk_type_table** out);
LEAKC_API size_t lk_type_table_size(const lk_type_table* t);
// `counts` receives num_y entries and may be NULL.
LEAKC_API lk_status lk_type_table_row(const lk_type_table* t, size_t row,
                                      uint32_t* counts, double* prob,
                                      double* leakage);
LEAKC_API void lk_type_table_free(lk_type_table* t);

// Global leakage in bits.
LEAKC_API lk_status lk_global_leakage(const lk_metric* m, const lk_system* sys,
                                      uint64_t n, double* out);
LEAKC_API lk_status lk_global_limit(const lk_metric* m, const lk_system* sys,
                                    double* out);
LEAKC_API lk_status lk_global_gap(const lk_metric* m, const lk_system* sys,
                                  uint64_t n, double* out);
LEAKC_API lk_status lk_information_value(const lk_metric* m,
                                         const lk_system* sys, size_t x,
                                         double* out);

// Leakage distributions.
LEAKC_API lk_status lk_pointwise_distribution(const lk_metric* m,
                                              const lk_system* sys, uint64_t n,
                                              lk_dist** out);
LEAKC_API lk_status lk_limit_distribution(const lk_metric* m,
                                          const lk_system* sys, lk_dist** out);
LEAKC_API lk_status lk_simulate(const lk_metric* m, const lk_system* sys,
                                uint64_t n, uint64_t trials, uint64_t seed,
                                lk_dist** out);
LEAKC_API size_t lk_dist_size(const lk_dist* d);
LEAKC_API double lk_dist_value(const lk_dist* d, size_t i);
LEAKC_API double lk_dist_prob(const lk_dist* d, size_t i);
LEAKC_API double lk_dist_cdf(const lk_dist* d, double l);
LEAKC_API void lk_dist_free(lk_dist* d);
LEAKC_API lk_status lk_l1_distance(const lk_dist* a, const lk_dist* b,
                                   double* out);
LEAKC_API lk_status lk_ks_distance(const lk_dist* a, const lk_dist* b,
                                   double* out);

// Chernoff information in bits.
LEAKC_API lk_status lk_chernoff(const double* p1, const double* p2, size_t len,
                                double* information, double* lambda);
// `matrix` receives num_x * num_x entries in row-major order.
LEAKC_API lk_status lk_chernoff_matrix(const lk_system* sys, double* matrix,
                                       double* min_value, size_t* x,
                                       size_t* x_prime);

// Fits log2(gap) against n over [window_lo, window_hi]; `gaps` receives
// `count` entries.
LEAKC_API lk_status lk_rate_experiment(const lk_metric* m, const lk_system* sys,
                                       const uint64_t* ns, size_t count,
                                       lk_rate_mode mode, uint64_t window_lo,
                                       uint64_t window_hi, double* gaps,
                                       lk_rate_fit* fit);

// Runs the axiom, derivative, h-convexity and data-processing checks on the
// system prior. `report_json` is released with lk_string_free.
LEAKC_API lk_status lk_verify(const lk_metric* m, const lk_system* sys,
                              uint64_t seed, char** report_json, int* all_pass,
                              int* any_fail);

LEAKC_API lk_status lk_bayes_error(const lk_system* sys, uint64_t n,
                                   double* out);
LEAKC_API lk_status lk_min_entropy_identity(const lk_system* sys, uint64_t n,
                                            double* leakage,
                                            double* success_log_ratio,
                                            double* abs_diff);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // LEAKC_LEAKC_H_
