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

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "json.hpp"
#include "leakc/adversary.h"
#include "leakc/axioms.h"
#include "leakc/chernoff.h"
#include "leakc/composition.h"
#include "leakc/error.h"
#include "leakc/io.h"
#include "leakc/leakc.h"
#include "leakc/threads.h"

struct lk_system {
  leakc::System value;
};

struct lk_metric {
  leakc::MetricSpec value;
  std::string name;
};

struct lk_dist {
  leakc::LeakageDistribution value;
};

struct lk_type_table {
  std::vector<leakc::TypeLeakage> rows;
};

namespace {

thread_local std::string last_error;

template <typename Fn>
lk_status Guard(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return LK_OK;
  } catch (const leakc::Error& e) {
    last_error = e.what();
    return static_cast<lk_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LK_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LK_INTERNAL_ERROR;
  }
}

void RequireNonNull(const void* ptr, const char* what) {
  if (ptr == nullptr) {
    throw leakc::Error(leakc::ErrorCode::kInvalidArgument,
                       std::string(what) + " must not be NULL");
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lk_metric* NewMetric(leakc::MetricSpec m) {
  std::string name = m.Name();
  return new lk_metric{std::move(m), std::move(name)};
}

}  // namespace

extern "C" {

const char* lk_version(void) { return "0.1.0"; }

const char* lk_status_name(lk_status status) {
  if (status == LK_INTERNAL_ERROR) return "InternalError";
  return leakc::ErrorCodeName(static_cast<leakc::ErrorCode>(status)).data();
}

const char* lk_last_error(void) { return last_error.c_str(); }

void lk_set_threads(unsigned threads) { leakc::SetThreadLimit(threads); }

void lk_string_free(char* str) { std::free(str); }

lk_status lk_system_from_json(const char* json, lk_system** out) {
  return Guard([&] {
    RequireNonNull(json, "json");
    RequireNonNull(out, "out");
    *out = new lk_system{leakc::SystemFromJson(json)};
  });
}

lk_status lk_system_builtin(const char* name, lk_system** out) {
  return Guard([&] {
    RequireNonNull(name, "name");
    RequireNonNull(out, "out");
    *out = new lk_system{leakc::BuiltinSystem(name)};
  });
}

lk_status lk_system_to_json(const lk_system* sys, char** out) {
  return Guard([&] {
    RequireNonNull(sys, "sys");
    RequireNonNull(out, "out");
    *out = CopyString(leakc::SystemToJson(sys->value));
  });
}

void lk_system_free(lk_system* sys) { delete sys; }

size_t lk_system_num_x(const lk_system* sys) {
  return sys == nullptr ? 0 : sys->value.num_x();
}

size_t lk_system_num_y(const lk_system* sys) {
  return sys == nullptr ? 0 : sys->value.num_y();
}

double lk_system_prior(const lk_system* sys, size_t x) {
  if (sys == nullptr || x >= sys->value.num_x()) return 0.0;
  return sys->value.prior()[x];
}

const char* lk_system_x_label(const lk_system* sys, size_t x) {
  if (sys == nullptr || x >= sys->value.num_x()) return nullptr;
  return sys->value.x_labels()[x].c_str();
}

const char* lk_system_y_label(const lk_system* sys, size_t y) {
  if (sys == nullptr || y >= sys->value.num_y()) return nullptr;
  return sys->value.y_labels()[y].c_str();
}

lk_status lk_system_merge(const lk_system* sys, double tol, lk_system** merged,
                          size_t* mapping) {
  return Guard([&] {
    RequireNonNull(sys, "sys");
    RequireNonNull(merged, "merged");
    leakc::MergedSystem result = leakc::MergeEquivalentRows(sys->value, tol);
    if (mapping != nullptr) {
      for (size_t x = 0; x < result.mapping.size(); ++x) {
        mapping[x] = result.mapping[x];
      }
    }
    *merged = new lk_system{std::move(result.system)};
  });
}

lk_status lk_metric_from_json(const char* json, lk_metric** out) {
  return Guard([&] {
    RequireNonNull(json, "json");
    RequireNonNull(out, "out");
    *out = NewMetric(leakc::MetricFromJson(json));
  });
}

lk_status lk_metric_to_json(const lk_metric* m, char** out) {
  return Guard([&] {
    RequireNonNull(m, "m");
    RequireNonNull(out, "out");
    *out = CopyString(leakc::MetricToJson(m->value));
  });
}

size_t lk_catalog_size(void) { return leakc::DefaultCatalog(1).size(); }

lk_status lk_catalog_metric(size_t num_x, size_t index, lk_metric** out) {
  return Guard([&] {
    RequireNonNull(out, "out");
    std::vector<leakc::MetricSpec> catalog = leakc::DefaultCatalog(num_x);
    if (index >= catalog.size()) {
      throw leakc::Error(leakc::ErrorCode::kInvalidArgument,
                         "catalog index out of range");
    }
    *out = NewMetric(std::move(catalog[index]));
  });
}

const char* lk_metric_name(const lk_metric* m) {
  return m == nullptr ? nullptr : m->name.c_str();
}

void lk_metric_free(lk_metric* m) { delete m; }

lk_status lk_pointwise_by_type(const lk_metric* m, const lk_system* sys,
                               uint64_t n, lk_type_table** out) {
  return Guard([&] {
    RequireNonNull(m, "m");
    RequireNonNull(sys, "sys");
    RequireNonNull(out, "out");
    *out = new lk_type_table{leakc::PointwiseByType(m->value, sys->value, n)};
  });
}

size_t lk_type_table_size(const lk_type_table* t) {
  return t == nullptr ? 0 : t->rows.size();
}

lk_status lk_type_table_row(const lk_type_table* t, size_t row,
                            uint32_t* counts, double* prob, double* leakage) {
  return Guard([&] {
    RequireNonNull(t, "t");
    if (row >= t->rows.size()) {
      throw leakc::Error(leakc::ErrorCode::kInvalidArgument,
                         "type table row out of range");
    }
    const leakc::TypeLeakage& r = t->rows[row];
    if (counts != nullptr) {
      for (size_t y = 0; y < r.type.size(); ++y) counts[y] = r.type[y];
    }
    if (prob != nullptr) *prob = r.prob;
    if (leakage != nullptr) *leakage = r.leakage;
  });
}

void lk_type_table_free(lk_type_table* t) { delete t; }

lk_status lk_global_leakage(const lk_metric* m, const lk_system* sys,
                            uint64_t n, double* out) {
  return Guard([&] {
    RequireNonNull(m, "m");
    RequireNonNull(sys, "sys");
    RequireNonNull(out, "out");
    *out = leakc::ExactGlobalLeakage(m->value, sys->value, n);
  });
}

lk_status lk_global_limit(const lk_metric* m, const lk_system* sys,
                          double* out) {
  return Guard([&] {
    RequireNonNull(m, "m");
    RequireNonNull(sys, "sys");
    RequireNonNull(out, "out");
    *out = leakc::GlobalLimit(m->value, sys->value);
  });
}

lk_status lk_global_gap(const lk_metric* m, const lk_system* sys, uint64_t n,
                        double* out) {
  return Guard([&] {
    RequireNonNull(m, "m");
    RequireNonNull(sys, "sys");
    RequireNonNull(out, "out");
    *out = leakc::GlobalGap(m->value, sys->value, n);
  });
}

lk_status lk_information_value(const lk_metric* m, const lk_system* sys,
                               size_t x, double* out) {
  return Guard([&] {
    RequireNonNull(m, "m");
    RequireNonNull(sys, "sys");
    RequireNonNull(out, "out");
    *out = leakc::InformationValue(m->value, x, sys->value.prior());
  });
}

lk_status lk_pointwise_distribution(const lk_metric* m, const lk_system* sys,
                                    uint64_t n, lk_dist** out) {
  return Guard([&] {
    RequireNonNull(m, "m");
    RequireNonNull(sys, "sys");
    RequireNonNull(out, "out");
    *out =
        new lk_dist{leakc::ExactPointwiseDistribution(m->value, sys->value, n)};
  });
}

lk_status lk_limit_distribution(const lk_metric* m, const lk_system* sys,
                                lk_dist** out) {
  return Guard([&] {
    RequireNonNull(m, "m");
    RequireNonNull(sys, "sys");
    RequireNonNull(out, "out");
    *out = new lk_dist{leakc::LimitDistribution(m->value, sys->value)};
  });
}

lk_status lk_simulate(const lk_metric* m, const lk_system* sys, uint64_t n,
                      uint64_t trials, uint64_t seed, lk_dist** out) {
  return Guard([&] {
    RequireNonNull(m, "m");
    RequireNonNull(sys, "sys");
    RequireNonNull(out, "out");
    leakc::SimulationConfig cfg;
    cfg.trials = trials;
    cfg.n = n;
    cfg.seed = seed;
    cfg.metric = m->value;
    *out = new lk_dist{leakc::SimulateEmpiricalCdf(sys->value, cfg)};
  });
}

size_t lk_dist_size(const lk_dist* d) {
  return d == nullptr ? 0 : d->value.size();
}

double lk_dist_value(const lk_dist* d, size_t i) {
  if (d == nullptr || i >= d->value.size()) return 0.0;
  return d->value.values()[i];
}

double lk_dist_prob(const lk_dist* d, size_t i) {
  if (d == nullptr || i >= d->value.size()) return 0.0;
  return d->value.probs()[i];
}

double lk_dist_cdf(const lk_dist* d, double l) {
  return d == nullptr ? 0.0 : d->value.Cdf(l);
}

void lk_dist_free(lk_dist* d) { delete d; }

lk_status lk_l1_distance(const lk_dist* a, const lk_dist* b, double* out) {
  return Guard([&] {
    RequireNonNull(a, "a");
    RequireNonNull(b, "b");
    RequireNonNull(out, "out");
    *out = leakc::CdfL1Distance(a->value, b->value);
  });
}

lk_status lk_ks_distance(const lk_dist* a, const lk_dist* b, double* out) {
  return Guard([&] {
    RequireNonNull(a, "a");
    RequireNonNull(b, "b");
    RequireNonNull(out, "out");
    *out = leakc::KsDistance(a->value, b->value);
  });
}

lk_status lk_chernoff(const double* p1, const double* p2, size_t len,
                      double* information, double* lambda) {
  return Guard([&] {
    RequireNonNull(p1, "p1");
    RequireNonNull(p2, "p2");
    const leakc::ProbVec a = leakc::ProbVec::Validate({p1, p1 + len});
    const leakc::ProbVec b = leakc::ProbVec::Validate({p2, p2 + len});
    const leakc::ChernoffResult r = leakc::Chernoff(a.probs(), b.probs());
    if (information != nullptr) *information = r.information;
    if (lambda != nullptr) *lambda = r.lambda;
  });
}

lk_status lk_chernoff_matrix(const lk_system* sys, double* matrix,
                             double* min_value, size_t* x, size_t* x_prime) {
  return Guard([&] {
    RequireNonNull(sys, "sys");
    const leakc::PairwiseChernoff r =
        leakc::MinPairwiseChernoff(sys->value.channel());
    if (matrix != nullptr) {
      const size_t nx = r.matrix.size();
      for (size_t i = 0; i < nx; ++i) {
        for (size_t j = 0; j < nx; ++j) matrix[i * nx + j] = r.matrix[i][j];
      }
    }
    if (min_value != nullptr) *min_value = r.value;
    if (x != nullptr) *x = r.x;
    if (x_prime != nullptr) *x_prime = r.x_prime;
  });
}

lk_status lk_rate_experiment(const lk_metric* m, const lk_system* sys,
                             const uint64_t* ns, size_t count,
                             lk_rate_mode mode, uint64_t window_lo,
                             uint64_t window_hi, double* gaps,
                             lk_rate_fit* fit) {
  return Guard([&] {
    RequireNonNull(m, "m");
    RequireNonNull(sys, "sys");
    RequireNonNull(ns, "ns");
    if (mode != LK_RATE_GLOBAL_GAP && mode != LK_RATE_POINTWISE_L1) {
      throw leakc::Error(leakc::ErrorCode::kInvalidArgument,
                         "unknown rate mode");
    }
    const leakc::RateReport r = leakc::RateExperiment(
        m->value, sys->value, {ns, count},
        mode == LK_RATE_GLOBAL_GAP ? leakc::RateMode::kGlobalGap
                                   : leakc::RateMode::kPointwiseL1,
        window_lo, window_hi);
    if (gaps != nullptr) {
      for (size_t i = 0; i < count; ++i) gaps[i] = r.gaps[i];
    }
    if (fit != nullptr) {
      *fit = lk_rate_fit{r.fit.slope,       r.fit.intercept, r.fit.r_squared,
                         r.fit.points_used, r.c_min,         r.relative_error};
    }
  });
}

lk_status lk_verify(const lk_metric* m, const lk_system* sys, uint64_t seed,
                    char** report_json, int* all_pass, int* any_fail) {
  return Guard([&] {
    RequireNonNull(m, "m");
    RequireNonNull(sys, "sys");
    const leakc::System& s = sys->value;
    const leakc::ProbVec& prior = s.prior();

    leakc::AxiomConfig axiom_cfg;
    axiom_cfg.seed = seed;
    leakc::DerivativeConfig derivative_cfg;
    derivative_cfg.seed = seed;
    leakc::DataProcessingConfig dpi_cfg;
    dpi_cfg.seed = seed;
    std::vector<std::vector<double>> identity(
        s.num_y(), std::vector<double>(s.num_y(), 0.0));
    for (size_t y = 0; y < s.num_y(); ++y) identity[y][y] = 1.0;

    const std::vector<leakc::AxiomReport> reports = {
        leakc::CheckAxioms(m->value, prior, axiom_cfg),
        leakc::CheckDerivativeProperty(m->value, prior, derivative_cfg),
        leakc::CheckHConvexity(m->value, prior, 200, seed),
        leakc::CheckDataProcessing(
            m->value, s, leakc::Channel::FromMatrix(identity), dpi_cfg),
    };
    bool pass = true;
    bool fail = false;
    nlohmann::json doc;
    doc["metric"] = m->name;
    doc["seed"] = seed;
    doc["prior"] =
        std::vector<double>(prior.probs().begin(), prior.probs().end());
    doc["reports"] = nlohmann::json::array();
    for (const leakc::AxiomReport& r : reports) {
      pass = pass && r.AllPass();
      fail = fail || r.AnyFail();
      doc["reports"].push_back(
          nlohmann::json::parse(leakc::AxiomReportToJson(r)));
    }
    doc["all_pass"] = pass;
    if (report_json != nullptr) *report_json = CopyString(doc.dump(2) + "\n");
    if (all_pass != nullptr) *all_pass = pass ? 1 : 0;
    if (any_fail != nullptr) *any_fail = fail ? 1 : 0;
  });
}

lk_status lk_bayes_error(const lk_system* sys, uint64_t n, double* out) {
  return Guard([&] {
    RequireNonNull(sys, "sys");
    RequireNonNull(out, "out");
    *out = leakc::BayesError(sys->value, n);
  });
}

lk_status lk_min_entropy_identity(const lk_system* sys, uint64_t n,
                                  double* leakage, double* success_log_ratio,
                                  double* abs_diff) {
  return Guard([&] {
    RequireNonNull(sys, "sys");
    const leakc::MinEntropyIdentity r =
        leakc::CheckMinEntropyIdentity(sys->value, n);
    if (leakage != nullptr) *leakage = r.leakage;
    if (success_log_ratio != nullptr) *success_log_ratio = r.success_log_ratio;
    if (abs_diff != nullptr) *abs_diff = r.abs_diff;
  });
}

}  // extern "C"
