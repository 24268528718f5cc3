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

// The Bayesian adversary: MAP guessing, its exact error over n observations,
// and Monte Carlo sampling of pointwise leakage.

#ifndef LEAKC_ADVERSARY_H_
#define LEAKC_ADVERSARY_H_

#include <cstddef>
#include <cstdint>

#include "leakc/metrics.h"
#include "leakc/prob.h"

namespace leakc {

// argmax_x prior(x) Q_x^n(y^n); near-ties resolve to the smallest index.
// Throws kAllLikelihoodsZero.
std::size_t MapEstimate(const System& sys, const TypeClass& t);

// P_e^(n) of the MAP rule on `sys` as given (rows are not grouped, since the
// guess targets X itself). Accumulated from the error masses directly so
// that exponentially small errors keep full relative precision.
double BayesError(const System& sys, std::uint64_t n);

struct MinEntropyIdentity {
  double leakage = 0.0;            // min-entropy L_n
  double success_log_ratio = 0.0;  // log2((1 - P_e^(n)) / (1 - P_e^(0)))
  double abs_diff = 0.0;
};

// Both sides on the merged system.
MinEntropyIdentity CheckMinEntropyIdentity(const System& sys, std::uint64_t n);

struct SimulationConfig {
  std::uint64_t trials = 100'000;
  std::uint64_t n = 1;
  std::uint64_t seed = 1;
  MetricSpec metric = MetricSpec::MaximalLeakage();
};

// Draws X ~ prior then n i.i.d. Y ~ Q_X per trial, trial i using
// PhiloxStream(seed, i); returns the empirical law of l(Y^n).
LeakageDistribution SimulateEmpiricalCdf(const System& sys,
                                         const SimulationConfig& cfg);

}  // namespace leakc

#endif  // LEAKC_ADVERSARY_H_
