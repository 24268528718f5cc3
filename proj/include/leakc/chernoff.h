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

#ifndef LEAKC_CHERNOFF_H_
#define LEAKC_CHERNOFF_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leakc/metrics.h"
#include "leakc/prob.h"

namespace leakc {

struct ChernoffResult {
  double information = 0.0;  // bits, +inf for disjoint supports
  double lambda = 0.5;       // minimiser of log2 sum p1^l p2^(1-l)
};

// C(p1||p2) = -min_{l in [0,1]} log2 sum_x p1(x)^l p2(x)^(1-l).
// Golden-section search on the convex objective to |dl| <= 1e-10, with both
// endpoints evaluated explicitly (0^0 is taken as its interior limit).
ChernoffResult Chernoff(std::span<const double> p1, std::span<const double> p2);
double ChernoffInformation(const ProbVec& p1, const ProbVec& p2);

struct PairwiseChernoff {
  double value = 0.0;  // bits
  std::size_t x = 0;   // argmin pair, first-member indices into the channel
  std::size_t x_prime = 0;
  // Full symmetric matrix over the original rows (0 on the diagonal and
  // between rows that were grouped together).
  std::vector<std::vector<double>> matrix;
};

// Minimum over pairs of distinct rows after grouping identical rows.
// Throws kSingleClass when fewer than two distinct rows remain.
PairwiseChernoff MinPairwiseChernoff(const Channel& channel);

struct DecayFit {
  double slope = 0.0;  // bits per observation
  double intercept = 0.0;
  double r_squared = 1.0;
  std::size_t points_used = 0;
};

struct RatePoint {
  std::uint64_t n = 0;
  double gap = 0.0;
};

// OLS of log2(gap) on n over points with window_lo <= n <= window_hi.
// Throws kInsufficientPoints (< 3 in window), kNonPositiveGap.
DecayFit FitDecayRate(std::span<const RatePoint> points,
                      std::uint64_t window_lo, std::uint64_t window_hi);

enum class RateMode {
  kGlobalGap,    // L_inf - L_n
  kPointwiseL1,  // ||F_{L_n} - F_{I_X}||_1
};

struct RateReport {
  std::string metric;
  RateMode mode = RateMode::kGlobalGap;
  std::vector<std::uint64_t> n_values;
  std::vector<double> gaps;  // bits
  std::uint64_t window_lo = 0;
  std::uint64_t window_hi = 0;
  DecayFit fit;
  double c_min = 0.0;
  double relative_error = 0.0;  // |slope + c_min| / c_min
};

// ns must be strictly increasing (kInvalidArgument).
RateReport RateExperiment(const MetricSpec& m, const System& sys,
                          std::span<const std::uint64_t> ns, RateMode mode,
                          std::uint64_t window_lo, std::uint64_t window_hi);

}  // namespace leakc

#endif  // LEAKC_CHERNOFF_H_
