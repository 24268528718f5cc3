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

#include "leakc/adversary.h"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "leakc/composition.h"
#include "leakc/error.h"
#include "leakc/random.h"
#include "parallel.h"
#include "type_walk.h"

namespace leakc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t ArgmaxWithTies(const std::vector<double>& log_joint) {
  std::size_t best = 0;
  for (std::size_t x = 1; x < log_joint.size(); ++x) {
    const double slack = 1e-12 * std::max(1.0, std::abs(log_joint[best]));
    if (log_joint[x] > log_joint[best] + slack) best = x;
  }
  return best;
}

}  // namespace

std::size_t MapEstimate(const System& sys, const TypeClass& t) {
  const std::vector<double> joint = LogJointSequence(sys, t);
  const std::size_t best = ArgmaxWithTies(joint);
  if (joint[best] == -kInf) {
    throw Error(ErrorCode::kAllLikelihoodsZero,
                "type " + t.ToString() + " is impossible under every x");
  }
  return best;
}

double BayesError(const System& sys, std::uint64_t n) {
  internal::CompensatedSum error;
  internal::MapTypes(
      n, sys.num_y(),
      [&](const TypeClass& t) {
        const std::vector<double> joint = LogJointSequence(sys, t);
        const std::size_t guess = ArgmaxWithTies(joint);
        const double log_mult = LogMultinomial(t);
        internal::CompensatedSum missed;
        for (std::size_t x = 0; x < joint.size(); ++x) {
          if (x != guess && joint[x] > -kInf) {
            missed.Add(std::exp(log_mult + joint[x]));
          }
        }
        return missed.value();
      },
      [&](const TypeClass&, double term) { error.Add(term); });
  return error.value();
}

MinEntropyIdentity CheckMinEntropyIdentity(const System& sys, std::uint64_t n) {
  MinEntropyIdentity out;
  out.leakage = ExactGlobalLeakage(MetricSpec::MinEntropy(), sys, n);
  const double pe_n = BayesError(sys, n);
  const double pe_0 = BayesError(sys, 0);
  out.success_log_ratio = std::log2((1.0 - pe_n) / (1.0 - pe_0));
  out.abs_diff = std::abs(out.leakage - out.success_log_ratio);
  return out;
}

LeakageDistribution SimulateEmpiricalCdf(const System& sys,
                                         const SimulationConfig& cfg) {
  if (cfg.trials == 0) {
    throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  }
  const std::vector<double> prior(sys.prior().probs().begin(),
                                  sys.prior().probs().end());
  std::vector<std::vector<double>> rows;
  for (const ProbVec& row : sys.channel().rows()) {
    rows.emplace_back(row.probs().begin(), row.probs().end());
  }
  std::vector<double> samples(cfg.trials);
  internal::ParallelFor(cfg.trials, [&](std::size_t trial) {
    PhiloxStream stream(cfg.seed, trial);
    const std::size_t x = stream.NextCategorical(prior);
    std::vector<std::uint32_t> counts(sys.num_y(), 0);
    for (std::uint64_t i = 0; i < cfg.n; ++i) {
      ++counts[stream.NextCategorical(rows[x])];
    }
    const ProbVec post = PosteriorFromCounts(sys, TypeClass(std::move(counts)));
    samples[trial] = PointwiseF(cfg.metric, post, sys.prior());
  });
  const double weight = 1.0 / static_cast<double>(cfg.trials);
  std::vector<std::pair<double, double>> points;
  points.reserve(samples.size());
  for (double v : samples) points.emplace_back(v, weight);
  return LeakageDistribution::FromWeighted(std::move(points));
}

}  // namespace leakc
