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
#include <vector>

#include "gtest/gtest.h"
#include "leakc/composition.h"
#include "leakc/error.h"
#include "leakc/io.h"
#include "leakc/random.h"
#include "leakc/threads.h"
#include "oracle.h"

namespace leakc {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

TEST(MapEstimateTest, TiesPickSmallestIndex) {
  const System fig2 = BuiltinSystem("fig2");
  EXPECT_EQ(MapEstimate(fig2, TypeClass({1, 1})), 0u);
  EXPECT_EQ(MapEstimate(fig2, TypeClass({0, 3})), 1u);
  const System fig3 = BuiltinSystem("fig3");
  EXPECT_EQ(MapEstimate(fig3, TypeClass({1, 1, 1})), 0u);
  EXPECT_EQ(MapEstimate(fig3, TypeClass({0, 0, 2})), 2u);
}

TEST(MapEstimateTest, ImpossibleType) {
  const System s = System::Create(
      ProbVec::Uniform(2), Channel::FromMatrix({{1.0, 0.0}, {1.0, 0.0}}));
  EXPECT_EQ(CodeOf([&] { MapEstimate(s, TypeClass({0, 2})); }),
            ErrorCode::kAllLikelihoodsZero);
}

TEST(BayesErrorTest, FrozenValues) {
  const System fig2 = BuiltinSystem("fig2");
  EXPECT_NEAR(BayesError(fig2, 0), 0.5, 1e-15);
  EXPECT_NEAR(BayesError(fig2, 1), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(BayesError(fig2, 2), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(BayesError(fig2, 3), 2.0 / 27.0, 1e-15);
  EXPECT_NEAR(BayesError(fig2, 10), 0.0089500616013819032, 1e-15);
  const System fig3 = BuiltinSystem("fig3");
  EXPECT_NEAR(BayesError(fig3, 1), 0.34, 1e-15);
  EXPECT_NEAR(BayesError(fig3, 10), 0.0887274496, 1e-14);
}

TEST(BayesErrorTest, MatchesSequences) {
  PhiloxStream rng(21, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const oracle::RawSystem raw =
        oracle::RandomSystem(rng, 2 + trial % 2, 2 + (trial / 2) % 2);
    const System s = oracle::ToSystem(raw);
    for (int n = 0; n <= 5; ++n) {
      EXPECT_NEAR(BayesError(s, n), oracle::BayesError(raw, n), 1e-12);
    }
  }
}

TEST(BayesErrorTest, DecaysAtChernoffRate) {
  const System fig2 = BuiltinSystem("fig2");
  const double c = 0.42399845327747501;
  const double slope =
      (std::log2(BayesError(fig2, 400)) - std::log2(BayesError(fig2, 200))) /
      200.0;
  EXPECT_NEAR(-slope, c, 0.01);
}

TEST(BayesErrorTest, KeepsTinyErrors) {
  const double e = BayesError(BuiltinSystem("fig2"), 2000);
  EXPECT_GT(e, 0.0);
  EXPECT_LT(e, 1e-200);
}

TEST(MinEntropyIdentityTest, HoldsOnFigures) {
  for (const char* name : {"fig2", "fig3"}) {
    const System s = BuiltinSystem(name);
    for (int n : {0, 1, 5, 10, 50}) {
      const MinEntropyIdentity id = CheckMinEntropyIdentity(s, n);
      EXPECT_LE(id.abs_diff, 1e-9) << name << " n=" << n;
    }
  }
  const MinEntropyIdentity one =
      CheckMinEntropyIdentity(BuiltinSystem("fig2"), 1);
  EXPECT_NEAR(one.leakage, std::log2(5.0 / 3.0), 1e-12);
}

TEST(MinEntropyIdentityTest, HoldsWithDuplicateRows) {
  const System s =
      System::Create(ProbVec::Validate({0.1, 0.3, 0.6}),
                     Channel::FromMatrix({{0.9, 0.1}, {0.9, 0.1}, {0.2, 0.8}}));
  for (int n : {1, 7, 30}) {
    EXPECT_LE(CheckMinEntropyIdentity(s, n).abs_diff, 1e-9);
  }
}

TEST(SimulationTest, DeterministicGivenSeed) {
  const System s = BuiltinSystem("fig3");
  SimulationConfig cfg;
  cfg.trials = 5000;
  cfg.n = 10;
  cfg.seed = 17;
  const LeakageDistribution a = SimulateEmpiricalCdf(s, cfg);
  SetThreadLimit(1);
  const LeakageDistribution b = SimulateEmpiricalCdf(s, cfg);
  SetThreadLimit(0);
  EXPECT_EQ(a.values(), b.values());
  EXPECT_EQ(a.probs(), b.probs());
  cfg.seed = 18;
  const LeakageDistribution c = SimulateEmpiricalCdf(s, cfg);
  EXPECT_GT(KsDistance(a, c), 0.0);
}

TEST(SimulationTest, CloseToExact) {
  const System s = BuiltinSystem("fig3");
  SimulationConfig cfg;
  cfg.trials = 20000;
  cfg.n = 5;
  const LeakageDistribution sim = SimulateEmpiricalCdf(s, cfg);
  const LeakageDistribution exact =
      ExactPointwiseDistribution(MetricSpec::MaximalLeakage(), s, 5);
  EXPECT_LT(KsDistance(sim, exact), 0.02);
}

TEST(SimulationTest, RejectsZeroTrials) {
  SimulationConfig cfg;
  cfg.trials = 0;
  EXPECT_EQ(CodeOf([&] { SimulateEmpiricalCdf(BuiltinSystem("fig2"), cfg); }),
            ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace leakc
