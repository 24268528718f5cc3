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

#include "leakc/chernoff.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "leakc/error.h"
#include "leakc/io.h"
#include "leakc/metrics.h"
#include "leakc/random.h"
#include "oracle.h"

namespace leakc {
namespace {

using V = std::vector<double>;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

TEST(ChernoffTest, ClosedForms) {
  const ChernoffResult bern =
      Chernoff(V{5.0 / 6, 1.0 / 6}, V{1.0 / 6, 5.0 / 6});
  EXPECT_NEAR(bern.information, 0.42399845327747501, 1e-12);
  EXPECT_NEAR(bern.lambda, 0.5, 1e-6);
  EXPECT_NEAR(Chernoff(V{0.6, 0.2, 0.2}, V{0.2, 0.6, 0.2}).information,
              0.16355822766945515, 1e-12);
}

TEST(ChernoffTest, DegenerateInputs) {
  EXPECT_EQ(Chernoff(V{0.3, 0.7}, V{0.3, 0.7}).information, 0.0);
  EXPECT_TRUE(std::isinf(Chernoff(V{1.0, 0.0}, V{0.0, 1.0}).information));
  EXPECT_EQ(CodeOf([] { Chernoff(V{1.0}, V{0.5, 0.5}); }),
            ErrorCode::kLengthMismatch);
}

TEST(ChernoffTest, PartialSupportOverlap) {
  const V p1{0.5, 0.5, 0.0};
  const V p2{0.0, 0.5, 0.5};
  EXPECT_NEAR(Chernoff(p1, p2).information, 1.0, 1e-12);
  EXPECT_NEAR(Chernoff(p1, p2).information, oracle::GridChernoff(p1, p2, 1e-4),
              1e-9);
}

TEST(ChernoffTest, MatchesLambdaGrid) {
  PhiloxStream rng(5, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = 2 + trial % 4;
    const V p1 = rng.NextSimplexPoint(dim);
    const V p2 = rng.NextSimplexPoint(dim);
    EXPECT_NEAR(Chernoff(p1, p2).information,
                oracle::GridChernoff(p1, p2, 1e-5), 1e-8);
  }
}

TEST(PairwiseTest, FigureThree) {
  const PairwiseChernoff r =
      MinPairwiseChernoff(BuiltinSystem("fig3").channel());
  EXPECT_NEAR(r.value, 0.16355822766945515, 1e-12);
  EXPECT_EQ(r.x, 0u);
  EXPECT_EQ(r.x_prime, 1u);
  EXPECT_NEAR(r.matrix[1][2], r.value, 1e-12);
  EXPECT_EQ(r.matrix[2][2], 0.0);
}

TEST(PairwiseTest, SkipsIdenticalRows) {
  const Channel c = Channel::FromMatrix({{0.5, 0.5}, {0.5, 0.5}, {0.9, 0.1}});
  const PairwiseChernoff r = MinPairwiseChernoff(c);
  EXPECT_EQ(r.matrix[0][1], 0.0);
  EXPECT_GT(r.value, 0.0);
  EXPECT_EQ(
      CodeOf([] { MinPairwiseChernoff(Channel::FromMatrix({{1.0}, {1.0}})); }),
      ErrorCode::kSingleClass);
}

TEST(FitTest, RecoversExactLine) {
  std::vector<RatePoint> pts;
  for (std::uint64_t n = 10; n <= 50; n += 10) {
    pts.push_back({n, std::exp2(3.0 - 0.25 * static_cast<double>(n))});
  }
  const DecayFit fit = FitDecayRate(pts, 0, 100);
  EXPECT_NEAR(fit.slope, -0.25, 1e-12);
  EXPECT_NEAR(fit.intercept, 3.0, 1e-10);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
  EXPECT_EQ(fit.points_used, 5u);
  EXPECT_EQ(FitDecayRate(pts, 20, 40).points_used, 3u);
}

TEST(FitTest, Errors) {
  std::vector<RatePoint> pts{{1, 0.5}, {2, 0.25}};
  EXPECT_EQ(CodeOf([&] { FitDecayRate(pts, 0, 10); }),
            ErrorCode::kInsufficientPoints);
  pts.push_back({3, 0.0});
  EXPECT_EQ(CodeOf([&] { FitDecayRate(pts, 0, 10); }),
            ErrorCode::kNonPositiveGap);
}

TEST(RateTest, FigureThreeMutualInformation) {
  std::vector<std::uint64_t> ns;
  for (std::uint64_t n = 60; n <= 200; n += 10) ns.push_back(n);
  const RateReport r =
      RateExperiment(MetricSpec::MutualInformation(), BuiltinSystem("fig3"), ns,
                     RateMode::kGlobalGap, 60, 200);
  EXPECT_NEAR(r.c_min, 0.16355822766945515, 1e-12);
  EXPECT_LT(r.relative_error, 0.1);
  EXPECT_GT(r.fit.r_squared, 0.999);
  EXPECT_EQ(r.gaps.size(), ns.size());
  EXPECT_EQ(r.metric, "mutual_information");
}

TEST(RateTest, RejectsUnsortedAndIndependent) {
  const std::vector<std::uint64_t> bad{5, 3, 8};
  EXPECT_EQ(CodeOf([&] {
              RateExperiment(MetricSpec::MutualInformation(),
                             BuiltinSystem("fig3"), bad, RateMode::kGlobalGap,
                             0, 10);
            }),
            ErrorCode::kInvalidArgument);
  const System indep = System::Create(
      ProbVec::Uniform(2), Channel::FromMatrix({{0.3, 0.7}, {0.3, 0.7}}));
  const std::vector<std::uint64_t> ns{1, 2, 3};
  EXPECT_EQ(CodeOf([&] {
              RateExperiment(MetricSpec::MutualInformation(), indep, ns,
                             RateMode::kGlobalGap, 1, 3);
            }),
            ErrorCode::kNonPositiveGap);
}

}  // namespace
}  // namespace leakc
