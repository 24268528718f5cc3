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

#include "leakc/composition.h"

#include <cmath>
#include <map>
#include <vector>

#include "gtest/gtest.h"
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

const oracle::RawSystem kFig3Raw{
    {0.6, 0.3, 0.1}, {{0.6, 0.2, 0.2}, {0.2, 0.6, 0.2}, {0.2, 0.2, 0.6}}};

TEST(EnumerateTypesTest, OrderAndCount) {
  const std::vector<TypeClass> t = EnumerateTypes(2, 2);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0].ToString(), "2|0");
  EXPECT_EQ(t[1].ToString(), "1|1");
  EXPECT_EQ(t[2].ToString(), "0|2");
  EXPECT_EQ(EnumerateTypes(5, 3).size(), 21u);
  EXPECT_EQ(CountTypes(200, 3), 20301u);
  EXPECT_EQ(EnumerateTypes(0, 3).size(), 1u);
  EXPECT_EQ(EnumerateTypes(4, 1).front().ToString(), "4");
}

TEST(EnumerateTypesTest, SizeLimit) {
  EXPECT_GT(CountTypes(1000, 6), kMaxTypeClasses);
  EXPECT_EQ(CodeOf([] { EnumerateTypes(1000, 6); }), ErrorCode::kSizeLimit);
  EXPECT_EQ(
      CodeOf([] {
        ExactGlobalLeakage(
            MetricSpec::MutualInformation(),
            System::Create(ProbVec::Uniform(2),
                           Channel::FromMatrix({std::vector<double>(6, 1.0 / 6),
                                                {0.5, 0.5, 0, 0, 0, 0}})),
            1000);
      }),
      ErrorCode::kSizeLimit);
}

TEST(TypeGeometryTest, OrderingAndDomain) {
  const System s = BuiltinSystem("fig3");
  const TypeGeometry g = ComputeTypeGeometry(s, TypeClass({6, 2, 2}));
  EXPECT_EQ(g.mle(), 0u);
  EXPECT_EQ(g.ordering.size(), 3u);
  EXPECT_NEAR(g.divergences[0], 0.0, 1e-15);
  EXPECT_GT(g.k, 0.0);
  ASSERT_TRUE(g.in_domain.has_value());
  EXPECT_EQ(*g.in_domain, 0u);
}

TEST(TypeGeometryTest, TieKeepsIndexOrder) {
  const System s = BuiltinSystem("fig3");
  const TypeGeometry g = ComputeTypeGeometry(s, TypeClass({1, 1, 1}));
  EXPECT_EQ(g.ordering, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(g.k, 0.0);
  EXPECT_FALSE(g.in_domain.has_value());
}

TEST(TypeGeometryTest, Errors) {
  const System single = System::Create(
      ProbVec::Uniform(2), Channel::FromMatrix({{0.5, 0.5}, {0.5, 0.5}}));
  EXPECT_EQ(CodeOf([&] { MinRunnerUpDivergence(single, 3); }),
            ErrorCode::kSingleClass);
  EXPECT_EQ(CodeOf([] { MinRunnerUpDivergence(BuiltinSystem("fig3"), 0); }),
            ErrorCode::kDomainError);
}

TEST(MinRunnerUpTest, ApproachesChernoffFromBelow) {
  const System s = BuiltinSystem("fig3");
  const double c = 0.16355822766945515;
  const double c50 = MinRunnerUpDivergence(s, 50);
  const double c200 = MinRunnerUpDivergence(s, 200);
  EXPECT_LT(std::abs(c200 - c), std::abs(c50 - c) + 1e-12);
  EXPECT_NEAR(c200, c, 0.01);
}

TEST(OracleTest, PointwiseDistributionMatchesSequences) {
  PhiloxStream rng(11, 0);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t nx = 2 + trial % 2;
    const std::size_t ny = 2 + (trial / 2) % 2;
    const oracle::RawSystem raw = oracle::RandomSystem(rng, nx, ny);
    const System s = oracle::ToSystem(raw);
    for (int n = 1; n <= 5; ++n) {
      const LeakageDistribution exact =
          ExactPointwiseDistribution(MetricSpec::MaximalLeakage(), s, n);
      std::vector<std::pair<double, double>> pts;
      oracle::ForEachSequence(raw, n, [&](const oracle::Sequence& seq) {
        pts.emplace_back(oracle::MaxRatioLeakage(seq.posterior, raw.prior),
                         seq.prob);
      });
      const LeakageDistribution brute =
          LeakageDistribution::FromWeighted(std::move(pts));
      EXPECT_LE(KsDistance(exact, brute), 1e-9) << trial << " n=" << n;
      EXPECT_LE(CdfL1Distance(exact, brute), 1e-9) << trial << " n=" << n;
    }
  }
}

TEST(OracleTest, GlobalLeakageMatchesSequences) {
  PhiloxStream rng(12, 0);
  for (int trial = 0; trial < 8; ++trial) {
    const oracle::RawSystem raw = oracle::RandomSystem(rng, 3, 2 + trial % 2);
    const System s = oracle::ToSystem(raw);
    for (const MetricSpec& m : DefaultCatalog(3)) {
      for (int n : {1, 3, 5}) {
        const double z = oracle::Expectation(raw, n, [&](const auto& post) {
          return HValue(m, post, raw.prior);
        });
        EXPECT_NEAR(ExactGlobalLeakage(m, s, n), G2Apply(m, z), 1e-9)
            << m.Name() << " n=" << n;
      }
    }
  }
}

TEST(FrozenTest, FigureThreeGlobalLeakage) {
  const System s = BuiltinSystem("fig3");
  const MetricSpec mi = MetricSpec::MutualInformation();
  const MetricSpec pml = MetricSpec::MaximalLeakage();
  const MetricSpec me = MetricSpec::MinEntropy();
  EXPECT_NEAR(ExactGlobalLeakage(mi, s, 5), 0.63907923857517498, 1e-12);
  EXPECT_NEAR(ExactGlobalLeakage(mi, s, 20), 1.1975949666521375, 1e-12);
  EXPECT_NEAR(ExactGlobalLeakage(pml, s, 5), 1.2059429594142107, 1e-12);
  EXPECT_NEAR(ExactGlobalLeakage(pml, s, 20), 1.5405674243886630, 1e-12);
  EXPECT_NEAR(ExactGlobalLeakage(me, s, 5), 0.45206823022381081, 1e-12);
  EXPECT_NEAR(ExactGlobalLeakage(me, s, 20), 0.70154873739718483, 1e-12);
}

TEST(FrozenTest, FigureThreeLimitsAndGaps) {
  const System s = BuiltinSystem("fig3");
  const MetricSpec mi = MetricSpec::MutualInformation();
  EXPECT_NEAR(GlobalLimit(mi, s), 1.2954618442383218, 1e-13);
  EXPECT_NEAR(GlobalLimit(MetricSpec::MaximalLeakage(), s), std::log2(3.0),
              1e-13);
  const double gap = GlobalGap(mi, s, 100);
  EXPECT_NEAR(gap / 6.8253460921305647e-6, 1.0, 1e-8);
}

TEST(FrozenTest, FigureThreeCdfDistance) {
  const System s = BuiltinSystem("fig3");
  const MetricSpec pml = MetricSpec::MaximalLeakage();
  const LeakageDistribution info = InformationDistribution(pml, s.prior());
  EXPECT_NEAR(CdfL1Distance(ExactPointwiseDistribution(pml, s, 40), info) /
                  0.0028902920142482984,
              1.0, 1e-8);
  EXPECT_NEAR(CdfL1Distance(ExactPointwiseDistribution(pml, s, 150), info) /
                  6.3614945245043425e-9,
              1.0, 1e-5);
}

TEST(GlobalGapTest, EqualsLimitMinusExact) {
  const System s = BuiltinSystem("fig3");
  for (const MetricSpec& m : DefaultCatalog(3)) {
    for (int n : {1, 4, 12}) {
      EXPECT_NEAR(GlobalGap(m, s, n),
                  GlobalLimit(m, s) - ExactGlobalLeakage(m, s, n), 1e-11)
          << m.Name() << " n=" << n;
    }
  }
}

TEST(GlobalTest, ZeroObservationsLeakNothing) {
  const System s = BuiltinSystem("fig3");
  for (const MetricSpec& m : DefaultCatalog(3)) {
    EXPECT_NEAR(ExactGlobalLeakage(m, s, 0), 0.0, 1e-12) << m.Name();
  }
}

TEST(GlobalTest, DuplicateRowsLimitUsesClassPosterior) {
  const System s =
      System::Create(ProbVec::Validate({0.1, 0.3, 0.6}),
                     Channel::FromMatrix({{0.9, 0.1}, {0.9, 0.1}, {0.2, 0.8}}));
  const MetricSpec pml = MetricSpec::MaximalLeakage();
  const LeakageDistribution lim = LimitDistribution(pml, s);
  ASSERT_EQ(lim.size(), 2u);
  EXPECT_NEAR(lim.values()[0], std::log2(1 / 0.6), 1e-12);
  EXPECT_NEAR(lim.values()[1], std::log2(2.5), 1e-12);
  EXPECT_NEAR(lim.probs()[1], 0.4, 1e-15);
  const MetricSpec me = MetricSpec::MinEntropy();
  EXPECT_NEAR(GlobalGap(me, s, 30),
              GlobalLimit(me, s) - ExactGlobalLeakage(me, s, 30), 1e-10);
  EXPECT_LT(GlobalGap(me, s, 30), 1e-3);
}

TEST(GlobalTest, IndependentSystemLeaksNothing) {
  const System s =
      System::Create(ProbVec::Validate({0.2, 0.8}),
                     Channel::FromMatrix({{0.3, 0.7}, {0.3, 0.7}}));
  for (const MetricSpec& m : DefaultCatalog(2)) {
    EXPECT_NEAR(ExactGlobalLeakage(m, s, 4), 0.0, 1e-12) << m.Name();
    EXPECT_NEAR(GlobalLimit(m, s), 0.0, 1e-12) << m.Name();
  }
}

TEST(CdfL1Test, StepFunctions) {
  const auto a = LeakageDistribution::FromWeighted({{0.0, 0.5}, {2.0, 0.5}});
  const auto b = LeakageDistribution::PointMass(1.0);
  EXPECT_NEAR(CdfL1Distance(a, b), 1.0, 1e-15);
  EXPECT_EQ(CdfL1Distance(a, a), 0.0);
}

TEST(ThreadsTest, ResultsIndependentOfThreadCount) {
  const System s = BuiltinSystem("fig3");
  const MetricSpec m = MetricSpec::MutualInformation();
  SetThreadLimit(1);
  const double one = ExactGlobalLeakage(m, s, 120);
  const auto d1 =
      ExactPointwiseDistribution(MetricSpec::MaximalLeakage(), s, 60);
  SetThreadLimit(0);
  EXPECT_EQ(ExactGlobalLeakage(m, s, 120), one);
  const auto d2 =
      ExactPointwiseDistribution(MetricSpec::MaximalLeakage(), s, 60);
  EXPECT_EQ(d1.values(), d2.values());
  EXPECT_EQ(d1.probs(), d2.probs());
}

}  // namespace
}  // namespace leakc
