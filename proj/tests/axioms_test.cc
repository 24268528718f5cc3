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

#include "leakc/axioms.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "leakc/composition.h"
#include "leakc/error.h"
#include "leakc/io.h"
#include "leakc/random.h"

namespace leakc {
namespace {

using Span = std::span<const double>;

const ProbVec kFig3Prior = ProbVec::Validate({0.6, 0.3, 0.1});

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

void ExpectAllPass(const AxiomReport& r) {
  for (const CheckResult& c : r.checks) {
    EXPECT_EQ(c.status, CheckStatus::kPass)
        << r.subject << " " << c.name << ": " << c.detail;
  }
}

TEST(AxiomsTest, PmlPasses) {
  const AxiomReport r = CheckAxioms(MetricSpec::MaximalLeakage(), kFig3Prior);
  EXPECT_TRUE(r.AllPass());
  for (const char* name :
       {"A1", "A2", "A3", "A4", "A5", "global_max_at_vertex"}) {
    ASSERT_NE(r.Find(name), nullptr) << name;
  }
  EXPECT_EQ(r.Find("A3")->samples_used, 200u);
  EXPECT_EQ(r.Find("A3")->detail, "no violation found in 200 samples");
}

TEST(AxiomsTest, MutualInformationPasses) {
  ExpectAllPass(CheckAxioms(MetricSpec::MutualInformation(),
                            ProbVec::Validate({0.2, 0.5, 0.3})));
}

TEST(AxiomsTest, NegatedKlFailsA2WithWitness) {
  const PointwiseFunction neg_kl = [](Span p, Span q) {
    return -PointwiseF(MetricSpec::MutualInformation(), p, q);
  };
  const AxiomReport r = CheckAxioms(neg_kl, kFig3Prior);
  const CheckResult* a2 = r.Find("A2");
  ASSERT_NE(a2, nullptr);
  EXPECT_EQ(a2->status, CheckStatus::kFail);
  ASSERT_TRUE(a2->witness.has_value());
  EXPECT_LE(neg_kl(a2->witness->p, a2->witness->q), 0.0);
  EXPECT_TRUE(r.AnyFail());
}

TEST(AxiomsTest, NonZeroAtPriorFailsA1) {
  const PointwiseFunction shifted = [](Span p, Span q) {
    return 0.1 + PointwiseF(MetricSpec::MaximalLeakage(), p, q);
  };
  EXPECT_EQ(CheckAxioms(shifted, kFig3Prior).Find("A1")->status,
            CheckStatus::kFail);
}

TEST(AxiomsTest, ConcaveInteriorFailsA3) {
  // Positive at the vertices but larger in the middle of the simplex.
  const PointwiseFunction bump = [](Span p, Span q) {
    double s = 0.0;
    double dist = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      s += p[i] * p[i];
      dist += std::abs(p[i] - q[i]);
    }
    return dist == 0.0 ? 0.0 : 2.0 - s;
  };
  const AxiomReport report = CheckAxioms(bump, kFig3Prior);
  const CheckResult* a3 = report.Find("A3");
  EXPECT_EQ(a3->status, CheckStatus::kFail);
  ASSERT_TRUE(a3->witness.has_value());
  EXPECT_GT(a3->witness->observed, a3->witness->bound);
}

TEST(AxiomsTest, ReversedPriorOrderFailsA4) {
  const PointwiseFunction reversed = [](Span p, Span q) {
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) acc += p[i] * q[i];
    double base = 0.0;
    for (double v : q) base += v * v;
    return acc == base ? 0.0 : 1.0 + acc;
  };
  EXPECT_EQ(CheckAxioms(reversed, kFig3Prior).Find("A4")->status,
            CheckStatus::kFail);
}

TEST(AxiomsTest, FlatNeighbourhoodFailsA5) {
  const PointwiseFunction flat = [](Span p, Span q) {
    double best = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
      best = std::max(best, p[i] - q[i]);
    return best > 0.0 ? 1.0 : 0.0;
  };
  const AxiomReport report = CheckAxioms(flat, kFig3Prior);
  const CheckResult* a5 = report.Find("A5");
  EXPECT_EQ(a5->status, CheckStatus::kFail);
  ASSERT_TRUE(a5->witness.has_value());
  EXPECT_EQ(a5->witness->direction.size(), 3u);
}

TEST(AxiomsTest, RequiresPositivePrior) {
  EXPECT_EQ(CodeOf([] {
              CheckAxioms(MetricSpec::MaximalLeakage(),
                          ProbVec::Validate({1.0, 0.0}));
            }),
            ErrorCode::kDomainError);
}

TEST(AxiomsTest, TiedMaximumIsInconclusiveForMinEntropy) {
  const AxiomReport r =
      CheckAxioms(MetricSpec::MinEntropy(), ProbVec::Validate({0.4, 0.4, 0.2}));
  EXPECT_EQ(r.Find("A5")->status, CheckStatus::kInconclusive);
  EXPECT_FALSE(r.AnyFail());
}

TEST(AxiomsTest, Deterministic) {
  AxiomConfig cfg;
  cfg.seed = 99;
  const PointwiseFunction bump = [](Span p, Span) {
    double s = 0.0;
    for (double v : p) s += v * v;
    return 1.5 - s;
  };
  const AxiomReport a = CheckAxioms(bump, kFig3Prior, cfg);
  const AxiomReport b = CheckAxioms(bump, kFig3Prior, cfg);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].status, b.checks[i].status);
    ASSERT_EQ(a.checks[i].witness.has_value(), b.checks[i].witness.has_value());
    if (a.checks[i].witness) {
      EXPECT_EQ(a.checks[i].witness->p, b.checks[i].witness->p);
    }
  }
}

TEST(DerivativeTest, PmlAndMutualInformationPass) {
  ExpectAllPass(CheckDerivativeProperty(MetricSpec::MaximalLeakage(),
                                        ProbVec::Validate({0.5, 0.5})));
  ExpectAllPass(
      CheckDerivativeProperty(MetricSpec::MutualInformation(), kFig3Prior));
}

TEST(DerivativeTest, ConstantFails) {
  const PointwiseFunction constant = [](Span, Span) { return 1.0; };
  const AxiomReport r = CheckDerivativeProperty(constant, kFig3Prior);
  EXPECT_EQ(r.Find("derivative_property")->status, CheckStatus::kFail);
  EXPECT_EQ(r.Find("pairwise_derivative")->status, CheckStatus::kFail);
  EXPECT_TRUE(r.Find("pairwise_derivative")->witness.has_value());
}

TEST(DerivativeTest, InfiniteValuesAreInconclusive) {
  const PointwiseFunction singular = [](Span p, Span) {
    return p[0] == 1.0 ? INFINITY : 1.0;
  };
  const AxiomReport r = CheckDerivativeProperty(singular, kFig3Prior);
  EXPECT_EQ(r.Find("pairwise_derivative")->status, CheckStatus::kInconclusive);
}

TEST(HConvexityTest, CatalogExamplesPass) {
  ExpectAllPass(CheckHConvexity(MetricSpec::MutualInformation(), kFig3Prior));
  ExpectAllPass(CheckHConvexity(MetricSpec::MaximalLeakage(), kFig3Prior));
}

TEST(HConvexityTest, ConcaveFixtureFails) {
  const PointwiseFunction concave = [](Span p, Span) {
    double s = 0.0;
    for (double v : p) s += v * v;
    return -s;
  };
  const AxiomReport r = CheckHConvexity(concave, kFig3Prior);
  const CheckResult& c = r.checks.front();
  EXPECT_EQ(c.status, CheckStatus::kFail);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_GT(c.witness->observed, c.witness->bound + 1e-9);
}

TEST(DataProcessingTest, IdentityAndCollapsingGarbles) {
  const System s = BuiltinSystem("fig3");
  const MetricSpec m = MetricSpec::MutualInformation();
  const Channel identity =
      Channel::FromMatrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const System z = System::Create(s.prior(), s.channel().Compose(identity));
  EXPECT_NEAR(ExactGlobalLeakage(m, z, 1), ExactGlobalLeakage(m, s, 1), 1e-15);
  const Channel collapse = Channel::FromMatrix({{1.0}, {1.0}, {1.0}});
  const System c = System::Create(s.prior(), s.channel().Compose(collapse));
  EXPECT_NEAR(ExactGlobalLeakage(m, c, 1), 0.0, 1e-15);
  ExpectAllPass(CheckDataProcessing(m, s, collapse));
}

TEST(DataProcessingTest, CatalogOnFigureThree) {
  const System s = BuiltinSystem("fig3");
  const Channel garble =
      Channel::FromMatrix({{0.7, 0.3}, {0.2, 0.8}, {0.5, 0.5}});
  for (const MetricSpec& m : DefaultCatalog(3)) {
    ExpectAllPass(CheckDataProcessing(m, s, garble));
  }
}

TEST(DataProcessingTest, ShapeMismatch) {
  EXPECT_EQ(CodeOf([] {
              CheckDataProcessing(MetricSpec::MaximalLeakage(),
                                  BuiltinSystem("fig3"),
                                  Channel::FromMatrix({{1.0}, {1.0}}));
            }),
            ErrorCode::kShapeMismatch);
}

TEST(CatalogTest, RandomPriorsPassAxiomsAndConvexity) {
  PhiloxStream rng(3, 0);
  for (std::size_t nx = 2; nx <= 4; ++nx) {
    for (int trial = 0; trial < 5; ++trial) {
      const ProbVec q = ProbVec::Validate(rng.NextSimplexPoint(nx));
      for (const MetricSpec& m : DefaultCatalog(nx)) {
        const AxiomReport a = CheckAxioms(m, q);
        EXPECT_FALSE(a.AnyFail()) << m.Name();
        ExpectAllPass(CheckHConvexity(m, q));
      }
    }
  }
}

TEST(ReportTest, StatusNames) {
  EXPECT_EQ(CheckStatusName(CheckStatus::kPass), "pass");
  EXPECT_EQ(CheckStatusName(CheckStatus::kInconclusive), "inconclusive");
}

}  // namespace
}  // namespace leakc
