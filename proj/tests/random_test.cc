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

#include "leakc/random.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"

namespace leakc {
namespace {

TEST(PhiloxTest, KnownAnswerVectors) {
  EXPECT_EQ(Philox4x32({0, 0, 0, 0}, {0, 0}),
            (PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(Philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                       {0xffffffff, 0xffffffff}),
            (PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(Philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                       {0xa4093822, 0x299f31d0}),
            (PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(PhiloxStreamTest, DeterministicAndIndependent) {
  PhiloxStream a(42, 7);
  PhiloxStream b(42, 7);
  PhiloxStream c(42, 8);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t va = a.NextU64();
    EXPECT_EQ(va, b.NextU64());
    differs = differs || va != c.NextU64();
  }
  EXPECT_TRUE(differs);
}

TEST(PhiloxStreamTest, UniformMoments) {
  PhiloxStream s(1, 0);
  double sum = 0.0;
  double sq = 0.0;
  const int count = 200000;
  for (int i = 0; i < count; ++i) {
    const double u = s.NextUniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    sq += u * u;
  }
  EXPECT_NEAR(sum / count, 0.5, 0.005);
  EXPECT_NEAR(sq / count, 1.0 / 3.0, 0.005);
}

TEST(PhiloxStreamTest, CategoricalSkipsZeroMass) {
  PhiloxStream s(3, 1);
  const std::vector<double> probs{0.0, 0.25, 0.0, 0.75, 0.0};
  std::vector<int> hits(probs.size(), 0);
  for (int i = 0; i < 40000; ++i) ++hits[s.NextCategorical(probs)];
  EXPECT_EQ(hits[0] + hits[2] + hits[4], 0);
  EXPECT_NEAR(hits[3] / 40000.0, 0.75, 0.01);
}

TEST(PhiloxStreamTest, SimplexPoints) {
  PhiloxStream s(9, 2);
  double first = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const std::vector<double> p = s.NextSimplexPoint(4);
    double total = 0.0;
    for (double v : p) {
      ASSERT_GE(v, 0.0);
      total += v;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    first += p[0];
  }
  EXPECT_NEAR(first / 20000.0, 0.25, 0.01);
}

}  // namespace
}  // namespace leakc
