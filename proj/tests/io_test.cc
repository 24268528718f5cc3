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

#include "leakc/io.h"

#include <string>

#include "gtest/gtest.h"
#include "leakc/error.h"

namespace leakc {
namespace {

TEST(SystemJsonTest, RoundTrip) {
  const System s = BuiltinSystem("fig2");
  const System back = SystemFromJson(SystemToJson(s));
  EXPECT_EQ(back.num_x(), 2u);
  EXPECT_EQ(back.y_labels()[1], "No");
  EXPECT_EQ(back.channel().row(0)[0], 5.0 / 6.0);
  EXPECT_EQ(SystemToJson(back), SystemToJson(s));
}

TEST(SystemJsonTest, LabelsOptional) {
  const System s =
      SystemFromJson(R"({"prior":[0.5,0.5],"channel":[[1,0],[0,1]]})");
  EXPECT_EQ(s.x_labels()[1], "x2");
}

TEST(SystemJsonTest, ParseErrorCarriesOffset) {
  try {
    SystemFromJson(R"({"prior": [0.5, 0.5,], "channel": []})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("byte 21"), std::string::npos)
        << e.what();
  }
}

TEST(SystemJsonTest, SchemaErrors) {
  auto code = [](const char* text) {
    try {
      SystemFromJson(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kOk;
  };
  EXPECT_EQ(code(R"({"channel":[[1]]})"), ErrorCode::kParseError);
  EXPECT_EQ(code(R"({"prior":"x","channel":[[1]]})"), ErrorCode::kParseError);
  EXPECT_EQ(code(R"({"prior":[0.5,0.6],"channel":[[1],[1]]})"),
            ErrorCode::kSumOutOfTolerance);
  EXPECT_EQ(code(R"({"prior":[1],"channel":[[1],[1]]})"),
            ErrorCode::kShapeMismatch);
}

TEST(MetricJsonTest, AllKinds) {
  EXPECT_EQ(MetricFromJson(R"({"kind":"pml"})").kind(),
            MetricKind::kMaximalLeakage);
  EXPECT_EQ(MetricFromJson(R"({"kind":"sibson","alpha":3})").alpha(), 3.0);
  EXPECT_EQ(
      MetricFromJson(R"({"kind":"f_divergence","fdiv_kind":"chi_squared"})")
          .fdiv_kind(),
      FDivergenceKind::kChiSquared);
  const MetricSpec g =
      MetricFromJson(R"({"kind":"g_leakage","gain":[[1,0],[0,1]]})");
  EXPECT_EQ(g.gain()->num_x(), 2u);
  for (const MetricSpec& m : DefaultCatalog(3)) {
    EXPECT_EQ(MetricFromJson(MetricToJson(m)).Name(), m.Name());
  }
}

TEST(MetricJsonTest, Errors) {
  auto code = [](const char* text) {
    try {
      MetricFromJson(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kOk;
  };
  EXPECT_EQ(code(R"({"kind":"renyi"})"), ErrorCode::kParseError);
  EXPECT_EQ(code(R"({"kind":"sibson"})"), ErrorCode::kParseError);
  EXPECT_EQ(code(R"({"kind":"arimoto","alpha":1})"),
            ErrorCode::kAlphaOutOfRange);
  EXPECT_EQ(code(R"({"kind":"f_divergence","fdiv_kind":"tv"})"),
            ErrorCode::kParseError);
}

TEST(BuiltinTest, Figures) {
  const System fig3 = BuiltinSystem("fig3");
  EXPECT_EQ(fig3.prior()[2], 0.1);
  EXPECT_EQ(fig3.channel().row(2)[2], 0.6);
  EXPECT_THROW(BuiltinSystem("fig9"), Error);
}

}  // namespace
}  // namespace leakc
