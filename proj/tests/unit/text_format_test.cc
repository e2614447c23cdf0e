// Copyright 2026 The OntoMesh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ontomesh/text_format.h"

#include <gtest/gtest.h>

#include <random>

namespace ontomesh {
namespace {

TEST(TextFormatTest, FormatNumber) {
  EXPECT_EQ(FormatNumber(0), "0");
  EXPECT_EQ(FormatNumber(13), "13");
  EXPECT_EQ(FormatNumber(-4), "-4");
  EXPECT_EQ(FormatNumber(0.5), "0.5");
  EXPECT_EQ(FormatNumber(1.0 / 3.0), "0.3333333333333333");
}

TEST(TextFormatTest, FormatNumberRoundTrips) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = dist(rng);
    EXPECT_EQ(std::stod(FormatNumber(v)), v);
  }
}

TEST(TextFormatTest, FormatDecimal) {
  EXPECT_EQ(FormatDecimal(1.0 / 3.0), "0.3333");
  EXPECT_EQ(FormatDecimal(0.5, 4), "0.5");
  EXPECT_EQ(FormatDecimal(2, 4), "2");
  EXPECT_EQ(FormatDecimal(0.291299, 2), "0.29");
  EXPECT_EQ(FormatDecimal(0.9999, 2), "1");
}

TEST(TextFormatTest, Escaping) {
  EXPECT_EQ(XmlEscape("a<b>&\"c'"), "a&lt;b&gt;&amp;&quot;c&apos;");
  EXPECT_EQ(CsvField("plain"), "plain");
  EXPECT_EQ(CsvField("a,b"), "\"a,b\"");
  EXPECT_EQ(CsvField("say \"x\""), "\"say \"\"x\"\"\"");
  EXPECT_EQ(CsvField("line\nbreak"), "\"line\nbreak\"");
  EXPECT_EQ(DotQuote("a\"b\\c"), "\"a\\\"b\\\\c\"");
}

}  // namespace
}  // namespace ontomesh
