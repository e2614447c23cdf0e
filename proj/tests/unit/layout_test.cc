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

#include "ontomesh/layout.h"

#include <gtest/gtest.h>

#include "ontomesh/error.h"
#include "support/test_support.h"

namespace ontomesh {
namespace {

TEST(LayoutTest, Defaults) {
  const LayoutConfig config = ParseLayoutConfig("");
  EXPECT_EQ(config.schema_pattern, "*.json");
  EXPECT_EQ(config.max_depth, -1);
  EXPECT_EQ(config.model_prefix, "");
  EXPECT_TRUE(config.skip_hidden);
  EXPECT_FALSE(config.strict);
}

TEST(LayoutTest, ParsesEveryKey) {
  const LayoutConfig config = ParseLayoutConfig(
      "# upstream conventions\n"
      "schema_pattern = schema.json\n"
      "max_depth=2   # model dir and one level below\n"
      "model_prefix = dataModel.\r\n"
      "skip_hidden = no\n"
      "strict = true\n");
  EXPECT_EQ(config.schema_pattern, "schema.json");
  EXPECT_EQ(config.max_depth, 2);
  EXPECT_EQ(config.model_prefix, "dataModel.");
  EXPECT_FALSE(config.skip_hidden);
  EXPECT_TRUE(config.strict);
}

void ExpectInvalid(const std::string& text) {
  try {
    ParseLayoutConfig(text);
    FAIL() << "accepted: " << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(LayoutTest, RejectsMalformedLines) {
  ExpectInvalid("schema_pattern\n");
  ExpectInvalid("colour = blue\n");
  ExpectInvalid("max_depth = deep\n");
  ExpectInvalid("strict = perhaps\n");
  ExpectInvalid("schema_pattern =\n");
}

TEST(LayoutTest, LoadsFromFile) {
  testing::TempDir dir;
  testing::WriteText(dir / "layout.conf", "max_depth = 1\n");
  EXPECT_EQ(LoadLayoutConfig(dir / "layout.conf").max_depth, 1);
  try {
    LoadLayoutConfig(dir / "missing.conf");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

}  // namespace
}  // namespace ontomesh
