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

#include "ontomesh/schema_parser.h"

#include <gtest/gtest.h>

#include "ontomesh/error.h"

namespace ontomesh {
namespace {

const SchemaContext kContext{"SmartCities", "UrbanMobility", "Fallback", "test.json"};

std::vector<std::string> Names(const ParsedSchema& parsed, std::size_t type = 0) {
  return parsed.types.at(type).attribute_names;
}

TEST(SchemaParserTest, FlatProperties) {
  const ParsedSchema parsed = ParseSchemaFile(R"({
    "title": "ArrivalEstimation",
    "properties": {"dataProvider": {"type": "string", "description": "Source"},
                   "hasTrip": {"type": "string"}}
  })", kContext);
  ASSERT_EQ(parsed.types.size(), 1u);
  const TypeRecord& type = parsed.types[0];
  EXPECT_EQ(type.type_id, "UrbanMobility/ArrivalEstimation");
  EXPECT_EQ(type.display_name, "ArrivalEstimation");
  EXPECT_EQ(type.model_id, "UrbanMobility");
  EXPECT_EQ(type.attribute_names, (std::vector<std::string>{"dataProvider", "hasTrip"}));

  ASSERT_EQ(parsed.occurrences.size(), 2u);
  const AttributeOccurrence& first = parsed.occurrences[0];
  EXPECT_EQ(first.attribute_name, "dataProvider");
  EXPECT_EQ(first.domain_id, "SmartCities");
  EXPECT_EQ(first.model_id, "UrbanMobility");
  EXPECT_EQ(first.type_id, "UrbanMobility/ArrivalEstimation");
  EXPECT_EQ(first.metadata.at("description"), "Source");
  EXPECT_EQ(first.metadata.at("value_type"), "string");
  EXPECT_FALSE(parsed.occurrences[1].metadata.contains("description"));
}

TEST(SchemaParserTest, SourceOrderIsKept) {
  const ParsedSchema parsed =
      ParseSchemaFile(R"({"properties": {"zeta": {}, "alpha": {}, "mid": {}}})", kContext);
  EXPECT_EQ(Names(parsed), (std::vector<std::string>{"zeta", "alpha", "mid"}));
}

TEST(SchemaParserTest, FallbackNameWithoutTitle) {
  const ParsedSchema parsed = ParseSchemaFile(R"({"properties": {"a": {}}})", kContext);
  EXPECT_EQ(parsed.types.at(0).type_id, "UrbanMobility/Fallback");
}

TEST(SchemaParserTest, CompositionIsUnioned) {
  const ParsedSchema parsed = ParseSchemaFile(R"({
    "title": "T",
    "allOf": [{"properties": {"a": {}, "b": {}}},
              {"anyOf": [{"properties": {"b": {}, "c": {}}}]},
              {"oneOf": [{"properties": {"d": {}}}]}],
    "properties": {"root": {}}
  })", kContext);
  EXPECT_EQ(Names(parsed), (std::vector<std::string>{"root", "a", "b", "c", "d"}));
  EXPECT_EQ(parsed.occurrences.size(), 5u);
}

TEST(SchemaParserTest, LocalReferencesResolve) {
  const ParsedSchema parsed = ParseSchemaFile(R"({
    "title": "T",
    "allOf": [{"$ref": "#/definitions/Common"}, {"properties": {"own": {}}}],
    "definitions": {"Common": {"allOf": [{"$ref": "#/definitions/Base"}],
                               "properties": {"common": {}}},
                    "Base": {"properties": {"id": {}}}}
  })", kContext);
  EXPECT_EQ(Names(parsed), (std::vector<std::string>{"common", "id", "own"}));
}

TEST(SchemaParserTest, CyclicReferencesTerminate) {
  const ParsedSchema parsed = ParseSchemaFile(R"({
    "title": "T",
    "allOf": [{"$ref": "#/definitions/A"}],
    "definitions": {"A": {"allOf": [{"$ref": "#/definitions/A"}], "properties": {"x": {}}}}
  })", kContext);
  EXPECT_EQ(Names(parsed), (std::vector<std::string>{"x"}));
}

TEST(SchemaParserTest, RemoteReferencesAreIgnored) {
  const ParsedSchema parsed = ParseSchemaFile(R"({
    "allOf": [{"$ref": "https://example.org/common.json#/Location"}],
    "properties": {"a": {}}
  })", kContext);
  EXPECT_EQ(Names(parsed), (std::vector<std::string>{"a"}));
}

TEST(SchemaParserTest, DefinitionsWithoutRootProperties) {
  const ParsedSchema parsed = ParseSchemaFile(R"({
    "$defs": {"Alpha": {"properties": {"x": {}}},
              "Beta": {"title": "BetaTitle", "properties": {"y": {}, "z": {}}},
              "Empty": {"type": "string"}}
  })", kContext);
  ASSERT_EQ(parsed.types.size(), 2u);
  EXPECT_EQ(parsed.types[0].type_id, "UrbanMobility/Alpha");
  EXPECT_EQ(parsed.types[1].type_id, "UrbanMobility/Beta");
  EXPECT_EQ(parsed.occurrences.size(), 3u);
}

TEST(SchemaParserTest, RootArrayListsDefinitions) {
  const ParsedSchema parsed = ParseSchemaFile(
      R"([{"title": "A", "properties": {"x": {}}}, {"title": "B", "properties": {"y": {}}}])",
      kContext);
  ASSERT_EQ(parsed.types.size(), 2u);
  EXPECT_EQ(parsed.types[1].type_id, "UrbanMobility/B");
}

TEST(SchemaParserTest, TypeArrayJoins) {
  const ParsedSchema parsed =
      ParseSchemaFile(R"({"properties": {"loc": {"type": ["object", "null"]}}})", kContext);
  EXPECT_EQ(parsed.occurrences.at(0).metadata.at("value_type"), "object|null");
}

TEST(SchemaParserTest, NoPropertiesWarns) {
  Diagnostics diag;
  const ParsedSchema parsed =
      ParseSchemaFile(R"({"title": "T", "type": "object"})", kContext, &diag);
  EXPECT_TRUE(parsed.types.empty());
  EXPECT_TRUE(parsed.occurrences.empty());
  ASSERT_EQ(diag.warnings().size(), 1u);
  EXPECT_EQ(diag.warnings()[0].source, "test.json");
  EXPECT_NE(diag.warnings()[0].message.find("no attributes"), std::string::npos);
}

TEST(SchemaParserTest, InvalidJsonReportsOffset) {
  const std::string bytes = "{\"properties\": {\"a\": }}";
  try {
    ParseSchemaFile(bytes, kContext);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_EQ(bytes[e.byte_offset()], '}');
    EXPECT_NE(std::string(e.what()).find("test.json"), std::string::npos);
  }
}

}  // namespace
}  // namespace ontomesh
