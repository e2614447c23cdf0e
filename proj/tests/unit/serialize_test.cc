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

#include "ontomesh/serialize.h"

#include <gtest/gtest.h>

#include "ontomesh/centrality.h"
#include "ontomesh/error.h"
#include "ontomesh/ingest.h"
#include "ontomesh/report.h"
#include "support/test_support.h"

namespace ontomesh {
namespace {

CorpusSnapshot Fix1() { return IngestCorpus(testing::Fixture("fix1"), {}); }

TEST(SerializeTest, CanonicalDumpSortsKeysCompactly) {
  const Json doc = Json::parse(R"({"b": 1, "a": [true, null], "c": {"z": "x", "y": 2.5}})");
  EXPECT_EQ(CanonicalDump(doc), R"({"a":[true,null],"b":1,"c":{"y":2.5,"z":"x"}})");
}

TEST(SerializeTest, CanonicalDumpRejectsInvalidUtf8) {
  try {
    CanonicalDump(Json(std::string("\xff\xfe")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInternal);
  }
}

TEST(SerializeTest, ParseJsonReportsOffset) {
  try {
    ParseJson("[1, 2,, 3]", "doc");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.byte_offset(), 6u);
  }
}

TEST(SerializeTest, SnapshotRoundTrip) {
  const CorpusSnapshot snap = Fix1();
  const Json doc = ToJson(snap);
  EXPECT_EQ(doc.at("kind"), "snapshot");
  EXPECT_EQ(doc.at("records").at(0).at("kind"), "manifest");
  EXPECT_EQ(doc.at("records").at(0).at("format"), "ontomesh.snapshot/1");
  EXPECT_EQ(SnapshotFromJson(doc), snap);
  EXPECT_EQ(CanonicalDump(ToJson(SnapshotFromJson(ParseJson(CanonicalDump(doc), "x")))),
            CanonicalDump(doc));
}

TEST(SerializeTest, NdjsonRoundTrip) {
  const CorpusSnapshot snap = Fix1();
  const std::string text = SnapshotToNdjson(snap);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  EXPECT_EQ(lines, 1 + snap.domains.size() + snap.models.size() + snap.types.size() +
                       snap.occurrences.size());
  EXPECT_EQ(Json::parse(text.substr(0, text.find('\n'))).at("kind"), "manifest");
  EXPECT_EQ(SnapshotFromNdjson(text), snap);
}

TEST(SerializeTest, SnapshotSchemaErrors) {
  Json doc = ToJson(Fix1());
  doc["records"][0]["format"] = "ontomesh.snapshot/99";
  EXPECT_THROW(SnapshotFromJson(doc), Error);
  EXPECT_THROW(SnapshotFromJson(Json::parse(R"({"kind": "graph"})")), Error);
  Json bad_record = ToJson(Fix1());
  bad_record["records"].push_back({{"kind", "mystery"}});
  try {
    SnapshotFromJson(bad_record);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
}

TEST(SerializeTest, GraphRoundTrip) {
  const CorpusSnapshot snap = Fix1();
  for (bool containment : {false, true}) {
    const OntologyGraph graph = BuildGraph(snap, {containment});
    const Json doc = ToJson(graph);
    EXPECT_EQ(doc.at("format"), "ontomesh.graph/1");
    EXPECT_EQ(GraphFromJson(doc), graph);
  }
  EXPECT_NE(GraphHash(BuildGraph(snap, {false})), GraphHash(BuildGraph(snap, {true})));
}

TEST(SerializeTest, GraphDocumentIsValidatedOnLoad) {
  Json doc = ToJson(BuildGraph(Fix1()));
  doc["edges"][0]["u"] = doc["edges"][0]["v"];
  EXPECT_THROW(GraphFromJson(doc), Error);
}

TEST(SerializeTest, AnalysisArtifactsRoundTrip) {
  const CorpusSnapshot snap = Fix1();
  const OntologyGraph graph = BuildGraph(snap);
  const CentralityResult betweenness = BetweennessCentrality(graph, true, 1);
  EXPECT_EQ(CentralityFromJson(ToJson(betweenness)), betweenness);
  // Doubles survive a text round trip bit for bit.
  EXPECT_EQ(CentralityFromJson(ParseJson(CanonicalDump(ToJson(betweenness)), "c")), betweenness);

  for (MatrixMetric m : kAllMatrixMetrics) {
    const DomainMatrix matrix = DomainOverlapMatrix(snap, m);
    EXPECT_EQ(MatrixFromJson(ParseJson(CanonicalDump(ToJson(matrix)), "m")), matrix);
  }

  AnalysisReport report = DissonanceSummary(snap, graph);
  EXPECT_TRUE(report.generated_at.has_value());
  EXPECT_EQ(ReportFromJson(ParseJson(CanonicalDump(ToJson(report)), "r")), report);
  report.generated_at.reset();
  EXPECT_TRUE(ToJson(report).at("generated_at").is_null());
  EXPECT_EQ(ReportFromJson(ToJson(report)), report);
}

TEST(SerializeTest, KindsAreChecked) {
  const CorpusSnapshot snap = Fix1();
  const Json matrix = ToJson(DomainOverlapMatrix(snap, MatrixMetric::kSharedModels));
  EXPECT_THROW(CentralityFromJson(matrix), Error);
  EXPECT_THROW(ReportFromJson(matrix), Error);
  EXPECT_THROW(MatrixFromJson(ToJson(DegreeCentrality(BuildGraph(snap), false))), Error);
}

}  // namespace
}  // namespace ontomesh
