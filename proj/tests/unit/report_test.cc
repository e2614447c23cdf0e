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

#include "ontomesh/report.h"

#include <gtest/gtest.h>

#include <regex>

#include "ontomesh/error.h"
#include "ontomesh/ingest.h"
#include "ontomesh/report_render.h"
#include "ontomesh/serialize.h"
#include "support/test_support.h"

namespace ontomesh {
namespace {

using testing::SnapshotFrom;
using testing::TypeDecl;

std::vector<TypeDecl> Disjoint(int domains) {
  std::vector<TypeDecl> decls;
  for (int d = 0; d < domains; ++d) {
    const std::string id = std::to_string(d);
    decls.push_back({"D" + id, "M" + id, "T", {"x" + id, "y" + id, "z" + id}});
  }
  return decls;
}

std::vector<TypeDecl> Shared(int domains) {
  std::vector<TypeDecl> decls;
  for (int d = 0; d < domains; ++d) {
    const std::string id = std::to_string(d);
    decls.push_back({"D" + id, "M" + id, "T", {"common", "shared", "same"}});
  }
  return decls;
}

TEST(SpecificityTest, DisjointVocabulariesAreFullySpecific) {
  const CorpusSnapshot snap = SnapshotFrom(Disjoint(5));
  for (const auto& s : SpecificityRatios(snap)) {
    EXPECT_EQ(s.ratio, 1.0);
    EXPECT_EQ(s.specific, 3u);
    EXPECT_EQ(s.total, 3u);
  }
  const DomainMatrix jaccard = DomainOverlapMatrix(snap, MatrixMetric::kJaccardAttributes);
  for (double cell : jaccard.cells) EXPECT_EQ(cell, 0.0);
}

TEST(SpecificityTest, SharedVocabulariesAreNotSpecific) {
  const CorpusSnapshot snap = SnapshotFrom(Shared(5));
  for (const auto& s : SpecificityRatios(snap)) EXPECT_EQ(s.ratio, 0.0);
  const DomainMatrix jaccard = DomainOverlapMatrix(snap, MatrixMetric::kJaccardAttributes);
  for (std::size_t i = 0; i < jaccard.size(); ++i) {
    for (std::size_t j = 0; j < jaccard.size(); ++j) {
      EXPECT_EQ(jaccard.at(i, j), i == j ? 0.0 : 1.0);
    }
  }
}

TEST(SpecificityTest, Fix1RatiosAndOrder) {
  const auto ratios = SpecificityRatios(IngestCorpus(testing::Fixture("fix1"), {}));
  ASSERT_EQ(ratios.size(), 2u);
  EXPECT_EQ(ratios[0], (DomainSpecificity{"SmartCities", 3, 6, 0.5}));
  EXPECT_EQ(ratios[1], (DomainSpecificity{"SmartEnergy", 3, 6, 0.5}));

  auto decls = Disjoint(3);
  decls.push_back({"D1", "M1", "U", {"x0"}});
  const auto mixed = SpecificityRatios(SnapshotFrom(decls));
  EXPECT_EQ(mixed[0].domain_id, "D2");
  EXPECT_EQ(mixed[1], (DomainSpecificity{"D1", 3, 4, 0.75}));
  EXPECT_EQ(mixed[2], (DomainSpecificity{"D0", 2, 3, 2.0 / 3.0}));
}

class SummaryTest : public ::testing::Test {
 protected:
  SummaryTest() : snapshot_(IngestCorpus(testing::Fixture("fix1"), {})), graph_(BuildGraph(snapshot_)) {}
  CorpusSnapshot snapshot_;
  OntologyGraph graph_;
};

TEST_F(SummaryTest, Contents) {
  SummaryOptions opts;
  opts.timestamp = false;
  opts.top_k = 3;
  const AnalysisReport r = DissonanceSummary(snapshot_, graph_, opts);
  EXPECT_EQ(r.provenance.snapshot_hash, snapshot_.content_hash);
  EXPECT_EQ(r.provenance.graph_hash, GraphHash(graph_));
  EXPECT_EQ(r.census.nodes, 18u);
  EXPECT_EQ(r.census.counts, snapshot_.counts);
  EXPECT_EQ(r.top_k.rows.size(), 3u);
  EXPECT_EQ(r.top_k.rows[0].label, "dataProvider");
  ASSERT_EQ(r.matrices.size(), 3u);
  EXPECT_EQ(r.matrices[2].metric, MatrixMetric::kJaccardAttributes);
  EXPECT_EQ(r.specificity.size(), 2u);
  EXPECT_FALSE(r.generated_at.has_value());
  EXPECT_EQ(DissonanceSummary(snapshot_, graph_, opts), r);
}

TEST_F(SummaryTest, TimestampFormat) {
  const AnalysisReport r = DissonanceSummary(snapshot_, graph_);
  ASSERT_TRUE(r.generated_at.has_value());
  EXPECT_TRUE(std::regex_match(*r.generated_at,
                               std::regex(R"(\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}Z)")));
}

TEST_F(SummaryTest, ProvenanceMismatch) {
  const OntologyGraph other = BuildGraph(IngestCorpus(testing::Fixture("table1"), {}));
  try {
    DissonanceSummary(snapshot_, other);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kProvenance);
  }
}

TEST_F(SummaryTest, MarkdownRendering) {
  SummaryOptions opts;
  opts.timestamp = false;
  const AnalysisReport r = DissonanceSummary(snapshot_, graph_, opts);
  const std::string md = RenderReportMarkdown(r);
  EXPECT_NE(md.find("nodes: 18, edges: 38"), std::string::npos);
  EXPECT_NE(md.find("| 1 | dataProvider | 13 | 2 |"), std::string::npos);
  EXPECT_NE(md.find("| SmartCities | 0 | 0.3333 |"), std::string::npos);
  EXPECT_EQ(md.find("generated"), std::string::npos);
  EXPECT_EQ(RenderReport(r, ReportFormat::kMarkdown), md);

  AnalysisReport stamped = r;
  stamped.generated_at = "2026-01-02T03:04:05Z";
  EXPECT_NE(RenderReportMarkdown(stamped).find("2026-01-02T03:04:05Z"), std::string::npos);

  const std::string json = RenderReport(r, ReportFormat::kCanonicalJson);
  EXPECT_EQ(json, CanonicalDump(ToJson(r)) + "\n");
  EXPECT_EQ(ParseReportFormat("markdown"), ReportFormat::kMarkdown);
  EXPECT_EQ(ParseReportFormat("canonical-json"), ReportFormat::kCanonicalJson);
  EXPECT_EQ(ParseReportFormat("pdf"), std::nullopt);
}

}  // namespace
}  // namespace ontomesh
