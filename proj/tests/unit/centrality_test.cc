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

#include "ontomesh/centrality.h"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <random>

#include "ontomesh/error.h"
#include "ontomesh/ingest.h"
#include "support/test_support.h"

namespace ontomesh {
namespace {

using testing::EdgeList;
using testing::ToAttributeGraph;

EdgeList Star(std::size_t leaves) {
  EdgeList s{leaves + 1, {}, {}};
  for (std::uint32_t i = 1; i <= leaves; ++i) {
    s.edges.emplace_back(0, i);
    s.weights.push_back(1);
  }
  return s;
}

EdgeList Path(std::size_t n) {
  EdgeList p{n, {}, {}};
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    p.edges.emplace_back(i, i + 1);
    p.weights.push_back(1);
  }
  return p;
}

EdgeList Complete(std::size_t n) {
  EdgeList k{n, {}, {}};
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      k.edges.emplace_back(u, v);
      k.weights.push_back(1);
    }
  }
  return k;
}

TEST(DegreeTest, Star) {
  const CentralityResult r = DegreeCentrality(ToAttributeGraph(Star(5)), false);
  EXPECT_EQ(r.scores, (std::vector<double>{5, 1, 1, 1, 1, 1}));
  EXPECT_EQ(r.ranking.front(), 0u);
  const CentralityResult n = DegreeCentrality(ToAttributeGraph(Star(5)), true);
  EXPECT_EQ(n.scores[0], 1.0);
  EXPECT_EQ(n.scores[1], 0.2);
}

TEST(DegreeTest, WeightedSumsIncidentWeights) {
  EdgeList g{3, {{0, 1}, {1, 2}}, {4, 2}};
  const CentralityResult r = DegreeCentrality(ToAttributeGraph(g), false, true);
  EXPECT_EQ(r.scores, (std::vector<double>{4, 6, 2}));
  EXPECT_TRUE(r.weighted);
  const CentralityResult n = DegreeCentrality(ToAttributeGraph(g), true, true);
  // divided by (n - 1) * max weight
  EXPECT_DOUBLE_EQ(n.scores[1], 6.0 / 8.0);
}

TEST(DegreeTest, TinyGraphsNormaliseToZero) {
  EXPECT_EQ(DegreeCentrality(ToAttributeGraph(EdgeList{1, {}, {}}), true).scores,
            std::vector<double>{0});
  EXPECT_TRUE(DegreeCentrality(ToAttributeGraph(EdgeList{0, {}, {}}), true).scores.empty());
}

TEST(DegreeTest, EqualsAdjacencyRowSums) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 29;
    const EdgeList list = testing::RandomEdgeList(rng, n, 0.05 + 0.9 * (trial / 50.0), 5);
    const OntologyGraph g = ToAttributeGraph(list);
    for (bool weighted : {false, true}) {
      const auto adj = testing::AdjacencyMatrix(list, weighted);
      const CentralityResult r = DegreeCentrality(g, false, weighted);
      for (std::size_t v = 0; v < n; ++v) {
        std::uint64_t row = 0;
        for (std::uint64_t x : adj[v]) row += x;
        EXPECT_EQ(r.scores[v], static_cast<double>(row));
      }
    }
  }
}

TEST(DegreeTest, Fix1Hub) {
  const OntologyGraph g = BuildGraph(IngestCorpus(testing::Fixture("fix1"), {}));
  const CentralityResult r = DegreeCentrality(g, false);
  const auto top = TopKAttributes(r, g, 3);
  ASSERT_EQ(top.size(), 3u);
  EXPECT_EQ(top[0], (TopAttribute{"dataProvider", 13, 2}));
  EXPECT_EQ(top[1], (TopAttribute{"location", 7, 2}));
  // Ties broken by label.
  EXPECT_EQ(top[2].label, "activePower");
}

TEST(BetweennessTest, StarPathComplete) {
  const CentralityResult star = BetweennessCentrality(ToAttributeGraph(Star(4)), false);
  EXPECT_EQ(star.scores, (std::vector<double>{6, 0, 0, 0, 0}));
  EXPECT_EQ(BetweennessCentrality(ToAttributeGraph(Star(4)), true).scores[0], 1.0);

  const CentralityResult path = BetweennessCentrality(ToAttributeGraph(Path(5)), false);
  EXPECT_EQ(path.scores, (std::vector<double>{0, 3, 4, 3, 0}));

  const CentralityResult k4 = BetweennessCentrality(ToAttributeGraph(Complete(4)), false);
  EXPECT_EQ(k4.scores, (std::vector<double>(4, 0.0)));
}

TEST(BetweennessTest, SplitsAcrossEqualPaths) {
  // 4-cycle: each pair of opposite nodes has two shortest paths.
  EdgeList c4{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {1, 1, 1, 1}};
  EXPECT_EQ(BetweennessCentrality(ToAttributeGraph(c4), false).scores,
            (std::vector<double>(4, 0.5)));
}

TEST(BetweennessTest, IgnoresWeights) {
  EdgeList heavy{3, {{0, 1}, {1, 2}}, {9, 1}};
  EXPECT_EQ(BetweennessCentrality(ToAttributeGraph(heavy), false).scores,
            (std::vector<double>{0, 1, 0}));
}

TEST(BetweennessTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(20240417);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const double p = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    const EdgeList list = testing::RandomEdgeList(rng, n, p);
    const std::vector<double> expected = testing::BruteForceBetweenness(list);
    const CentralityResult r = BetweennessCentrality(ToAttributeGraph(list), false, 2);
    ASSERT_EQ(r.scores.size(), n);
    for (std::size_t v = 0; v < n; ++v) {
      EXPECT_NEAR(r.scores[v], expected[v], 1e-9) << "trial " << trial << " node " << v;
    }
  }
}

TEST(BetweennessTest, NormalisationIsPairCount) {
  std::mt19937_64 rng(5);
  const EdgeList list = testing::RandomEdgeList(rng, 25, 0.2);
  const OntologyGraph g = ToAttributeGraph(list);
  const auto raw = BetweennessCentrality(g, false).scores;
  const auto norm = BetweennessCentrality(g, true).scores;
  const double pairs = 24.0 * 23.0 / 2.0;
  for (std::size_t v = 0; v < raw.size(); ++v) {
    EXPECT_NEAR(norm[v], raw[v] / pairs, 1e-12);
    EXPECT_GE(norm[v], 0.0);
    EXPECT_LE(norm[v], 1.0);
  }
}

TEST(BetweennessTest, RankingInvariantUnderNormalisation) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const OntologyGraph g = ToAttributeGraph(testing::RandomEdgeList(rng, 30, 0.15));
    EXPECT_EQ(BetweennessCentrality(g, false).ranking, BetweennessCentrality(g, true).ranking);
    EXPECT_EQ(DegreeCentrality(g, false).ranking, DegreeCentrality(g, true).ranking);
  }
}

TEST(BetweennessTest, BitIdenticalAcrossThreadCounts) {
  std::mt19937_64 rng(8);
  const OntologyGraph g = ToAttributeGraph(testing::RandomEdgeList(rng, 300, 0.03));
  const CentralityResult one = BetweennessCentrality(g, true, 1);
  for (unsigned threads : {2u, 3u, 8u, 0u}) {
    const CentralityResult many = BetweennessCentrality(g, true, threads);
    ASSERT_EQ(many.scores.size(), one.scores.size());
    for (std::size_t v = 0; v < one.scores.size(); ++v) {
      EXPECT_EQ(std::bit_cast<std::uint64_t>(many.scores[v]),
                std::bit_cast<std::uint64_t>(one.scores[v]));
    }
  }
}

TEST(BetweennessTest, DisconnectedPairsContributeNothing) {
  EdgeList two_paths{6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}, {1, 1, 1, 1}};
  EXPECT_EQ(BetweennessCentrality(ToAttributeGraph(two_paths), false).scores,
            (std::vector<double>{0, 1, 0, 0, 1, 0}));
}

TEST(RankingTest, TotalOrder) {
  const OntologyGraph g = ToAttributeGraph(Complete(5));
  const auto ranking = RankByScore(g, {1, 3, 3, 0, 1});
  EXPECT_EQ(ranking, (std::vector<NodeId>{1, 2, 0, 4, 3}));
}

TEST(TopKTest, Bounds) {
  const OntologyGraph g = BuildGraph(IngestCorpus(testing::Fixture("table1"), {}));
  const CentralityResult r = DegreeCentrality(g, false);
  const auto all = TopKAttributes(r, g, 14);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0].label, "dataProvider");
  EXPECT_EQ(all[0].score, 3);
  EXPECT_EQ(all[0].domain_spread, 1u);
  try {
    TopKAttributes(r, g, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(CentralityTest, MetricNames) {
  EXPECT_EQ(ParseCentralityMetric("degree"), CentralityMetric::kDegree);
  EXPECT_EQ(ParseCentralityMetric(CentralityMetricName(CentralityMetric::kBetweenness)),
            CentralityMetric::kBetweenness);
  EXPECT_EQ(ParseCentralityMetric("pagerank"), std::nullopt);
}

}  // namespace
}  // namespace ontomesh
