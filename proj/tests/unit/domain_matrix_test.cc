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

#include "ontomesh/domain_matrix.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ontomesh/ingest.h"
#include "support/test_support.h"

namespace ontomesh {
namespace {

using testing::SnapshotFrom;

// Properties every overlap matrix must satisfy, checked against set sizes
// recomputed straight from the occurrences.
void ExpectMatrixProperties(const CorpusSnapshot& snap) {
  const auto vocab = AttributesByDomain(snap);
  std::vector<std::size_t> sizes;
  for (const auto& [d, attrs] : vocab) sizes.push_back(attrs.size());

  for (MatrixMetric metric : kAllMatrixMetrics) {
    const DomainMatrix m = DomainOverlapMatrix(snap, metric);
    EXPECT_EQ(m.metric, metric);
    const std::size_t n = m.size();
    ASSERT_EQ(m.cells.size(), n * n);
    if (snap.domains.size() < 2) {
      EXPECT_EQ(n, 1u);
      continue;
    }
    ASSERT_EQ(n, snap.domains.size());
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(m.labels[i], snap.domains[i].domain_id);
      EXPECT_EQ(m.at(i, i), 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(m.at(i, j), m.at(j, i));
        EXPECT_GE(m.at(i, j), 0.0);
        if (metric == MatrixMetric::kJaccardAttributes) EXPECT_LE(m.at(i, j), 1.0);
        if (metric == MatrixMetric::kSharedAttributes) {
          EXPECT_LE(m.at(i, j), static_cast<double>(std::min(sizes[i], sizes[j])));
        }
      }
    }
  }
}

TEST(DomainMatrixTest, Fix1Values) {
  const CorpusSnapshot snap = IngestCorpus(testing::Fixture("fix1"), {});
  const DomainMatrix models = DomainOverlapMatrix(snap, MatrixMetric::kSharedModels);
  EXPECT_EQ(models.labels, (std::vector<std::string>{"SmartCities", "SmartEnergy"}));
  EXPECT_EQ(models.cells, (std::vector<double>{0, 1, 1, 0}));
  EXPECT_EQ(DomainOverlapMatrix(snap, MatrixMetric::kSharedAttributes).cells,
            (std::vector<double>{0, 3, 3, 0}));
  // {dataProvider, location, temperature} over the 9-attribute union.
  EXPECT_EQ(DomainOverlapMatrix(snap, MatrixMetric::kJaccardAttributes).at(0, 1), 3.0 / 9.0);
  ExpectMatrixProperties(snap);
}

TEST(DomainMatrixTest, PropertiesOnRandomSnapshots) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    testing::RandomCorpusParams params;
    params.domains = 1 + rng() % 7;
    params.models = params.domains + rng() % 6;
    params.vocabulary = 5 + rng() % 40;
    ExpectMatrixProperties(testing::RandomSnapshot(rng, params));
  }
}

TEST(DomainMatrixTest, JaccardMatchesOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const CorpusSnapshot snap = testing::RandomSnapshot(rng, {});
    const auto vocab = AttributesByDomain(snap);
    const DomainMatrix m = DomainOverlapMatrix(snap, MatrixMetric::kJaccardAttributes);
    std::size_t i = 0;
    for (const auto& [di, ai] : vocab) {
      std::size_t j = 0;
      for (const auto& [dj, aj] : vocab) {
        if (i != j) {
          std::vector<std::string> both, either;
          std::set_intersection(ai.begin(), ai.end(), aj.begin(), aj.end(),
                                std::back_inserter(both));
          std::set_union(ai.begin(), ai.end(), aj.begin(), aj.end(), std::back_inserter(either));
          const double expected =
              either.empty() ? 0.0
                             : static_cast<double>(both.size()) / static_cast<double>(either.size());
          EXPECT_EQ(m.at(i, j), expected);
        }
        ++j;
      }
      ++i;
    }
  }
}

TEST(DomainMatrixTest, MonotoneUnderAddedOccurrences) {
  std::mt19937_64 rng(4321);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<testing::TypeDecl> decls;
    std::uniform_int_distribution<int> pick(0, 5);
    for (int k = 0; k < 8; ++k) {
      decls.push_back({"D" + std::to_string(pick(rng) % 4), "M" + std::to_string(k), "T",
                       {"a" + std::to_string(pick(rng)), "b" + std::to_string(pick(rng))}});
    }
    for (int d = 0; d < 4; ++d) decls.push_back({"D" + std::to_string(d), "Base" + std::to_string(d), "T", {"z"}});
    const CorpusSnapshot before = SnapshotFrom(decls);

    // Add an occurrence: an existing model's type also seen in another domain,
    // or a new attribute on an existing type.
    auto grown_decls = decls;
    auto extra = decls[static_cast<std::size_t>(pick(rng))];
    if (trial % 2 == 0) {
      extra.domain = "D" + std::to_string(pick(rng) % 4);
    } else {
      extra.attributes.push_back("c" + std::to_string(pick(rng)));
    }
    grown_decls.push_back(extra);
    const CorpusSnapshot after = SnapshotFrom(grown_decls);
    ASSERT_EQ(before.domains.size(), after.domains.size());

    for (MatrixMetric metric : {MatrixMetric::kSharedModels, MatrixMetric::kSharedAttributes}) {
      const DomainMatrix a = DomainOverlapMatrix(before, metric);
      const DomainMatrix b = DomainOverlapMatrix(after, metric);
      for (std::size_t i = 0; i < a.cells.size(); ++i) EXPECT_GE(b.cells[i], a.cells[i]);
    }
  }
}

TEST(DomainMatrixTest, SingleDomainWarns) {
  const CorpusSnapshot snap = IngestCorpus(testing::Fixture("table1"), {});
  Diagnostics diag;
  const DomainMatrix m = DomainOverlapMatrix(snap, MatrixMetric::kJaccardAttributes, &diag);
  EXPECT_EQ(m.labels, std::vector<std::string>{"SmartCities"});
  EXPECT_EQ(m.cells, std::vector<double>{0});
  EXPECT_EQ(diag.warnings().size(), 1u);
}

TEST(DomainMatrixTest, MetricNames) {
  EXPECT_EQ(MatrixMetricName(MatrixMetric::kSharedModels), "shared_models");
  EXPECT_EQ(ParseMatrixMetric("jaccard-attributes"), MatrixMetric::kJaccardAttributes);
  EXPECT_EQ(ParseMatrixMetric("shared_attributes"), MatrixMetric::kSharedAttributes);
  EXPECT_EQ(ParseMatrixMetric("cosine"), std::nullopt);
}

}  // namespace
}  // namespace ontomesh
