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

#include "ontomesh/corpus.h"

#include <gtest/gtest.h>

#include "ontomesh/error.h"
#include "support/test_support.h"

namespace ontomesh {
namespace {

using testing::SnapshotFrom;

CorpusSnapshot SmallSnapshot() {
  return SnapshotFrom({
      {"SmartCities", "UrbanMobility", "ArrivalEstimation", {"dataProvider", "hasTrip"}},
      {"SmartCities", "Weather", "WeatherObserved", {"dataProvider", "temperature"}},
      {"SmartEnergy", "Weather", "WeatherObserved", {"dataProvider", "temperature"}},
  });
}

TEST(CorpusTest, CountsFollowCollections) {
  const CorpusSnapshot snap = SmallSnapshot();
  EXPECT_EQ(snap.counts, (CorpusCounts{2, 2, 2, 3}));
  EXPECT_EQ(snap.counts.total(), 9u);
  EXPECT_EQ(RecomputeCounts(snap), snap.counts);
  EXPECT_NO_THROW(ValidateSnapshot(snap));
}

TEST(CorpusTest, SharedModelListsEveryDomain) {
  const CorpusSnapshot snap = SmallSnapshot();
  ASSERT_EQ(snap.models.size(), 2u);
  EXPECT_EQ(snap.models[1].model_id, "Weather");
  EXPECT_EQ(snap.models[1].domain_ids, (std::set<std::string>{"SmartCities", "SmartEnergy"}));
}

TEST(CorpusTest, AttributesByDomain) {
  const auto by_domain = AttributesByDomain(SmallSnapshot());
  ASSERT_EQ(by_domain.size(), 2u);
  EXPECT_EQ(by_domain.at("SmartCities"),
            (std::set<std::string>{"dataProvider", "hasTrip", "temperature"}));
  EXPECT_EQ(by_domain.at("SmartEnergy"), (std::set<std::string>{"dataProvider", "temperature"}));
}

TEST(CorpusTest, CanonicalizeSortsAndRecounts) {
  CorpusSnapshot snap = SmallSnapshot();
  CorpusSnapshot shuffled = snap;
  std::reverse(shuffled.domains.begin(), shuffled.domains.end());
  std::reverse(shuffled.types.begin(), shuffled.types.end());
  std::reverse(shuffled.occurrences.begin(), shuffled.occurrences.end());
  shuffled.counts = {};
  Canonicalize(shuffled);
  EXPECT_EQ(shuffled, snap);
}

TEST(CorpusTest, MakeTypeId) { EXPECT_EQ(MakeTypeId("Weather", "WeatherObserved"), "Weather/WeatherObserved"); }

void ExpectInvariant(const CorpusSnapshot& snap, const std::string& needle) {
  try {
    ValidateSnapshot(snap);
    FAIL() << "expected kInvariant mentioning " << needle;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvariant);
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

TEST(CorpusTest, ValidateRejectsDanglingModel) {
  CorpusSnapshot snap = SmallSnapshot();
  snap.types[0].model_id = "Nowhere";
  ExpectInvariant(snap, "Nowhere");
}

TEST(CorpusTest, ValidateRejectsUnknownDomainOnModel) {
  CorpusSnapshot snap = SmallSnapshot();
  snap.models[0].domain_ids.insert("Atlantis");
  ExpectInvariant(snap, "Atlantis");
}

TEST(CorpusTest, ValidateRejectsEmptyAttributeList) {
  CorpusSnapshot snap = SmallSnapshot();
  snap.types[0].attribute_names.clear();
  ExpectInvariant(snap, snap.types[0].type_id);
}

TEST(CorpusTest, ValidateRejectsDuplicateOccurrence) {
  CorpusSnapshot snap = SmallSnapshot();
  snap.occurrences.push_back(snap.occurrences.front());
  ExpectInvariant(snap, snap.occurrences.front().attribute_name);
}

TEST(CorpusTest, ValidateRejectsStaleCounts) {
  CorpusSnapshot snap = SmallSnapshot();
  snap.counts.n_distinct_attributes = 99;
  ExpectInvariant(snap, "count");
}

TEST(CorpusTest, RandomSnapshotsAreValid) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const CorpusSnapshot snap = testing::RandomSnapshot(rng, {});
    EXPECT_NO_THROW(ValidateSnapshot(snap));
  }
}

TEST(CorpusTest, PaperScaleCounts) {
  const CorpusSnapshot snap = testing::PaperScaleSnapshot();
  EXPECT_EQ(snap.counts, (CorpusCounts{13, 59, 62, 3496}));
  EXPECT_NO_THROW(ValidateSnapshot(snap));
}

}  // namespace
}  // namespace ontomesh
