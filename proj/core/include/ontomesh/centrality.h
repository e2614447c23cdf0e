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

#ifndef ONTOMESH_CENTRALITY_H_
#define ONTOMESH_CENTRALITY_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontomesh/graph.h"

namespace ontomesh {

enum class CentralityMetric { kDegree, kBetweenness };

std::string_view CentralityMetricName(CentralityMetric metric);  // "degree", ...
std::optional<CentralityMetric> ParseCentralityMetric(std::string_view name);

struct CentralityResult {
  CentralityMetric metric = CentralityMetric::kDegree;
  bool normalized = false;
  bool weighted = false;  // degree only
  std::vector<double> scores;    // indexed by NodeId
  std::vector<NodeId> ranking;   // score desc, then label asc

  bool operator==(const CentralityResult&) const = default;
};

// Orders nodes by score (descending) with ties broken by label, then kind,
// then id, so the ranking is a total order.
std::vector<NodeId> RankByScore(const OntologyGraph& graph, const std::vector<double>& scores);

// Distinct-neighbour count, or the sum of incident weights when `weighted`.
// Normalisation divides by |V|-1 (times the largest edge weight when
// weighted), so scores land in [0, 1]. Graphs with fewer than two nodes
// normalise to 0.
CentralityResult DegreeCentrality(const OntologyGraph& graph, bool normalized,
                                  bool weighted = false);

// Hop-count betweenness over unordered {s, t} pairs, endpoints excluded,
// disconnected pairs contributing nothing. Brandes accumulation; sources are
// split into a fixed number of blocks that are reduced in order, so the
// result is bit-identical for any `threads` (0 = hardware concurrency).
// Normalisation divides by (|V|-1)(|V|-2)/2.
CentralityResult BetweennessCentrality(const OntologyGraph& graph, bool normalized,
                                       unsigned threads = 0);

struct TopAttribute {
  std::string label;
  double score = 0;
  std::size_t domain_spread = 0;  // distinct domains linked by attr_domain edges

  bool operator==(const TopAttribute&) const = default;
};

// First k Attribute nodes in ranking order (all of them if fewer exist).
// Throws kInvalidArgument for k == 0.
std::vector<TopAttribute> TopKAttributes(const CentralityResult& result,
                                         const OntologyGraph& graph, std::size_t k);

}  // namespace ontomesh

#endif  // ONTOMESH_CENTRALITY_H_
