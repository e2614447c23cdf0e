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

#include <algorithm>
#include <chrono>
#include <ctime>
#include <map>

#include "ontomesh/error.h"
#include "ontomesh/serialize.h"

namespace ontomesh {

std::vector<DomainSpecificity> SpecificityRatios(const CorpusSnapshot& snapshot) {
  const auto by_domain = AttributesByDomain(snapshot);
  std::map<std::string, std::size_t> domain_count;
  for (const auto& [domain, names] : by_domain) {
    for (const auto& a : names) ++domain_count[a];
  }

  std::vector<DomainSpecificity> out;
  for (const auto& [domain, names] : by_domain) {
    DomainSpecificity s;
    s.domain_id = domain;
    s.total = names.size();
    for (const auto& a : names) {
      if (domain_count[a] == 1) ++s.specific;
    }
    s.ratio = s.total == 0 ? 0.0
                           : static_cast<double>(s.specific) / static_cast<double>(s.total);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.ratio != b.ratio) return a.ratio > b.ratio;
    return a.domain_id < b.domain_id;
  });
  return out;
}

std::string UtcTimestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

AnalysisReport DissonanceSummary(const CorpusSnapshot& snapshot, const OntologyGraph& graph,
                                 const SummaryOptions& options) {
  if (graph.provenance().snapshot_hash != snapshot.content_hash) {
    throw Error(ErrorCode::kProvenance,
                "graph was built from snapshot " + graph.provenance().snapshot_hash +
                    ", not " + snapshot.content_hash);
  }

  AnalysisReport report;
  report.provenance = ReportProvenance{snapshot.source_uri, snapshot.content_hash,
                                       GraphHash(graph), graph.provenance().containment_edges};
  report.census = ReportCensus{snapshot.counts, graph.node_count(), ComputeEdgeCensus(graph)};

  const CentralityResult centrality =
      options.metric == CentralityMetric::kDegree
          ? DegreeCentrality(graph, options.normalized, options.weighted)
          : BetweennessCentrality(graph, options.normalized, options.threads);
  report.top_k = TopKTable{options.metric, options.normalized,
                           options.metric == CentralityMetric::kDegree && options.weighted,
                           options.top_k, TopKAttributes(centrality, graph, options.top_k)};

  for (MatrixMetric m : kAllMatrixMetrics) {
    report.matrices.push_back(DomainOverlapMatrix(snapshot, m));
  }
  report.specificity = SpecificityRatios(snapshot);
  if (options.timestamp) report.generated_at = UtcTimestamp();
  return report;
}

}  // namespace ontomesh
