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

#ifndef ONTOMESH_REPORT_H_
#define ONTOMESH_REPORT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ontomesh/centrality.h"
#include "ontomesh/corpus.h"
#include "ontomesh/domain_matrix.h"
#include "ontomesh/graph.h"

namespace ontomesh {

// Share of a domain's attribute vocabulary that no other domain uses.
struct DomainSpecificity {
  std::string domain_id;
  std::size_t specific = 0;  // attributes occurring only in this domain
  std::size_t total = 0;     // attributes occurring in this domain
  double ratio = 0;          // specific / total; 0 for an empty vocabulary

  bool operator==(const DomainSpecificity&) const = default;
};

// Sorted by ratio (descending), then domain id.
std::vector<DomainSpecificity> SpecificityRatios(const CorpusSnapshot& snapshot);

struct ReportProvenance {
  std::string source_uri;
  std::string snapshot_hash;
  std::string graph_hash;
  bool containment_edges = false;

  bool operator==(const ReportProvenance&) const = default;
};

struct ReportCensus {
  CorpusCounts counts;
  std::size_t nodes = 0;
  EdgeCensus edges;

  bool operator==(const ReportCensus&) const = default;
};

struct TopKTable {
  CentralityMetric metric = CentralityMetric::kDegree;
  bool normalized = false;
  bool weighted = false;
  std::size_t k = 14;
  std::vector<TopAttribute> rows;

  bool operator==(const TopKTable&) const = default;
};

struct AnalysisReport {
  ReportProvenance provenance;
  ReportCensus census;
  TopKTable top_k;
  std::vector<DomainMatrix> matrices;  // one per MatrixMetric, in enum order
  std::vector<DomainSpecificity> specificity;
  std::optional<std::string> generated_at;  // ISO-8601 UTC

  bool operator==(const AnalysisReport&) const = default;
};

struct SummaryOptions {
  std::size_t top_k = 14;
  CentralityMetric metric = CentralityMetric::kDegree;
  bool normalized = false;
  bool weighted = false;
  bool timestamp = true;
  unsigned threads = 0;
};

// Throws kProvenance when the graph was not built from this snapshot.
AnalysisReport DissonanceSummary(const CorpusSnapshot& snapshot, const OntologyGraph& graph,
                                 const SummaryOptions& options = {});

// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string UtcTimestamp();

}  // namespace ontomesh

#endif  // ONTOMESH_REPORT_H_
