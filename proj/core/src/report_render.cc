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

#include "ontomesh/report_render.h"

#include "ontomesh/file_util.h"
#include "ontomesh/serialize.h"
#include "ontomesh/text_format.h"

namespace ontomesh {
namespace {

std::string MdCell(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

std::string_view MatrixTitle(MatrixMetric m) {
  switch (m) {
    case MatrixMetric::kSharedModels: return "Shared data models per domain pair";
    case MatrixMetric::kSharedAttributes: return "Shared attributes per domain pair";
    case MatrixMetric::kJaccardAttributes: return "Attribute-set Jaccard similarity";
  }
  return "";
}

void AppendMatrix(std::string& out, const DomainMatrix& m) {
  out += "\n## " + std::string(MatrixTitle(m.metric)) + " (`" +
         std::string(MatrixMetricName(m.metric)) + "`)\n\n";
  out += "| domain |";
  for (const auto& l : m.labels) out += " " + MdCell(l) + " |";
  out += "\n|---|";
  for (std::size_t i = 0; i < m.size(); ++i) out += "---:|";
  out += "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += "| " + MdCell(m.labels[i]) + " |";
    for (std::size_t j = 0; j < m.size(); ++j) out += " " + FormatDecimal(m.at(i, j), 4) + " |";
    out += "\n";
  }
}

}  // namespace

std::optional<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  if (name == "canonical-json" || name == "json") return ReportFormat::kCanonicalJson;
  return std::nullopt;
}

std::string RenderReportMarkdown(const AnalysisReport& r) {
  std::string out = "# Ontology dissonance report\n\n";
  out += "- source: `" + r.provenance.source_uri + "`\n";
  out += "- snapshot: `" + r.provenance.snapshot_hash + "`\n";
  out += "- graph: `" + r.provenance.graph_hash + "`\n";
  out += std::string("- containment edges: ") + (r.provenance.containment_edges ? "yes" : "no") +
         "\n";
  if (r.generated_at) out += "- generated: " + *r.generated_at + "\n";

  const auto& c = r.census;
  out += "\n## Census\n\n";
  out += "nodes: " + std::to_string(c.nodes) + ", edges: " + std::to_string(c.edges.total_edges) +
         "\n\n";
  out += "| level | nodes |\n|---|---:|\n";
  out += "| Domain | " + std::to_string(c.counts.n_domains) + " |\n";
  out += "| DataModel | " + std::to_string(c.counts.n_models) + " |\n";
  out += "| Type | " + std::to_string(c.counts.n_types) + " |\n";
  out += "| Attribute | " + std::to_string(c.counts.n_distinct_attributes) + " |\n";
  out += "\n| edge kind | edges | total weight |\n|---|---:|---:|\n";
  for (const auto& [kind, k] : c.edges.by_kind) {
    out += "| " + std::string(EdgeKindName(kind)) + " | " + std::to_string(k.count) + " | " +
           std::to_string(k.weight) + " |\n";
  }
  out += "| total | " + std::to_string(c.edges.total_edges) + " | " +
         std::to_string(c.edges.total_weight) + " |\n";

  const auto& t = r.top_k;
  out += "\n## Central attributes (" + std::string(CentralityMetricName(t.metric));
  if (t.weighted) out += ", weighted";
  if (t.normalized) out += ", normalized";
  out += ", top " + std::to_string(t.k) + ")\n\n";
  out += "| rank | attribute | score | domains |\n|---:|---|---:|---:|\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    out += "| " + std::to_string(i + 1) + " | " + MdCell(row.label) + " | " +
           FormatDecimal(row.score, 6) + " | " + std::to_string(row.domain_spread) + " |\n";
  }

  out += "\n## Domain specificity\n\n";
  out += "Share of each domain's attributes that no other domain uses; higher means a more "
         "isolated vocabulary.\n\n";
  out += "| rank | domain | specific | total | ratio |\n|---:|---|---:|---:|---:|\n";
  for (std::size_t i = 0; i < r.specificity.size(); ++i) {
    const auto& s = r.specificity[i];
    out += "| " + std::to_string(i + 1) + " | " + MdCell(s.domain_id) + " | " +
           std::to_string(s.specific) + " | " + std::to_string(s.total) + " | " +
           FormatDecimal(s.ratio, 4) + " |\n";
  }

  for (const auto& m : r.matrices) AppendMatrix(out, m);
  return out;
}

std::string RenderReport(const AnalysisReport& report, ReportFormat format) {
  if (format == ReportFormat::kMarkdown) return RenderReportMarkdown(report);
  return CanonicalDump(ToJson(report)) + "\n";
}

std::size_t WriteReport(const AnalysisReport& report, const std::filesystem::path& out,
                        ReportFormat format) {
  return WriteFileBytes(out, RenderReport(report, format));
}

}  // namespace ontomesh
