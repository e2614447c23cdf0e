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

#include "ontomesh/error.h"
#include "ontomesh/hash.h"

namespace ontomesh {
namespace {

constexpr std::string_view kGraphFormat = "ontomesh.graph/1";
constexpr std::string_view kSnapshotFormat = "ontomesh.snapshot/1";

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kParse, "malformed document: " + what);
}

template <typename T>
T Get(const Json& obj, const char* key) {
  if (!obj.is_object()) Malformed(std::string("expected object holding '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) Malformed(std::string("missing field '") + key + "'");
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    Malformed(std::string("field '") + key + "' has the wrong type");
  }
}

const Json& GetArray(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_array()) {
    Malformed(std::string("missing array '") + key + "'");
  }
  return obj.at(key);
}

Json CountsToJson(const CorpusCounts& c) {
  return {{"n_domains", c.n_domains},
          {"n_models", c.n_models},
          {"n_types", c.n_types},
          {"n_distinct_attributes", c.n_distinct_attributes}};
}

CorpusCounts CountsFromJson(const Json& j) {
  return CorpusCounts{Get<std::size_t>(j, "n_domains"), Get<std::size_t>(j, "n_models"),
                      Get<std::size_t>(j, "n_types"),
                      Get<std::size_t>(j, "n_distinct_attributes")};
}

Json EdgeCensusToJson(const EdgeCensus& c) {
  Json by_kind = Json::object();
  for (const auto& [kind, k] : c.by_kind) {
    by_kind[std::string(EdgeKindName(kind))] = {{"count", k.count}, {"weight", k.weight}};
  }
  return {{"by_kind", by_kind},
          {"total_edges", c.total_edges},
          {"total_weight", c.total_weight}};
}

EdgeCensus EdgeCensusFromJson(const Json& j) {
  EdgeCensus c;
  const auto& by_kind = j.at("by_kind");
  if (!by_kind.is_object()) Malformed("edge census by_kind");
  for (const auto& [name, k] : by_kind.items()) {
    auto kind = ParseEdgeKind(name);
    if (!kind) Malformed("unknown edge kind '" + name + "'");
    c.by_kind[*kind] = KindCensus{Get<std::uint64_t>(k, "count"), Get<std::uint64_t>(k, "weight")};
  }
  c.total_edges = Get<std::uint64_t>(j, "total_edges");
  c.total_weight = Get<std::uint64_t>(j, "total_weight");
  return c;
}

Json SnapshotRecord(const char* kind, Json body) {
  body["kind"] = kind;
  return body;
}

}  // namespace

std::string CanonicalDump(const Json& value) {
  try {
    return value.dump();
  } catch (const nlohmann::json::type_error& e) {
    throw Error(ErrorCode::kInternal, std::string("serialization failed: ") + e.what());
  }
}

Json ParseJson(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(std::string(source) + ": invalid JSON at byte " + std::to_string(offset),
                     offset);
  }
}

// Snapshot -----------------------------------------------------------------

Json ToJson(const CorpusSnapshot& s) {
  Json records = Json::array();
  records.push_back(SnapshotRecord("manifest", {{"format", kSnapshotFormat},
                                                {"source_uri", s.source_uri},
                                                {"content_hash", s.content_hash},
                                                {"counts", CountsToJson(s.counts)}}));
  for (const auto& d : s.domains) {
    records.push_back(SnapshotRecord(
        "domain", {{"domain_id", d.domain_id}, {"display_name", d.display_name}}));
  }
  for (const auto& m : s.models) {
    records.push_back(SnapshotRecord("model", {{"model_id", m.model_id},
                                               {"display_name", m.display_name},
                                               {"domain_ids", m.domain_ids}}));
  }
  for (const auto& t : s.types) {
    records.push_back(SnapshotRecord("type", {{"type_id", t.type_id},
                                              {"display_name", t.display_name},
                                              {"model_id", t.model_id},
                                              {"attribute_names", t.attribute_names}}));
  }
  for (const auto& o : s.occurrences) {
    records.push_back(SnapshotRecord("occurrence", {{"attribute_name", o.attribute_name},
                                                    {"type_id", o.type_id},
                                                    {"model_id", o.model_id},
                                                    {"domain_id", o.domain_id},
                                                    {"metadata", o.metadata}}));
  }
  return {{"kind", "snapshot"}, {"records", std::move(records)}};
}

namespace {

CorpusSnapshot SnapshotFromRecords(const std::vector<const Json*>& records) {
  CorpusSnapshot s;
  bool have_manifest = false;
  for (const Json* r : records) {
    const auto kind = Get<std::string>(*r, "kind");
    if (kind == "manifest") {
      if (have_manifest) Malformed("duplicate snapshot manifest");
      if (Get<std::string>(*r, "format") != kSnapshotFormat) Malformed("unknown snapshot format");
      s.source_uri = Get<std::string>(*r, "source_uri");
      s.content_hash = Get<std::string>(*r, "content_hash");
      s.counts = CountsFromJson(r->at("counts"));
      have_manifest = true;
    } else if (kind == "domain") {
      s.domains.push_back({Get<std::string>(*r, "domain_id"), Get<std::string>(*r, "display_name")});
    } else if (kind == "model") {
      s.models.push_back({Get<std::string>(*r, "model_id"), Get<std::string>(*r, "display_name"),
                          Get<std::set<std::string>>(*r, "domain_ids")});
    } else if (kind == "type") {
      s.types.push_back({Get<std::string>(*r, "type_id"), Get<std::string>(*r, "display_name"),
                         Get<std::string>(*r, "model_id"),
                         Get<std::vector<std::string>>(*r, "attribute_names")});
    } else if (kind == "occurrence") {
      s.occurrences.push_back({Get<std::string>(*r, "attribute_name"),
                               Get<std::string>(*r, "type_id"), Get<std::string>(*r, "model_id"),
                               Get<std::string>(*r, "domain_id"), Get<Metadata>(*r, "metadata")});
    } else {
      Malformed("unknown snapshot record kind '" + kind + "'");
    }
  }
  if (!have_manifest) Malformed("snapshot has no manifest record");
  return s;
}

}  // namespace

CorpusSnapshot SnapshotFromJson(const Json& doc) {
  if (Get<std::string>(doc, "kind") != "snapshot") Malformed("not a snapshot document");
  std::vector<const Json*> records;
  for (const auto& r : GetArray(doc, "records")) records.push_back(&r);
  return SnapshotFromRecords(records);
}

std::string SnapshotToNdjson(const CorpusSnapshot& snapshot) {
  const Json doc = ToJson(snapshot);
  std::string out;
  for (const auto& record : doc.at("records")) {
    out += CanonicalDump(record);
    out += '\n';
  }
  return out;
}

CorpusSnapshot SnapshotFromNdjson(std::string_view text) {
  std::vector<Json> parsed;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty()) continue;
    parsed.push_back(ParseJson(line, "ndjson line " + std::to_string(line_no)));
  }
  std::vector<const Json*> records;
  for (const auto& r : parsed) records.push_back(&r);
  return SnapshotFromRecords(records);
}

// Graph --------------------------------------------------------------------

Json ToJson(const OntologyGraph& g) {
  Json nodes = Json::array();
  for (const auto& n : g.nodes()) {
    nodes.push_back({{"id", n.id},
                     {"kind", NodeKindName(n.kind)},
                     {"label", n.label},
                     {"metadata", n.metadata}});
  }
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"kind", EdgeKindName(e.kind)}, {"weight", e.weight}});
  }
  const auto& p = g.provenance();
  return {{"format", kGraphFormat},
          {"provenance",
           {{"snapshot_hash", p.snapshot_hash},
            {"containment_edges", p.containment_edges},
            {"parent_graph_hash", p.parent_graph_hash},
            {"subgraph_domain", p.subgraph_domain}}},
          {"nodes", std::move(nodes)},
          {"edges", std::move(edges)}};
}

OntologyGraph GraphFromJson(const Json& doc) {
  if (Get<std::string>(doc, "format") != kGraphFormat) Malformed("not a graph document");
  const Json& p = doc.at("provenance");
  GraphProvenance prov{Get<std::string>(p, "snapshot_hash"), Get<bool>(p, "containment_edges"),
                       Get<std::string>(p, "parent_graph_hash"),
                       Get<std::string>(p, "subgraph_domain")};
  std::vector<GraphNode> nodes;
  for (const auto& n : GetArray(doc, "nodes")) {
    auto kind = ParseNodeKind(Get<std::string>(n, "kind"));
    if (!kind) Malformed("unknown node kind");
    nodes.push_back(GraphNode{Get<NodeId>(n, "id"), *kind, Get<std::string>(n, "label"),
                              Get<Metadata>(n, "metadata")});
  }
  std::vector<GraphEdge> edges;
  for (const auto& e : GetArray(doc, "edges")) {
    auto kind = ParseEdgeKind(Get<std::string>(e, "kind"));
    if (!kind) Malformed("unknown edge kind");
    edges.push_back(GraphEdge{Get<NodeId>(e, "u"), Get<NodeId>(e, "v"), *kind,
                              Get<std::uint64_t>(e, "weight")});
  }
  return OntologyGraph(std::move(nodes), std::move(edges), std::move(prov));
}

std::string GraphHash(const OntologyGraph& graph) {
  return Sha256Hex(CanonicalDump(ToJson(graph)));
}

// Centrality ---------------------------------------------------------------

Json ToJson(const CentralityResult& r) {
  return {{"kind", "centrality"},
          {"metric", CentralityMetricName(r.metric)},
          {"normalized", r.normalized},
          {"weighted", r.weighted},
          {"scores", r.scores},
          {"ranking", r.ranking}};
}

CentralityResult CentralityFromJson(const Json& doc) {
  if (Get<std::string>(doc, "kind") != "centrality") Malformed("not a centrality document");
  auto metric = ParseCentralityMetric(Get<std::string>(doc, "metric"));
  if (!metric) Malformed("unknown centrality metric");
  CentralityResult r{*metric, Get<bool>(doc, "normalized"), Get<bool>(doc, "weighted"),
                     Get<std::vector<double>>(doc, "scores"),
                     Get<std::vector<NodeId>>(doc, "ranking")};
  if (r.scores.size() != r.ranking.size()) Malformed("ranking does not cover every node");
  return r;
}

// Matrix -------------------------------------------------------------------

Json ToJson(const DomainMatrix& m) {
  return {{"kind", "matrix"},
          {"metric", MatrixMetricName(m.metric)},
          {"labels", m.labels},
          {"cells", m.cells}};
}

DomainMatrix MatrixFromJson(const Json& doc) {
  if (Get<std::string>(doc, "kind") != "matrix") Malformed("not a matrix document");
  auto metric = ParseMatrixMetric(Get<std::string>(doc, "metric"));
  if (!metric) Malformed("unknown matrix metric");
  DomainMatrix m{*metric, Get<std::vector<std::string>>(doc, "labels"),
                 Get<std::vector<double>>(doc, "cells")};
  if (m.cells.size() != m.labels.size() * m.labels.size()) Malformed("matrix is not square");
  return m;
}

// Report -------------------------------------------------------------------

Json ToJson(const AnalysisReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.top_k.rows) {
    rows.push_back(
        {{"label", row.label}, {"score", row.score}, {"domain_spread", row.domain_spread}});
  }
  Json matrices = Json::array();
  for (const auto& m : r.matrices) matrices.push_back(ToJson(m));
  Json spec = Json::array();
  for (const auto& s : r.specificity) {
    spec.push_back({{"domain_id", s.domain_id},
                    {"specific", s.specific},
                    {"total", s.total},
                    {"ratio", s.ratio}});
  }
  Json doc = {
      {"kind", "report"},
      {"provenance",
       {{"source_uri", r.provenance.source_uri},
        {"snapshot_hash", r.provenance.snapshot_hash},
        {"graph_hash", r.provenance.graph_hash},
        {"containment_edges", r.provenance.containment_edges}}},
      {"census",
       {{"counts", CountsToJson(r.census.counts)},
        {"nodes", r.census.nodes},
        {"edges", EdgeCensusToJson(r.census.edges)}}},
      {"top_k",
       {{"metric", CentralityMetricName(r.top_k.metric)},
        {"normalized", r.top_k.normalized},
        {"weighted", r.top_k.weighted},
        {"k", r.top_k.k},
        {"rows", std::move(rows)}}},
      {"matrices", std::move(matrices)},
      {"specificity", std::move(spec)},
      {"generated_at", r.generated_at ? Json(*r.generated_at) : Json(nullptr)}};
  return doc;
}

AnalysisReport ReportFromJson(const Json& doc) {
  if (Get<std::string>(doc, "kind") != "report") Malformed("not a report document");
  AnalysisReport r;
  const Json& p = doc.at("provenance");
  r.provenance = ReportProvenance{Get<std::string>(p, "source_uri"),
                                  Get<std::string>(p, "snapshot_hash"),
                                  Get<std::string>(p, "graph_hash"),
                                  Get<bool>(p, "containment_edges")};
  const Json& c = doc.at("census");
  r.census = ReportCensus{CountsFromJson(c.at("counts")), Get<std::size_t>(c, "nodes"),
                          EdgeCensusFromJson(c.at("edges"))};
  const Json& t = doc.at("top_k");
  auto metric = ParseCentralityMetric(Get<std::string>(t, "metric"));
  if (!metric) Malformed("unknown centrality metric");
  r.top_k.metric = *metric;
  r.top_k.normalized = Get<bool>(t, "normalized");
  r.top_k.weighted = Get<bool>(t, "weighted");
  r.top_k.k = Get<std::size_t>(t, "k");
  for (const auto& row : GetArray(t, "rows")) {
    r.top_k.rows.push_back(TopAttribute{Get<std::string>(row, "label"), Get<double>(row, "score"),
                                        Get<std::size_t>(row, "domain_spread")});
  }
  for (const auto& m : GetArray(doc, "matrices")) r.matrices.push_back(MatrixFromJson(m));
  for (const auto& s : GetArray(doc, "specificity")) {
    r.specificity.push_back(DomainSpecificity{Get<std::string>(s, "domain_id"),
                                              Get<std::size_t>(s, "specific"),
                                              Get<std::size_t>(s, "total"),
                                              Get<double>(s, "ratio")});
  }
  if (doc.contains("generated_at") && doc.at("generated_at").is_string()) {
    r.generated_at = doc.at("generated_at").get<std::string>();
  }
  return r;
}

}  // namespace ontomesh
