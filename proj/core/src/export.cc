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

#include "ontomesh/export.h"

#include "ontomesh/error.h"
#include "ontomesh/file_util.h"
#include "ontomesh/serialize.h"
#include "ontomesh/text_format.h"

namespace ontomesh {
namespace {

struct DotStyle {
  const char* shape;
  const char* color;
};

DotStyle StyleFor(NodeKind kind) {
  switch (kind) {
    case NodeKind::kDomain: return {"doubleoctagon", "black"};
    case NodeKind::kDataModel: return {"box", "steelblue"};
    case NodeKind::kType: return {"diamond", "darkgreen"};
    case NodeKind::kAttribute: return {"ellipse", "gray40"};
  }
  return {"ellipse", "black"};
}

}  // namespace

std::optional<GraphFormat> ParseGraphFormat(std::string_view name) {
  if (name == "graphml") return GraphFormat::kGraphml;
  if (name == "dot") return GraphFormat::kDot;
  if (name == "canonical-json" || name == "json") return GraphFormat::kCanonicalJson;
  return std::nullopt;
}

std::string GraphToGraphml(const OntologyGraph& graph) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\" "
         "xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\" "
         "xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
         "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n";
  out += "  <key id=\"kind\" for=\"node\" attr.name=\"kind\" attr.type=\"string\"/>\n";
  out += "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n";
  out += "  <key id=\"ekind\" for=\"edge\" attr.name=\"kind\" attr.type=\"string\"/>\n";
  out += "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n";
  out += "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (const auto& n : graph.nodes()) {
    out += "    <node id=\"n" + std::to_string(n.id) + "\">";
    out += "<data key=\"kind\">" + std::string(NodeKindName(n.kind)) + "</data>";
    out += "<data key=\"label\">" + XmlEscape(n.label) + "</data>";
    out += "</node>\n";
  }
  std::size_t i = 0;
  for (const auto& e : graph.edges()) {
    out += "    <edge id=\"e" + std::to_string(i++) + "\" source=\"n" + std::to_string(e.u) +
           "\" target=\"n" + std::to_string(e.v) + "\">";
    out += "<data key=\"ekind\">" + std::string(EdgeKindName(e.kind)) + "</data>";
    out += "<data key=\"weight\">" + std::to_string(e.weight) + "</data>";
    out += "</edge>\n";
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

std::string GraphToDot(const OntologyGraph& graph) {
  std::string out = "graph ontology {\n";
  for (const auto& n : graph.nodes()) {
    const DotStyle style = StyleFor(n.kind);
    out += "  n" + std::to_string(n.id) + " [label=" + DotQuote(n.label) + ", kind=" +
           std::string(NodeKindName(n.kind)) + ", shape=" + style.shape + ", color=" +
           style.color + "];\n";
  }
  for (const auto& e : graph.edges()) {
    out += "  n" + std::to_string(e.u) + " -- n" + std::to_string(e.v) + " [kind=" +
           std::string(EdgeKindName(e.kind)) + ", label=\"" + std::to_string(e.weight) +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string GraphToCanonicalJson(const OntologyGraph& graph) {
  return CanonicalDump(ToJson(graph));
}

std::size_t ExportGraph(const OntologyGraph& graph, GraphFormat format,
                        const std::filesystem::path& out) {
  switch (format) {
    case GraphFormat::kGraphml: return WriteFileBytes(out, GraphToGraphml(graph));
    case GraphFormat::kDot: return WriteFileBytes(out, GraphToDot(graph));
    case GraphFormat::kCanonicalJson: return WriteFileBytes(out, GraphToCanonicalJson(graph));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown graph format");
}

OntologyGraph ImportGraphJson(const std::filesystem::path& path) {
  const Json doc = ParseJson(ReadFileBytes(path), path.string());
  try {
    return GraphFromJson(doc);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

std::string MatrixToCsv(const DomainMatrix& matrix) {
  std::string out = "domain";
  for (const auto& label : matrix.labels) out += "," + CsvField(label);
  out += "\r\n";
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out += CsvField(matrix.labels[i]);
    for (std::size_t j = 0; j < matrix.size(); ++j) out += "," + FormatNumber(matrix.at(i, j));
    out += "\r\n";
  }
  return out;
}

std::size_t WriteMatrixCsv(const DomainMatrix& matrix, const std::filesystem::path& out) {
  return WriteFileBytes(out, MatrixToCsv(matrix));
}

}  // namespace ontomesh
