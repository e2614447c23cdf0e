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

#ifndef ONTOMESH_EXPORT_H_
#define ONTOMESH_EXPORT_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ontomesh/domain_matrix.h"
#include "ontomesh/graph.h"

namespace ontomesh {

enum class GraphFormat { kGraphml, kDot, kCanonicalJson };

// "graphml", "dot", "canonical-json" (also "json").
std::optional<GraphFormat> ParseGraphFormat(std::string_view name);

// GraphML 1.0: node keys kind/label, edge keys kind/weight (int), all
// declared before the graph element. Node ids are "n<id>".
std::string GraphToGraphml(const OntologyGraph& graph);
// Undirected DOT graph; node kind sets shape and colour, weight becomes the
// edge label.
std::string GraphToDot(const OntologyGraph& graph);
std::string GraphToCanonicalJson(const OntologyGraph& graph);

std::size_t ExportGraph(const OntologyGraph& graph, GraphFormat format,
                        const std::filesystem::path& out);
// Reads a canonical-json export back. Throws ParseError / Error(kParse).
OntologyGraph ImportGraphJson(const std::filesystem::path& path);

// Header row and first column hold domain labels; CRLF line endings.
std::string MatrixToCsv(const DomainMatrix& matrix);
std::size_t WriteMatrixCsv(const DomainMatrix& matrix, const std::filesystem::path& out);

}  // namespace ontomesh

#endif  // ONTOMESH_EXPORT_H_
