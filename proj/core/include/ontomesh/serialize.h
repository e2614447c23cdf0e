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

#ifndef ONTOMESH_SERIALIZE_H_
#define ONTOMESH_SERIALIZE_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "ontomesh/centrality.h"
#include "ontomesh/corpus.h"
#include "ontomesh/domain_matrix.h"
#include "ontomesh/graph.h"
#include "ontomesh/report.h"

// Canonical JSON forms of every artifact. Objects use sorted keys and no
// insignificant whitespace, so structurally equal values serialize to
// identical bytes. The *FromJson functions throw Error(kParse) on documents
// that do not follow the schema.
namespace ontomesh {

using Json = nlohmann::json;

// Compact dump with sorted keys; throws Error(kInternal) for strings that
// are not valid UTF-8.
std::string CanonicalDump(const Json& value);
// Throws ParseError.
Json ParseJson(std::string_view text, std::string_view source);

// Snapshot records: one object per record with a "kind" discriminator
// (manifest, domain, model, type, occurrence). The envelope is
// {"kind": "snapshot", "records": [...]}.
Json ToJson(const CorpusSnapshot& snapshot);
CorpusSnapshot SnapshotFromJson(const Json& doc);
// Newline-delimited form: manifest line first, LF terminated.
std::string SnapshotToNdjson(const CorpusSnapshot& snapshot);
CorpusSnapshot SnapshotFromNdjson(std::string_view text);

// {"format": "ontomesh.graph/1", "provenance": {...},
//  "nodes": [{"id", "kind", "label", "metadata"}],
//  "edges": [{"u", "v", "kind", "weight"}]}
Json ToJson(const OntologyGraph& graph);
OntologyGraph GraphFromJson(const Json& doc);
// SHA-256 of the canonical graph document.
std::string GraphHash(const OntologyGraph& graph);

Json ToJson(const CentralityResult& result);
CentralityResult CentralityFromJson(const Json& doc);

Json ToJson(const DomainMatrix& matrix);
DomainMatrix MatrixFromJson(const Json& doc);

Json ToJson(const AnalysisReport& report);
AnalysisReport ReportFromJson(const Json& doc);

}  // namespace ontomesh

#endif  // ONTOMESH_SERIALIZE_H_
