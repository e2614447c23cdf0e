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

#ifndef ONTOMESH_STORE_H_
#define ONTOMESH_STORE_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "ontomesh/centrality.h"
#include "ontomesh/corpus.h"
#include "ontomesh/error.h"
#include "ontomesh/domain_matrix.h"
#include "ontomesh/graph.h"
#include "ontomesh/report.h"

namespace ontomesh {

using Artifact =
    std::variant<CorpusSnapshot, OntologyGraph, AnalysisReport, CentralityResult, DomainMatrix>;

// "snapshot", "graph", "report", "centrality", "matrix".
std::string_view ArtifactKind(const Artifact& artifact);

struct IndexEntry {
  std::string kind;
  std::string hash;        // SHA-256 of the stored object bytes
  std::string created_at;  // ISO-8601 UTC

  bool operator==(const IndexEntry&) const = default;
};

// Content-addressed artifact store:
//
//   <root>/index.json            name -> entry
//   <root>/objects/<hash>.json   canonical JSON document
//
// Single writer, many readers; every file is replaced atomically.
class Store {
 public:
  // Creates the directory layout when missing.
  static Store Open(const std::filesystem::path& root);

  // Names must match [A-Za-z0-9._-]+. Re-putting identical content under an
  // existing name is a no-op; different content needs `overwrite`, else
  // kConflict. Returns the object hash.
  std::string Put(std::string_view name, const Artifact& artifact, bool overwrite = false);

  // Verifies the object hash before decoding. kNotFound for unknown names,
  // kCorruption for missing, altered or undecodable objects.
  Artifact Get(std::string_view name) const;

  template <typename T>
  T GetAs(std::string_view name) const;

  bool Contains(std::string_view name) const;
  std::map<std::string, IndexEntry> List() const;
  std::filesystem::path ObjectPath(std::string_view hash) const;
  const std::filesystem::path& root() const { return root_; }

 private:
  explicit Store(std::filesystem::path root) : root_(std::move(root)) {}
  std::map<std::string, IndexEntry> LoadIndex() const;
  void SaveIndex(const std::map<std::string, IndexEntry>& index) const;

  std::filesystem::path root_;
};

bool IsValidArtifactName(std::string_view name);

// Canonical bytes stored for an artifact.
std::string SerializeArtifact(const Artifact& artifact);

template <typename T>
T Store::GetAs(std::string_view name) const {
  Artifact a = Get(name);
  if (auto* value = std::get_if<T>(&a)) return std::move(*value);
  throw Error(ErrorCode::kNotFound, "artifact '" + std::string(name) + "' is a " +
                                        std::string(ArtifactKind(a)) +
                                        ", not the requested kind");
}

}  // namespace ontomesh

#endif  // ONTOMESH_STORE_H_
