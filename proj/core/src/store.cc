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

#include "ontomesh/store.h"

#include <algorithm>

#include "ontomesh/file_util.h"
#include "ontomesh/hash.h"
#include "ontomesh/serialize.h"

namespace fs = std::filesystem;

namespace ontomesh {
namespace {

constexpr std::string_view kIndexFormat = "ontomesh.store/1";

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Artifact DecodeArtifact(const std::string& kind, const Json& doc) {
  if (kind == "snapshot") return SnapshotFromJson(doc);
  if (kind == "graph") return GraphFromJson(doc);
  if (kind == "report") return ReportFromJson(doc);
  if (kind == "centrality") return CentralityFromJson(doc);
  if (kind == "matrix") return MatrixFromJson(doc);
  throw Error(ErrorCode::kParse, "unknown artifact kind '" + kind + "'");
}

}  // namespace

std::string_view ArtifactKind(const Artifact& artifact) {
  return std::visit(Overloaded{
                        [](const CorpusSnapshot&) { return std::string_view("snapshot"); },
                        [](const OntologyGraph&) { return std::string_view("graph"); },
                        [](const AnalysisReport&) { return std::string_view("report"); },
                        [](const CentralityResult&) { return std::string_view("centrality"); },
                        [](const DomainMatrix&) { return std::string_view("matrix"); },
                    },
                    artifact);
}

std::string SerializeArtifact(const Artifact& artifact) {
  return std::visit([](const auto& value) { return CanonicalDump(ToJson(value)); }, artifact);
}

bool IsValidArtifactName(std::string_view name) {
  if (name.empty() || name == "." || name == "..") return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '.' || c == '_' || c == '-';
  });
}

Store Store::Open(const fs::path& root) {
  std::error_code ec;
  fs::create_directories(root / "objects", ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create store at '" + root.string() + "'");
  return Store(root);
}

fs::path Store::ObjectPath(std::string_view hash) const {
  return root_ / "objects" / (std::string(hash) + ".json");
}

std::map<std::string, IndexEntry> Store::LoadIndex() const {
  const fs::path path = root_ / "index.json";
  std::map<std::string, IndexEntry> index;
  if (!fs::exists(path)) return index;
  Json doc;
  try {
    doc = ParseJson(ReadFileBytes(path), path.string());
    for (const auto& [name, e] : doc.at("artifacts").items()) {
      index[name] = IndexEntry{e.at("kind").get<std::string>(), e.at("hash").get<std::string>(),
                               e.at("created_at").get<std::string>()};
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw Error(ErrorCode::kCorruption, "store index '" + path.string() + "' is unreadable");
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::kCorruption, "store index '" + path.string() + "' is malformed");
  }
  return index;
}

void Store::SaveIndex(const std::map<std::string, IndexEntry>& index) const {
  Json artifacts = Json::object();
  for (const auto& [name, e] : index) {
    artifacts[name] = {{"kind", e.kind}, {"hash", e.hash}, {"created_at", e.created_at}};
  }
  const Json doc = {{"format", kIndexFormat}, {"artifacts", std::move(artifacts)}};
  WriteFileAtomic(root_ / "index.json", CanonicalDump(doc));
}

std::string Store::Put(std::string_view name, const Artifact& artifact, bool overwrite) {
  if (!IsValidArtifactName(name)) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid artifact name '" + std::string(name) + "' (allowed: [A-Za-z0-9._-]+)");
  }
  const std::string bytes = SerializeArtifact(artifact);
  const std::string hash = Sha256Hex(bytes);
  const std::string kind(ArtifactKind(artifact));

  auto index = LoadIndex();
  auto it = index.find(std::string(name));
  if (it != index.end()) {
    if (it->second.hash == hash && it->second.kind == kind && fs::exists(ObjectPath(hash))) {
      return hash;
    }
    if (!overwrite) {
      throw Error(ErrorCode::kConflict, "artifact '" + std::string(name) +
                                            "' already exists with different content "
                                            "(use --overwrite)");
    }
  }

  const fs::path object = ObjectPath(hash);
  if (!fs::exists(object)) WriteFileAtomic(object, bytes);
  index[std::string(name)] = IndexEntry{kind, hash, UtcTimestamp()};
  SaveIndex(index);
  return hash;
}

Artifact Store::Get(std::string_view name) const {
  const auto index = LoadIndex();
  auto it = index.find(std::string(name));
  if (it == index.end()) {
    throw Error(ErrorCode::kNotFound, "artifact '" + std::string(name) + "' not found in store");
  }
  const fs::path object = ObjectPath(it->second.hash);
  std::string bytes;
  try {
    bytes = ReadFileBytes(object);
  } catch (const Error&) {
    throw Error(ErrorCode::kCorruption, "object for '" + std::string(name) + "' is missing");
  }
  if (Sha256Hex(bytes) != it->second.hash) {
    throw Error(ErrorCode::kCorruption,
                "object for '" + std::string(name) + "' fails hash verification");
  }
  try {
    return DecodeArtifact(it->second.kind, ParseJson(bytes, object.string()));
  } catch (const Error& e) {
    throw Error(ErrorCode::kCorruption,
                "object for '" + std::string(name) + "' cannot be decoded: " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kCorruption,
                "object for '" + std::string(name) + "' cannot be decoded: " + e.what());
  }
}

bool Store::Contains(std::string_view name) const {
  return LoadIndex().contains(std::string(name));
}

std::map<std::string, IndexEntry> Store::List() const { return LoadIndex(); }

}  // namespace ontomesh
