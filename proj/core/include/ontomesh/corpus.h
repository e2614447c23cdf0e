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

#ifndef ONTOMESH_CORPUS_H_
#define ONTOMESH_CORPUS_H_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ontomesh {

using Metadata = std::map<std::string, std::string>;

// An activity sector, e.g. "SmartCities".
struct DomainRecord {
  std::string domain_id;
  std::string display_name;

  bool operator==(const DomainRecord&) const = default;
};

// A data model. A model present under several domain directories is unified
// into a single record carrying every domain.
struct DataModelRecord {
  std::string model_id;
  std::string display_name;
  std::set<std::string> domain_ids;

  bool operator==(const DataModelRecord&) const = default;
};

// An entity definition inside a model. type_id is "<model_id>/<name>".
struct TypeRecord {
  std::string type_id;
  std::string display_name;
  std::string model_id;
  std::vector<std::string> attribute_names;  // source order, no duplicates

  bool operator==(const TypeRecord&) const = default;
};

// One attribute declared by one type, seen within one domain.
struct AttributeOccurrence {
  std::string attribute_name;
  std::string type_id;
  std::string model_id;
  std::string domain_id;
  Metadata metadata;  // "description", "value_type" when declared

  bool operator==(const AttributeOccurrence&) const = default;
};

struct CorpusCounts {
  std::size_t n_domains = 0;
  std::size_t n_models = 0;
  std::size_t n_types = 0;
  std::size_t n_distinct_attributes = 0;

  std::size_t total() const {
    return n_domains + n_models + n_types + n_distinct_attributes;
  }
  bool operator==(const CorpusCounts&) const = default;
};

struct CorpusSnapshot {
  std::string source_uri;
  std::string content_hash;  // hex SHA-256 over every parsed file
  std::vector<DomainRecord> domains;          // sorted by domain_id
  std::vector<DataModelRecord> models;        // sorted by model_id
  std::vector<TypeRecord> types;              // sorted by type_id
  std::vector<AttributeOccurrence> occurrences;  // sorted by (type, domain, attr)
  CorpusCounts counts;

  bool operator==(const CorpusSnapshot&) const = default;
};

// Counts derived from the collections, ignoring the stored counts field.
CorpusCounts RecomputeCounts(const CorpusSnapshot& snapshot);

// Throws Error(kInvariant) naming the first offending record. Checks id
// uniqueness, referential closure, non-empty attribute lists, triple
// uniqueness of occurrences, and that counts match the collections.
void ValidateSnapshot(const CorpusSnapshot& snapshot);

// Sorts all collections into canonical order and recomputes counts.
void Canonicalize(CorpusSnapshot& snapshot);

// Attribute names occurring in each domain, keyed by domain_id. Every
// domain of the snapshot has an entry, possibly empty.
std::map<std::string, std::set<std::string>> AttributesByDomain(
    const CorpusSnapshot& snapshot);

std::string MakeTypeId(const std::string& model_id, const std::string& name);

}  // namespace ontomesh

#endif  // ONTOMESH_CORPUS_H_
