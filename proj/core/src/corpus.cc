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

#include "ontomesh/corpus.h"

#include <algorithm>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "ontomesh/error.h"

namespace ontomesh {
namespace {

[[noreturn]] void Violation(const std::string& record, const std::string& what) {
  throw Error(ErrorCode::kInvariant,
              "snapshot invariant violated at " + record + ": " + what);
}

auto OccurrenceKey(const AttributeOccurrence& o) {
  return std::tie(o.type_id, o.domain_id, o.attribute_name);
}

}  // namespace

std::string MakeTypeId(const std::string& model_id, const std::string& name) {
  return model_id + "/" + name;
}

CorpusCounts RecomputeCounts(const CorpusSnapshot& snapshot) {
  std::unordered_set<std::string_view> names;
  for (const auto& o : snapshot.occurrences) names.insert(o.attribute_name);
  return CorpusCounts{snapshot.domains.size(), snapshot.models.size(),
                      snapshot.types.size(), names.size()};
}

void ValidateSnapshot(const CorpusSnapshot& snapshot) {
  std::unordered_set<std::string_view> domains;
  for (const auto& d : snapshot.domains) {
    if (d.domain_id.empty()) Violation("domain #", "empty domain_id");
    if (!domains.insert(d.domain_id).second) {
      Violation("domain " + d.domain_id, "duplicate domain_id");
    }
  }

  std::unordered_map<std::string_view, const DataModelRecord*> models;
  for (const auto& m : snapshot.models) {
    if (m.model_id.empty()) Violation("model #", "empty model_id");
    if (!models.emplace(m.model_id, &m).second) {
      Violation("model " + m.model_id, "duplicate model_id");
    }
    if (m.domain_ids.empty()) Violation("model " + m.model_id, "no domains");
    for (const auto& d : m.domain_ids) {
      if (!domains.contains(d)) {
        Violation("model " + m.model_id, "unknown domain '" + d + "'");
      }
    }
  }

  std::unordered_map<std::string_view, const TypeRecord*> types;
  for (const auto& t : snapshot.types) {
    if (t.type_id.empty()) Violation("type #", "empty type_id");
    if (!types.emplace(t.type_id, &t).second) {
      Violation("type " + t.type_id, "duplicate type_id");
    }
    if (!models.contains(t.model_id)) {
      Violation("type " + t.type_id, "unknown model '" + t.model_id + "'");
    }
    if (t.attribute_names.empty()) {
      Violation("type " + t.type_id, "type declares no attributes");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& a : t.attribute_names) {
      if (a.empty()) Violation("type " + t.type_id, "empty attribute name");
      if (!seen.insert(a).second) {
        Violation("type " + t.type_id, "duplicate attribute '" + a + "'");
      }
    }
  }

  std::set<std::tuple<std::string_view, std::string_view, std::string_view>>
      triples;
  for (const auto& o : snapshot.occurrences) {
    const std::string where = "occurrence (" + o.attribute_name + ", " +
                              o.type_id + ", " + o.domain_id + ")";
    auto type = types.find(o.type_id);
    if (type == types.end()) Violation(where, "unknown type");
    if (type->second->model_id != o.model_id) {
      Violation(where, "model does not own the type");
    }
    auto model = models.find(o.model_id);
    if (model == models.end()) Violation(where, "unknown model");
    if (!model->second->domain_ids.contains(o.domain_id)) {
      Violation(where, "domain is not a domain of the model");
    }
    const auto& names = type->second->attribute_names;
    if (std::find(names.begin(), names.end(), o.attribute_name) ==
        names.end()) {
      Violation(where, "attribute not declared by the type");
    }
    if (!triples.emplace(o.attribute_name, o.type_id, o.domain_id).second) {
      Violation(where, "duplicate occurrence");
    }
  }

  if (RecomputeCounts(snapshot) != snapshot.counts) {
    Violation("manifest", "stored counts do not match collections");
  }
}

void Canonicalize(CorpusSnapshot& snapshot) {
  std::sort(snapshot.domains.begin(), snapshot.domains.end(),
            [](const auto& a, const auto& b) { return a.domain_id < b.domain_id; });
  std::sort(snapshot.models.begin(), snapshot.models.end(),
            [](const auto& a, const auto& b) { return a.model_id < b.model_id; });
  std::sort(snapshot.types.begin(), snapshot.types.end(),
            [](const auto& a, const auto& b) { return a.type_id < b.type_id; });
  std::sort(snapshot.occurrences.begin(), snapshot.occurrences.end(),
            [](const auto& a, const auto& b) {
              return OccurrenceKey(a) < OccurrenceKey(b);
            });
  snapshot.counts = RecomputeCounts(snapshot);
}

std::map<std::string, std::set<std::string>> AttributesByDomain(
    const CorpusSnapshot& snapshot) {
  std::map<std::string, std::set<std::string>> result;
  for (const auto& d : snapshot.domains) result[d.domain_id];
  for (const auto& o : snapshot.occurrences) {
    result[o.domain_id].insert(o.attribute_name);
  }
  return result;
}

}  // namespace ontomesh
