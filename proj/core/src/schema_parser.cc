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

#include "ontomesh/schema_parser.h"

#include <algorithm>

#include "json.hpp"
#include "ontomesh/error.h"

namespace ontomesh {
namespace {

using OrderedJson = nlohmann::ordered_json;

constexpr int kMaxRefDepth = 32;

struct PropertySet {
  std::vector<std::string> names;
  std::vector<Metadata> metadata;  // parallel to names

  void Add(const std::string& name, const OrderedJson& decl) {
    auto it = std::find(names.begin(), names.end(), name);
    Metadata* meta;
    if (it == names.end()) {
      names.push_back(name);
      metadata.emplace_back();
      meta = &metadata.back();
    } else {
      meta = &metadata[static_cast<std::size_t>(it - names.begin())];
    }
    if (!decl.is_object()) return;
    // Earlier declarations win; later ones only fill gaps.
    if (auto d = decl.find("description");
        d != decl.end() && d->is_string() && !meta->contains("description")) {
      (*meta)["description"] = d->get<std::string>();
    }
    if (auto t = decl.find("type"); t != decl.end() && !meta->contains("value_type")) {
      if (t->is_string()) {
        (*meta)["value_type"] = t->get<std::string>();
      } else if (t->is_array()) {
        std::string joined;
        for (const auto& v : *t) {
          if (!v.is_string()) continue;
          if (!joined.empty()) joined += "|";
          joined += v.get<std::string>();
        }
        if (!joined.empty()) (*meta)["value_type"] = joined;
      }
    }
  }
};

const OrderedJson* ResolveLocalRef(const OrderedJson& root, const std::string& ref) {
  if (ref.size() < 2 || ref[0] != '#' || ref[1] != '/') return nullptr;
  try {
    const auto ptr = OrderedJson::json_pointer(ref.substr(1));
    if (!root.contains(ptr)) return nullptr;
    return &root.at(ptr);
  } catch (const nlohmann::json::exception&) {
    return nullptr;
  }
}

void CollectProperties(const OrderedJson& node, const OrderedJson& root, int depth,
                       PropertySet& out) {
  if (!node.is_object() || depth > kMaxRefDepth) return;

  if (auto props = node.find("properties"); props != node.end() && props->is_object()) {
    for (const auto& [name, decl] : props->items()) out.Add(name, decl);
  }
  for (const char* key : {"allOf", "anyOf", "oneOf"}) {
    auto list = node.find(key);
    if (list == node.end() || !list->is_array()) continue;
    for (const auto& sub : *list) CollectProperties(sub, root, depth + 1, out);
  }
  // TODO: resolve remote "$ref" targets (common-schema.json upstream) against
  // a local mirror; only document-local pointers are followed today.
  if (auto ref = node.find("$ref"); ref != node.end() && ref->is_string()) {
    if (const auto* target = ResolveLocalRef(root, ref->get<std::string>())) {
      CollectProperties(*target, root, depth + 1, out);
    }
  }
}

std::string TitleOr(const OrderedJson& node, const std::string& fallback) {
  if (node.is_object()) {
    if (auto t = node.find("title"); t != node.end() && t->is_string()) {
      const auto& title = t->get_ref<const std::string&>();
      if (!title.empty()) return title;
    }
  }
  return fallback;
}

void Emit(const std::string& name, const PropertySet& props,
          const SchemaContext& ctx, ParsedSchema& out, Diagnostics* diag) {
  const std::string type_id = MakeTypeId(ctx.model_id, name);
  for (const auto& existing : out.types) {
    if (existing.type_id == type_id) {
      Warn(diag, ctx.source, "duplicate entity definition '" + name + "' ignored");
      return;
    }
  }
  out.types.push_back(TypeRecord{type_id, name, ctx.model_id, props.names});
  for (std::size_t i = 0; i < props.names.size(); ++i) {
    out.occurrences.push_back(AttributeOccurrence{
        props.names[i], type_id, ctx.model_id, ctx.domain_id, props.metadata[i]});
  }
}

}  // namespace

ParsedSchema ParseSchemaFile(std::string_view bytes, const SchemaContext& context,
                             Diagnostics* diagnostics) {
  OrderedJson doc;
  try {
    doc = OrderedJson::parse(bytes.begin(), bytes.end());
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports the 1-based position of the offending character.
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(context.source + ": invalid JSON at byte " +
                         std::to_string(offset) + " (" + e.what() + ")",
                     offset);
  }

  ParsedSchema out;
  PropertySet root_props;
  CollectProperties(doc, doc, 0, root_props);

  if (!root_props.names.empty()) {
    Emit(TitleOr(doc, context.fallback_name), root_props, context, out, diagnostics);
  } else if (doc.is_object()) {
    for (const char* key : {"$defs", "definitions"}) {
      auto defs = doc.find(key);
      if (defs == doc.end() || !defs->is_object()) continue;
      for (const auto& [name, def] : defs->items()) {
        PropertySet props;
        CollectProperties(def, doc, 0, props);
        if (!props.names.empty()) Emit(name, props, context, out, diagnostics);
      }
    }
  } else if (doc.is_array()) {
    std::size_t index = 0;
    for (const auto& def : doc) {
      PropertySet props;
      CollectProperties(def, doc, 0, props);
      const std::string fallback =
          context.fallback_name + "#" + std::to_string(index++);
      if (!props.names.empty()) {
        Emit(TitleOr(def, fallback), props, context, out, diagnostics);
      }
    }
  }

  if (out.types.empty()) {
    Warn(diagnostics, context.source, "no attributes: document declares no properties");
  }
  return out;
}

}  // namespace ontomesh
