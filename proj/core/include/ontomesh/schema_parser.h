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

#ifndef ONTOMESH_SCHEMA_PARSER_H_
#define ONTOMESH_SCHEMA_PARSER_H_

#include <string>
#include <string_view>
#include <vector>

#include "ontomesh/corpus.h"
#include "ontomesh/diagnostics.h"

namespace ontomesh {

struct SchemaContext {
  std::string domain_id;
  std::string model_id;
  // Type name used when a definition carries no "title".
  std::string fallback_name;
  // Shown in diagnostics; usually the file path.
  std::string source;
};

struct ParsedSchema {
  std::vector<TypeRecord> types;
  std::vector<AttributeOccurrence> occurrences;
};

// Extracts entity definitions from one JSON Schema document.
//
// An object whose "properties" map (directly, or through allOf / anyOf /
// oneOf composition and document-local "$ref" pointers) is non-empty is one
// entity definition. The document root is tried first; failing that, each
// entry of "$defs" / "definitions" is a definition named by its key, and a
// root array is a list of definitions. Property names are unioned in
// first-seen order.
//
// Throws ParseError for bytes that are not JSON. A document without any
// property map yields no records and a warning.
ParsedSchema ParseSchemaFile(std::string_view bytes, const SchemaContext& context,
                             Diagnostics* diagnostics = nullptr);

}  // namespace ontomesh

#endif  // ONTOMESH_SCHEMA_PARSER_H_
