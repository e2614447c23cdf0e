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

#ifndef ONTOMESH_LAYOUT_H_
#define ONTOMESH_LAYOUT_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace ontomesh {

// Directory conventions for a corpus tree:
//
//   <root>/<domain>/<model>/**/<schema files>
//
// Config files use one `key = value` pair per line; `#` starts a comment.
// Recognised keys: schema_pattern, max_depth, model_prefix, skip_hidden,
// strict.
struct LayoutConfig {
  // fnmatch(3) pattern applied to schema file names.
  std::string schema_pattern = "*.json";
  // Deepest allowed file level below the model directory; a file directly
  // inside the model directory is at depth 1. Negative means unlimited.
  int max_depth = -1;
  // Prefix stripped from model directory names ("dataModel." upstream).
  std::string model_prefix;
  bool skip_hidden = true;
  bool strict = false;
};

LayoutConfig ParseLayoutConfig(std::string_view text);
LayoutConfig LoadLayoutConfig(const std::filesystem::path& path);

}  // namespace ontomesh

#endif  // ONTOMESH_LAYOUT_H_
