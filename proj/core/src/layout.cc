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

#include "ontomesh/layout.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ontomesh/error.h"

namespace ontomesh {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool ParseBool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw Error(ErrorCode::kInvalidArgument,
              "layout: '" + std::string(key) + "' expects a boolean, got '" +
                  std::string(value) + "'");
}

}  // namespace

LayoutConfig ParseLayoutConfig(std::string_view text) {
  LayoutConfig config;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "layout line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string_view key = Trim(line.substr(0, eq));
    const std::string_view value = Trim(line.substr(eq + 1));

    if (key == "schema_pattern") {
      if (value.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "layout: empty schema_pattern");
      }
      config.schema_pattern = value;
    } else if (key == "max_depth") {
      int depth = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), depth);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "layout: max_depth expects an integer, got '" +
                        std::string(value) + "'");
      }
      config.max_depth = depth;
    } else if (key == "model_prefix") {
      config.model_prefix = value;
    } else if (key == "skip_hidden") {
      config.skip_hidden = ParseBool(key, value);
    } else if (key == "strict") {
      config.strict = ParseBool(key, value);
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "layout: unknown key '" + std::string(key) + "'");
    }
  }
  return config;
}

LayoutConfig LoadLayoutConfig(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot read layout config '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseLayoutConfig(buf.str());
}

}  // namespace ontomesh
