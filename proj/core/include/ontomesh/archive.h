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

#ifndef ONTOMESH_ARCHIVE_H_
#define ONTOMESH_ARCHIVE_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ontomesh {

struct ArchiveEntry {
  std::string path;  // relative, '/'-separated, already sanitised
  bool is_directory = false;
  std::string data;
};

// Decodes a tar (optionally gzip-compressed) or zip archive entirely in
// memory. Truncated or corrupt input throws Error(kExtraction); so do
// entries escaping the archive root.
std::vector<ArchiveEntry> ReadArchive(std::string_view bytes);

// Extracts into `target`, which must not exist yet. Entries are decoded
// first and written to a temporary sibling that is renamed into place, so a
// failure leaves nothing behind. Returns the corpus root: `target`, or its
// sole top-level directory when the archive wraps everything in one.
std::filesystem::path ExtractArchive(std::string_view bytes, const std::filesystem::path& target);

}  // namespace ontomesh

#endif  // ONTOMESH_ARCHIVE_H_
