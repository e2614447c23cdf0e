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

#ifndef ONTOMESH_FILE_UTIL_H_
#define ONTOMESH_FILE_UTIL_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

namespace ontomesh {

// Throws Error(kIo) naming the path on failure.
std::string ReadFileBytes(const std::filesystem::path& path);
std::size_t WriteFileBytes(const std::filesystem::path& path, std::string_view bytes);

// Writes to a sibling temporary file and renames it over `path`, so readers
// observe either the old or the new content.
std::size_t WriteFileAtomic(const std::filesystem::path& path, std::string_view bytes);

}  // namespace ontomesh

#endif  // ONTOMESH_FILE_UTIL_H_
