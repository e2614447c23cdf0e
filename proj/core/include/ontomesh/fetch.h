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

#ifndef ONTOMESH_FETCH_H_
#define ONTOMESH_FETCH_H_

#include <filesystem>
#include <optional>
#include <string>

namespace ontomesh {

struct FetchResult {
  std::filesystem::path root;     // pass to IngestCorpus
  std::filesystem::path archive;  // downloaded bytes, kept for audit
  std::string sha256;             // also written to <archive>.sha256
};

// Downloads a tar, tar.gz or zip corpus archive (http, https or file URL)
// into `dest` and extracts it next to the download.
//
// Errors: FetchError for connection failures and non-2xx responses (status
// carried), kIntegrity when `expected_sha256` is given and differs,
// kExtraction for corrupt or truncated archives. Nothing is extracted
// unless the whole archive decodes.
FetchResult FetchSnapshot(const std::string& url, const std::filesystem::path& dest,
                          const std::optional<std::string>& expected_sha256 = std::nullopt);

}  // namespace ontomesh

#endif  // ONTOMESH_FETCH_H_
