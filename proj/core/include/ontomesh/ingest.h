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

#ifndef ONTOMESH_INGEST_H_
#define ONTOMESH_INGEST_H_

#include <filesystem>

#include "ontomesh/corpus.h"
#include "ontomesh/diagnostics.h"
#include "ontomesh/layout.h"

namespace ontomesh {

// Walks `root` according to `layout` and assembles a canonical snapshot.
// Output depends only on the bytes and relative paths of the files visited.
//
// Errors: kIo when root cannot be read, kEmptyCorpus when no domain yields a
// data model. Malformed or duplicate schema files are reported through
// `diagnostics` and skipped, or raise kData when layout.strict is set.
CorpusSnapshot IngestCorpus(const std::filesystem::path& root,
                            const LayoutConfig& layout,
                            Diagnostics* diagnostics = nullptr);

}  // namespace ontomesh

#endif  // ONTOMESH_INGEST_H_
