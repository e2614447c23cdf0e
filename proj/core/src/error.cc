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

#include "ontomesh/error.h"

namespace ontomesh {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "io";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kEmptyCorpus: return "empty_corpus";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kNotFound: return "not_found";
    case ErrorCode::kConflict: return "conflict";
    case ErrorCode::kCorruption: return "corruption";
    case ErrorCode::kInvariant: return "invariant";
    case ErrorCode::kData: return "data";
    case ErrorCode::kFetch: return "fetch";
    case ErrorCode::kIntegrity: return "integrity";
    case ErrorCode::kExtraction: return "extraction";
    case ErrorCode::kProvenance: return "provenance";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace ontomesh
