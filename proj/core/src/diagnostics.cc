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

#include "ontomesh/diagnostics.h"

#include <utility>

namespace ontomesh {

void Diagnostics::Warn(std::string source, std::string message) {
  warnings_.push_back({std::move(source), std::move(message)});
}

void Diagnostics::Append(const Diagnostics& other) {
  warnings_.insert(warnings_.end(), other.warnings_.begin(),
                   other.warnings_.end());
}

}  // namespace ontomesh
