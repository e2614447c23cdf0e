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

#ifndef ONTOMESH_DIAGNOSTICS_H_
#define ONTOMESH_DIAGNOSTICS_H_

#include <string>
#include <utility>
#include <vector>

namespace ontomesh {

struct Warning {
  std::string source;  // file path or record id the warning is about
  std::string message;

  bool operator==(const Warning&) const = default;
};

// Collects non-fatal problems. Operations that can degrade gracefully take
// an optional Diagnostics* and append to it instead of throwing.
class Diagnostics {
 public:
  void Warn(std::string source, std::string message);

  const std::vector<Warning>& warnings() const { return warnings_; }
  bool empty() const { return warnings_.empty(); }
  void Append(const Diagnostics& other);

 private:
  std::vector<Warning> warnings_;
};

inline void Warn(Diagnostics* diag, std::string source, std::string message) {
  if (diag != nullptr) diag->Warn(std::move(source), std::move(message));
}

}  // namespace ontomesh

#endif  // ONTOMESH_DIAGNOSTICS_H_
