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

#ifndef ONTOMESH_TOOLS_CLI_H_
#define ONTOMESH_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace ontomesh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitUsage = 64;

// Runs `ontomesh <args...>` (args exclude the program name) and returns
// the process exit status.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ontomesh::cli

#endif  // ONTOMESH_TOOLS_CLI_H_
