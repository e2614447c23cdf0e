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

#ifndef ONTOMESH_TEXT_FORMAT_H_
#define ONTOMESH_TEXT_FORMAT_H_

#include <string>
#include <string_view>

namespace ontomesh {

// Integral values print without a fraction; others use the shortest
// representation that round-trips.
std::string FormatNumber(double value);
// At most `decimals` fractional digits, trailing zeros trimmed.
std::string FormatDecimal(double value, int decimals = 4);

std::string XmlEscape(std::string_view text);
// RFC 4180 field: quoted when it contains a comma, quote, CR or LF.
std::string CsvField(std::string_view text);
// Double-quoted Graphviz ID.
std::string DotQuote(std::string_view text);

}  // namespace ontomesh

#endif  // ONTOMESH_TEXT_FORMAT_H_
