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

#ifndef ONTOMESH_DOMAIN_MATRIX_H_
#define ONTOMESH_DOMAIN_MATRIX_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontomesh/corpus.h"
#include "ontomesh/diagnostics.h"

namespace ontomesh {

enum class MatrixMetric { kSharedModels, kSharedAttributes, kJaccardAttributes };

inline constexpr MatrixMetric kAllMatrixMetrics[] = {MatrixMetric::kSharedModels,
                                                     MatrixMetric::kSharedAttributes,
                                                     MatrixMetric::kJaccardAttributes};

// "shared_models", "shared_attributes", "jaccard_attributes".
std::string_view MatrixMetricName(MatrixMetric metric);
// Accepts the underscore names and their hyphenated CLI spellings.
std::optional<MatrixMetric> ParseMatrixMetric(std::string_view name);

// Symmetric domain-by-domain matrix with a zero diagonal.
struct DomainMatrix {
  MatrixMetric metric = MatrixMetric::kSharedModels;
  std::vector<std::string> labels;  // domain ids, sorted
  std::vector<double> cells;        // row-major, labels.size()^2

  std::size_t size() const { return labels.size(); }
  double at(std::size_t row, std::size_t col) const { return cells[row * size() + col]; }

  bool operator==(const DomainMatrix&) const = default;
};

// shared_models: models listing both domains. shared_attributes: size of
// the intersection of the domains' attribute-name sets. jaccard_attributes:
// |intersection| / |union|, 0 when both sets are empty. The diagonal is 0
// for every metric. With fewer than two domains a warning is emitted and a
// 1x1 zero matrix returned.
DomainMatrix DomainOverlapMatrix(const CorpusSnapshot& snapshot, MatrixMetric metric,
                                 Diagnostics* diagnostics = nullptr);

}  // namespace ontomesh

#endif  // ONTOMESH_DOMAIN_MATRIX_H_
