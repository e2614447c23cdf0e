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

#include "ontomesh/domain_matrix.h"

#include <algorithm>

namespace ontomesh {

std::string_view MatrixMetricName(MatrixMetric metric) {
  switch (metric) {
    case MatrixMetric::kSharedModels: return "shared_models";
    case MatrixMetric::kSharedAttributes: return "shared_attributes";
    case MatrixMetric::kJaccardAttributes: return "jaccard_attributes";
  }
  return "?";
}

std::optional<MatrixMetric> ParseMatrixMetric(std::string_view name) {
  std::string normalized(name);
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  for (MatrixMetric m : kAllMatrixMetrics) {
    if (MatrixMetricName(m) == normalized) return m;
  }
  return std::nullopt;
}

DomainMatrix DomainOverlapMatrix(const CorpusSnapshot& snapshot, MatrixMetric metric,
                                 Diagnostics* diagnostics) {
  DomainMatrix matrix;
  matrix.metric = metric;
  for (const auto& d : snapshot.domains) matrix.labels.push_back(d.domain_id);
  std::sort(matrix.labels.begin(), matrix.labels.end());

  const std::size_t n = matrix.labels.size();
  if (n < 2) {
    Warn(diagnostics, std::string(MatrixMetricName(metric)),
         "degenerate matrix: fewer than two domains");
    if (matrix.labels.empty()) matrix.labels.emplace_back();
    matrix.labels.resize(1);
    matrix.cells.assign(1, 0.0);
    return matrix;
  }
  matrix.cells.assign(n * n, 0.0);

  auto index_of = [&](const std::string& id) {
    return static_cast<std::size_t>(
        std::lower_bound(matrix.labels.begin(), matrix.labels.end(), id) -
        matrix.labels.begin());
  };
  auto add_symmetric = [&](std::size_t i, std::size_t j, double value) {
    matrix.cells[i * n + j] = value;
    matrix.cells[j * n + i] = value;
  };

  if (metric == MatrixMetric::kSharedModels) {
    for (const auto& m : snapshot.models) {
      std::vector<std::size_t> idx;
      for (const auto& d : m.domain_ids) idx.push_back(index_of(d));
      for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
          matrix.cells[idx[a] * n + idx[b]] += 1;
          matrix.cells[idx[b] * n + idx[a]] += 1;
        }
      }
    }
    return matrix;
  }

  const auto by_domain = AttributesByDomain(snapshot);
  std::vector<const std::set<std::string>*> sets;
  for (const auto& label : matrix.labels) sets.push_back(&by_domain.at(label));

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t common = 0;
      // Merge-walk of two sorted sets.
      auto a = sets[i]->begin(), b = sets[j]->begin();
      while (a != sets[i]->end() && b != sets[j]->end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++common;
          ++a;
          ++b;
        }
      }
      if (metric == MatrixMetric::kSharedAttributes) {
        add_symmetric(i, j, static_cast<double>(common));
      } else {
        const std::size_t united = sets[i]->size() + sets[j]->size() - common;
        add_symmetric(i, j, united == 0 ? 0.0
                                        : static_cast<double>(common) /
                                              static_cast<double>(united));
      }
    }
  }
  return matrix;
}

}  // namespace ontomesh
