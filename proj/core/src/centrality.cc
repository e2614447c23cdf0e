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

#include "ontomesh/centrality.h"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <tuple>

#include "ontomesh/error.h"

namespace ontomesh {
namespace {

// Source blocks for betweenness. The partition depends only on |V| so the
// reduction order never depends on the thread count.
std::size_t BlockCount(std::size_t n) {
  if (n == 0) return 0;
  constexpr std::size_t kMaxBlocks = 256;
  constexpr std::size_t kAccumulatorBudget = std::size_t{1} << 25;  // doubles
  const std::size_t by_memory = std::max<std::size_t>(1, kAccumulatorBudget / n);
  return std::min({n, kMaxBlocks, by_memory});
}

// Single-source dependency accumulation (Brandes), added into `acc`.
class BrandesWorker {
 public:
  explicit BrandesWorker(const OntologyGraph& graph)
      : graph_(graph), n_(graph.node_count()),
        dist_(n_, -1), sigma_(n_, 0.0), delta_(n_, 0.0) {
    order_.reserve(n_);
  }

  void Accumulate(NodeId source, std::vector<double>& acc) {
    order_.clear();
    dist_[source] = 0;
    sigma_[source] = 1.0;
    order_.push_back(source);
    // order_ doubles as the BFS queue.
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const NodeId v = order_[head];
      for (const auto& nb : graph_.neighbors(v)) {
        const NodeId w = nb.node;
        if (dist_[w] < 0) {
          dist_[w] = dist_[v] + 1;
          order_.push_back(w);
        }
        if (dist_[w] == dist_[v] + 1) sigma_[w] += sigma_[v];
      }
    }
    for (std::size_t i = order_.size(); i-- > 0;) {
      const NodeId w = order_[i];
      const double coeff = (1.0 + delta_[w]) / sigma_[w];
      for (const auto& nb : graph_.neighbors(w)) {
        const NodeId v = nb.node;
        if (dist_[v] == dist_[w] - 1) delta_[v] += sigma_[v] * coeff;
      }
      if (w != source) acc[w] += delta_[w];
    }
    for (const NodeId v : order_) {
      dist_[v] = -1;
      sigma_[v] = 0.0;
      delta_[v] = 0.0;
    }
  }

 private:
  const OntologyGraph& graph_;
  std::size_t n_;
  std::vector<int> dist_;
  std::vector<double> sigma_;
  std::vector<double> delta_;
  std::vector<NodeId> order_;
};

}  // namespace

std::string_view CentralityMetricName(CentralityMetric metric) {
  switch (metric) {
    case CentralityMetric::kDegree: return "degree";
    case CentralityMetric::kBetweenness: return "betweenness";
  }
  return "?";
}

std::optional<CentralityMetric> ParseCentralityMetric(std::string_view name) {
  if (name == "degree") return CentralityMetric::kDegree;
  if (name == "betweenness") return CentralityMetric::kBetweenness;
  return std::nullopt;
}

std::vector<NodeId> RankByScore(const OntologyGraph& graph, const std::vector<double>& scores) {
  std::vector<NodeId> ranking(graph.node_count());
  std::iota(ranking.begin(), ranking.end(), NodeId{0});
  const auto& nodes = graph.nodes();
  std::sort(ranking.begin(), ranking.end(), [&](NodeId a, NodeId b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return std::tie(nodes[a].label, nodes[a].kind, a) <
           std::tie(nodes[b].label, nodes[b].kind, b);
  });
  return ranking;
}

CentralityResult DegreeCentrality(const OntologyGraph& graph, bool normalized, bool weighted) {
  const std::size_t n = graph.node_count();
  CentralityResult result;
  result.metric = CentralityMetric::kDegree;
  result.normalized = normalized;
  result.weighted = weighted;
  result.scores.assign(n, 0.0);

  std::uint64_t max_weight = 1;
  for (const auto& e : graph.edges()) max_weight = std::max(max_weight, e.weight);

  for (NodeId v = 0; v < n; ++v) {
    const auto nbs = graph.neighbors(v);
    if (weighted) {
      std::uint64_t sum = 0;
      for (const auto& nb : nbs) sum += graph.edges()[nb.edge].weight;
      result.scores[v] = static_cast<double>(sum);
    } else {
      result.scores[v] = static_cast<double>(nbs.size());
    }
  }
  if (normalized) {
    const double denom = n < 2 ? 0.0
                               : static_cast<double>(n - 1) *
                                     (weighted ? static_cast<double>(max_weight) : 1.0);
    for (auto& s : result.scores) s = denom > 0 ? s / denom : 0.0;
  }
  result.ranking = RankByScore(graph, result.scores);
  return result;
}

CentralityResult BetweennessCentrality(const OntologyGraph& graph, bool normalized,
                                       unsigned threads) {
  const std::size_t n = graph.node_count();
  CentralityResult result;
  result.metric = CentralityMetric::kBetweenness;
  result.normalized = normalized;
  result.scores.assign(n, 0.0);

  const std::size_t blocks = BlockCount(n);
  std::vector<std::vector<double>> partial(blocks);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    BrandesWorker worker(graph);
    for (std::size_t b; (b = next.fetch_add(1)) < blocks;) {
      auto& acc = partial[b];
      acc.assign(n, 0.0);
      const std::size_t begin = b * n / blocks, end = (b + 1) * n / blocks;
      for (std::size_t s = begin; s < end; ++s) worker.Accumulate(static_cast<NodeId>(s), acc);
    }
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(blocks, 1)));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }

  for (const auto& acc : partial) {
    for (std::size_t v = 0; v < n; ++v) result.scores[v] += acc[v];
  }
  // Each unordered pair was counted from both endpoints.
  double scale = 0.5;
  if (normalized) {
    scale = n > 2 ? 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2)) : 0.0;
  }
  for (auto& s : result.scores) s *= scale;

  result.ranking = RankByScore(graph, result.scores);
  return result;
}

std::vector<TopAttribute> TopKAttributes(const CentralityResult& result,
                                         const OntologyGraph& graph, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "top-k requires k >= 1");
  if (result.scores.size() != graph.node_count()) {
    throw Error(ErrorCode::kInvalidArgument, "centrality result does not match the graph");
  }
  std::vector<TopAttribute> out;
  for (const NodeId v : result.ranking) {
    if (out.size() == k) break;
    const auto& node = graph.nodes()[v];
    if (node.kind != NodeKind::kAttribute) continue;
    std::size_t spread = 0;
    for (const auto& nb : graph.neighbors(v)) {
      if (graph.edges()[nb.edge].kind == EdgeKind::kAttrDomain) ++spread;
    }
    out.push_back(TopAttribute{node.label, result.scores[v], spread});
  }
  return out;
}

}  // namespace ontomesh
