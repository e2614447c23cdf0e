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

#include <benchmark/benchmark.h>

#include <random>

#include "ontomesh/centrality.h"
#include "ontomesh/domain_matrix.h"
#include "ontomesh/graph.h"
#include "ontomesh/ingest.h"
#include "ontomesh/serialize.h"
#include "support/test_support.h"

namespace ontomesh {
namespace {

const CorpusSnapshot& PaperScale() {
  static const CorpusSnapshot snapshot = testing::PaperScaleSnapshot();
  return snapshot;
}

const OntologyGraph& PaperScaleGraph() {
  static const OntologyGraph graph = BuildGraph(PaperScale());
  return graph;
}

void BM_IngestFixture(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(IngestCorpus(testing::Fixture("fix1"), {}));
  }
}
BENCHMARK(BM_IngestFixture);

void BM_BuildGraph(benchmark::State& state) {
  const CorpusSnapshot& snap = PaperScale();
  for (auto _ : state) benchmark::DoNotOptimize(BuildGraph(snap));
  state.counters["edges"] = static_cast<double>(PaperScaleGraph().edge_count());
}
BENCHMARK(BM_BuildGraph)->Unit(benchmark::kMillisecond);

void BM_DegreeCentrality(benchmark::State& state) {
  const OntologyGraph& g = PaperScaleGraph();
  for (auto _ : state) benchmark::DoNotOptimize(DegreeCentrality(g, true, state.range(0) != 0));
}
BENCHMARK(BM_DegreeCentrality)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_BetweennessCentrality(benchmark::State& state) {
  const OntologyGraph& g = PaperScaleGraph();
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(BetweennessCentrality(g, true, threads));
}
BENCHMARK(BM_BetweennessCentrality)->Arg(1)->Arg(0)->Unit(benchmark::kSecond)->Iterations(1);

void BM_BetweennessRandom(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const auto n = static_cast<std::size_t>(state.range(0));
  const OntologyGraph g = testing::ToAttributeGraph(testing::RandomEdgeList(rng, n, 8.0 / n));
  for (auto _ : state) benchmark::DoNotOptimize(BetweennessCentrality(g, false, 1));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BetweennessRandom)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_DomainMatrices(benchmark::State& state) {
  const CorpusSnapshot& snap = PaperScale();
  for (auto _ : state) {
    for (MatrixMetric m : kAllMatrixMetrics) benchmark::DoNotOptimize(DomainOverlapMatrix(snap, m));
  }
}
BENCHMARK(BM_DomainMatrices)->Unit(benchmark::kMicrosecond);

void BM_GraphCanonicalJson(benchmark::State& state) {
  const OntologyGraph& g = PaperScaleGraph();
  for (auto _ : state) benchmark::DoNotOptimize(CanonicalDump(ToJson(g)));
}
BENCHMARK(BM_GraphCanonicalJson)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ontomesh

BENCHMARK_MAIN();
