// Copyright 2026 The cluster-kit Authors
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

#include "clusterkit/automorphisms.hpp"
#include "clusterkit/diagram_census.hpp"
#include "clusterkit/green.hpp"

namespace {

using clusterkit::ExchangeMatrix;

// Linear A_n.
ExchangeMatrix type_a(std::size_t n) {
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    rows[i][i + 1] = 1;
    rows[i + 1][i] = -1;
  }
  return ExchangeMatrix::from_rows(rows);
}

void BM_SeedClass(benchmark::State& state) {
  auto u = clusterkit::initial_seed(type_a(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(clusterkit::enumerate_class(u).size());
}
BENCHMARK(BM_SeedClass)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ClassGraphs(benchmark::State& state) {
  auto u = clusterkit::initial_seed(type_a(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(clusterkit::build_class_graphs(u).rank());
}
BENCHMARK(BM_ClassGraphs)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_MarkedAutomorphisms(benchmark::State& state) {
  auto graphs = clusterkit::build_class_graphs(clusterkit::initial_seed(type_a(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(clusterkit::graph_automorphisms(graphs.marked).order());
}
BENCHMARK(BM_MarkedAutomorphisms)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ClusterAutomorphismGroup(benchmark::State& state) {
  auto graphs = clusterkit::build_class_graphs(clusterkit::initial_seed(type_a(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(clusterkit::cluster_automorphism_group(graphs).index());
}
BENCHMARK(BM_ClusterAutomorphismGroup)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_MutationFiniteness(benchmark::State& state) {
  ExchangeMatrix b = type_a(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(clusterkit::is_mutation_finite(b, 1'000'000).classes_explored);
}
BENCHMARK(BM_MutationFiniteness)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(clusterkit::three_vertex_census().classes.size());
}
BENCHMARK(BM_Census)->Unit(benchmark::kMillisecond);

void BM_GreenSequences(benchmark::State& state) {
  ExchangeMatrix q = type_a(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(clusterkit::find_maximal_green_sequences(q, clusterkit::default_green_length(q)).sequences.size());
  }
}
BENCHMARK(BM_GreenSequences)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
