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


// Labelled, unlabelled and marked exchange graphs built from a mutation
// class, plus geodesic loops and the N0/N1 loop-length invariants.

#ifndef CLUSTERKIT_EXCHANGE_GRAPH_HPP_
#define CLUSTERKIT_EXCHANGE_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "clusterkit/seed.hpp"

namespace clusterkit {

inline constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

struct LabelledEdge {
  std::size_t u;
  std::size_t v;
  std::size_t label;  // 0-based mutation index

  bool operator==(const LabelledEdge&) const = default;
};

// Vertices are labelled seeds; an edge labelled k joins u and u . m_k.
struct LabelledExchangeGraph {
  LabelledClass vertices;
  std::vector<LabelledEdge> edges;
  std::vector<std::vector<std::size_t>> incident;  // incident[v][k] = edge index

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }
  std::size_t rank() const { return vertices.seeds.empty() ? 0 : vertices.seeds[0].rank(); }
  std::size_t component_count() const;
  // component[v] in 0..component_count()-1, numbered by smallest vertex.
  std::vector<std::size_t> components() const;
};

LabelledExchangeGraph build_labelled_exchange_graph(const LabelledSeed& u,
                                                    const EnumerationOptions& options = {});

// An edge of the exchange graph: mutating sorted position pos_u of seed u
// gives seed v, where the new variable sits at sorted position pos_v.
struct GraphEdge {
  std::size_t u;
  std::size_t v;
  std::size_t pos_u;
  std::size_t pos_v;

  bool operator==(const GraphEdge&) const = default;
};

struct ExchangeGraph {
  SeedClass vertices;
  std::vector<GraphEdge> edges;
  std::vector<std::vector<std::size_t>> incident;  // incident[v][pos] = edge index

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }
  std::size_t rank() const { return vertices.seeds.empty() ? 0 : vertices.seeds[0].rank(); }
  std::size_t other_end(std::size_t e, std::size_t v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }
  // Edge joining a and b, or kNoEdge.
  std::size_t edge_between(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
};

ExchangeGraph build_exchange_graph(const LabelledSeed& u, const EnumerationOptions& options = {});

// Each edge carries the symmetrizer entry of the mutated position. The mark
// is computed at both ends and the two values must agree.
struct MarkedExchangeGraph {
  ExchangeGraph graph;
  std::vector<std::int64_t> marks;  // per edge
};

MarkedExchangeGraph build_marked_exchange_graph(const LabelledSeed& u, const EnumerationOptions& options = {});
MarkedExchangeGraph mark_exchange_graph(ExchangeGraph g);

// Everything derived from one mutation class: the labelled graph, its
// quotient, and the projection between them.
struct ClassGraphs {
  LabelledExchangeGraph labelled;
  MarkedExchangeGraph marked;
  // Labelled vertex v projects to seed vertex seed_of[v], and sort_order[v]
  // sends its labelled positions to the sorted positions of that seed.
  std::vector<std::size_t> seed_of;
  std::vector<Permutation> sort_order;
  // transposed[v][i] is the labelled vertex v . (i+1 i+2), swapping
  // positions i and i+1 (0-based).
  std::vector<std::vector<std::size_t>> transposed;

  const ExchangeGraph& graph() const { return marked.graph; }
  std::size_t rank() const { return labelled.rank(); }
  // First labelled vertex (in numbering order) over each seed.
  std::vector<std::size_t> representatives() const;
};

ClassGraphs build_class_graphs(const LabelledSeed& u, const EnumerationOptions& options = {});

// Re-derives the mark of every labelled edge from its own source matrix and
// compares it with the quotient mark. Throws InvariantViolation on mismatch.
void verify_marking_lifts(const ClassGraphs& graphs);

// Length of a geodesic loop: 4, 5, 6 or 8 edges, or infinite.
class LoopLength {
 public:
  constexpr LoopLength() = default;
  static constexpr LoopLength finite(int steps) { return LoopLength(steps); }
  static constexpr LoopLength infinite() { return LoopLength(kInfinite); }

  bool is_infinite() const { return steps_ == kInfinite; }
  int steps() const { return steps_; }
  std::string to_string() const;  // "5", "inf"

  auto operator<=>(const LoopLength&) const = default;

 private:
  static constexpr int kInfinite = 1 << 30;
  constexpr explicit LoopLength(int steps) : steps_(steps) {}
  int steps_ = kInfinite;
};

// Mutations after which a loop that has not closed is declared infinite.
inline constexpr int kLoopCutoff = 9;

// Alternates m_a, m_b from u until the unordered seed recurs.
LoopLength geodesic_loop(const LabelledSeed& u, std::size_t a, std::size_t b);

struct NInvariants {
  std::vector<LoopLength> n0;  // C(n,2) values, sorted
  std::vector<LoopLength> n1;  // n*C(n-1,2) values, sorted; empty for rank 2

  bool operator==(const NInvariants&) const = default;
  auto operator<=>(const NInvariants&) const = default;
};

NInvariants n_invariants(const LabelledSeed& u);

std::string to_string(const std::vector<LoopLength>& multiset);  // "{4,5,6}"

}  // namespace clusterkit

#endif  // CLUSTERKIT_EXCHANGE_GRAPH_HPP_
