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


// Framed quivers, green and red vertices, and maximal green sequences.

#ifndef CLUSTERKIT_GREEN_HPP_
#define CLUSTERKIT_GREEN_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "clusterkit/automorphisms.hpp"

namespace clusterkit {

// A 2n x 2n matrix whose indices n..2n-1 are frozen. Frozen index n+i is
// the frame copy of vertex i.
struct FramedQuiver {
  ExchangeMatrix matrix;
  std::size_t mutable_count = 0;

  bool operator==(const FramedQuiver&) const = default;
};

// Arrows i -> n+i (frame) or n+i -> i (coframe). Q must be skew-symmetric.
FramedQuiver frame(const ExchangeMatrix& q);
FramedQuiver coframe(const ExchangeMatrix& q);

// Mutation at a mutable vertex.
FramedQuiver mutate(const FramedQuiver& r, std::size_t k);

enum class VertexColour { kGreen, kRed };

// Green: no arrow from a frozen vertex into i. Red: no arrow from i to a
// frozen vertex. Exactly one holds on every state reached from a frame;
// anything else throws InvariantViolation.
VertexColour vertex_colour(const FramedQuiver& r, std::size_t i);

struct GreenSequence {
  std::vector<std::size_t> mutations;  // 0-based
  // Permutations sigma with (final state) . sigma equal to the coframed
  // quiver, frozen vertices fixed. `permutation` is the least of them.
  std::vector<Permutation> alignments;
  Permutation permutation;
};

struct GreenSearchResult {
  std::vector<GreenSequence> sequences;  // lexicographic order
  bool truncated_by_length = false;  // some green path was still going at max_len
  bool truncated_by_cap = false;
  std::size_t states = 0;  // distinct (state, remaining length) pairs memoized
};

// 2 * (arrows + n), the default length bound.
std::size_t default_green_length(const ExchangeMatrix& q);

GreenSearchResult find_maximal_green_sequences(const ExchangeMatrix& q, std::size_t max_len,
                                               std::size_t cap = 1'000'000);

// The cluster automorphism u -> u . m_{i1} ... m_{ik} . sigma of the unframed
// initial seed. Throws InvariantViolation unless the matrix comes back to Q.
// With class graphs the exchange graph map and its pullback are filled in.
ClusterAutomorphism induced_automorphism(const ExchangeMatrix& q, const GreenSequence& gs);
ClusterAutomorphism induced_automorphism(const ExchangeMatrix& q, const GreenSequence& gs, const ClassGraphs& graphs);

}  // namespace clusterkit

#endif  // CLUSTERKIT_GREEN_HPP_
