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


// Brute-force census of 3-vertex diagrams: every pair of vertices gets no
// arrow or an arrow of weight 1..max_weight in either direction with every
// factorization of the weight into matrix entries. Mutation-finite matrices
// are kept and compared against their geodesic loop invariants.

#ifndef CLUSTERKIT_DIAGRAM_CENSUS_HPP_
#define CLUSTERKIT_DIAGRAM_CENSUS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "clusterkit/exchange_graph.hpp"
#include "clusterkit/matrix.hpp"

namespace clusterkit {

// Loop length forced by an arrow weight: 0 -> 4, 1 -> 5, 2 -> 6, 3 -> 8,
// anything from 4 up -> infinite.
LoopLength loop_length_for_weight(std::int64_t weight);

struct CensusClass {
  std::vector<std::int64_t> key;  // diagram up to vertex permutation and reversal
  ExchangeMatrix representative;  // first matrix met with this diagram
  bool connected = false;
  std::int64_t max_weight = 0;
  NInvariants invariants;
};

struct CensusCollision {
  NInvariants invariants;
  std::vector<std::size_t> classes;  // indices into DiagramCensus::classes
  bool resolved_by_convention = false;
};

struct DiagramCensus {
  std::size_t candidates = 0;          // sign-consistent skew-symmetrizable matrices
  std::size_t mutation_finite = 0;     // of those
  std::size_t dictionary_checks = 0;   // (matrix, pair) loop comparisons made
  std::vector<std::string> dictionary_failures;
  std::vector<std::string> invariant_failures;  // same diagram, different (N0, N1)
  std::vector<CensusClass> classes;
  std::vector<CensusCollision> collisions;

  // Loop lengths matched the dictionary, (N0, N1) was a function of the
  // diagram, and every collision was the {4,4,inf} one.
  bool ok() const;
};

// max_weight >= 4 is needed to see every mutation-finite diagram; 5 also
// brings in the disconnected diagrams that collide with weight 4.
DiagramCensus three_vertex_census(std::int64_t max_weight = 5, std::size_t finiteness_cap = 10'000);

}  // namespace clusterkit

#endif  // CLUSTERKIT_DIAGRAM_CENSUS_HPP_
