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


// Automorphism groups of exchange graphs, the pullback of a graph
// automorphism to the labelled exchange graph, and classification into
// direct, inverse and non-cluster automorphisms.

#ifndef CLUSTERKIT_AUTOMORPHISMS_HPP_
#define CLUSTERKIT_AUTOMORPHISMS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusterkit/exchange_graph.hpp"

namespace clusterkit {

enum class GroupType { kTrivial, kCyclic, kDihedral, kOther };

std::string to_string(GroupType t);

// A finite permutation group listed in full. Elements are sorted, so the
// identity comes first.
struct AutGroup {
  std::vector<Permutation> elements;
  std::vector<std::size_t> generators;  // indices into elements
  // Set for groups of order at most 16. The Klein four-group counts as
  // dihedral of order 4.
  std::optional<GroupType> type;

  std::size_t order() const { return elements.size(); }
  std::optional<std::size_t> index_of(const Permutation& p) const;
};

// Builds generators (greedily, in element order) and the type tag. Throws
// InvariantViolation if the list is not closed under composition.
AutGroup make_group(std::vector<Permutation> elements);

// Closure of a generating set under composition.
std::vector<Permutation> generate(const std::vector<Permutation>& generators, std::size_t degree);

struct AutSearchOptions {
  bool prune = true;  // refine candidates by loop invariants and incident marks
  std::size_t node_cap = 50'000'000;  // backtracking nodes before giving up
};

// All vertex permutations preserving adjacency (and marks, when marked).
// The graph must be complete (not cut off by a radius).
AutGroup graph_automorphisms(const ExchangeGraph& g, const AutSearchOptions& options = {});
AutGroup graph_automorphisms(const MarkedExchangeGraph& g, const AutSearchOptions& options = {});

bool is_graph_automorphism(const ExchangeGraph& g, const Permutation& phi);
bool preserves_marks(const MarkedExchangeGraph& g, const Permutation& phi);

// The labelled automorphism over phi fixed by the rule that, at the anchor,
// the variable exchanged along the image of edge k sits in position k. It
// preserves edge labels, commutes with permutations and projects onto phi.
Permutation pullback(const Permutation& phi, const ClassGraphs& graphs, std::size_t anchor = 0);

// Checks psi(v . m_k) = psi(v) . m_k and psi(v . s) = psi(v) . s for every
// labelled vertex v, every k and every adjacent transposition s; and that psi
// projects onto phi. Returns a diagnostic or nothing.
std::optional<std::string> check_pullback(const Permutation& psi, const Permutation& phi, const ClassGraphs& graphs);

enum class Direction { kDirect, kInverse, kNonCluster };

std::string to_string(Direction d);

struct ClusterAutomorphism {
  Permutation vertex_map;     // on the exchange graph
  Permutation labelled_map;   // its pullback
  Direction direction = Direction::kNonCluster;
  std::vector<LaurentPoly> realization;  // image of the initial cluster
  ExchangeMatrix image_matrix;
};

// Classifies phi by the matrix of the pulled-back image of labelled vertex 0.
ClusterAutomorphism classify(const Permutation& phi, const ClassGraphs& graphs);

struct ClusterAutomorphismReport {
  AutGroup aut;        // marked exchange graph automorphisms
  AutGroup aut_plus;   // the direct ones
  std::vector<ClusterAutomorphism> classified;  // parallel to aut.elements
  bool opposite_in_class = false;  // -B is the matrix of some labelled seed
  std::size_t index() const { return aut.order() / aut_plus.order(); }
};

// Throws InvariantViolation if some marked automorphism is non-cluster, if
// the index is not 1 or 2, or if index 2 disagrees with opposite_in_class.
ClusterAutomorphismReport cluster_automorphism_group(const ClassGraphs& graphs,
                                                     const AutSearchOptions& options = {});

// A word u . m_{k1} ... m_{kr} . sigma reaching the pulled-back image of
// labelled vertex 0: a shortest mutation path to some labelling of the
// target seed followed by the permutation fixing the labels. Words are not
// unique; `order` picks whether m_1 or m_n is tried first at each step.
enum class SearchOrder { kAscending, kDescending };
MutationWord word_realization(const Permutation& phi, const ClassGraphs& graphs,
                              SearchOrder order = SearchOrder::kAscending);

// The exchange graph map sending [u . w] to [image . w] for every word w,
// where u is labelled vertex 0. Throws InvariantViolation if this is not a
// well-defined automorphism.
Permutation automorphism_from_image(const LabelledSeed& image, const ClassGraphs& graphs);

}  // namespace clusterkit

#endif  // CLUSTERKIT_AUTOMORPHISMS_HPP_
