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


// Unfoldings of a skew-symmetrizable B to a skew-symmetric C along a block
// partition of C's indices, composite mutations and permutations, and the
// transport of cluster automorphisms of B to automorphisms of E(C).

#ifndef CLUSTERKIT_UNFOLDING_HPP_
#define CLUSTERKIT_UNFOLDING_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clusterkit/automorphisms.hpp"

namespace clusterkit {

using Blocks = std::vector<std::vector<std::size_t>>;  // 0-based, consecutive

struct UnfoldingSpec {
  ExchangeMatrix base;
  Symmetrizer d;
  Blocks blocks;
  ExchangeMatrix unfolded;

  std::size_t base_rank() const { return base.rank(); }
  std::size_t unfolded_rank() const { return unfolded.rank(); }
};

// Checks the shapes: blocks partition 0..m-1 into consecutive runs in order,
// |E_j| = d_j and C is skew-symmetric. The block conditions themselves are
// left to validate_unfolding.
UnfoldingSpec make_unfolding(ExchangeMatrix base, Blocks blocks, ExchangeMatrix unfolded);

// First failing block condition for the pair (b, c): column sums of each
// E_i x E_j block equal b_ij, sign agreement when b_ij > 0, zero diagonal
// blocks. Nothing when all hold.
std::optional<std::string> check_block_conditions(const ExchangeMatrix& b, const ExchangeMatrix& c,
                                                  const Blocks& blocks);

enum class UnfoldingVerdict { kValid, kInvalid, kInconclusive };

std::string to_string(UnfoldingVerdict v);

struct UnfoldingReport {
  UnfoldingVerdict verdict = UnfoldingVerdict::kInconclusive;
  std::size_t pairs_explored = 0;
  std::string diagnostic;  // the failing pair and condition, when invalid
};

// Breadth-first search over pairs (B', C') reached by simultaneous m_k and
// composite m_k, checking the block conditions at every pair.
UnfoldingReport validate_unfolding(const UnfoldingSpec& spec, std::size_t cap = 100'000);

// Product of the mutations in E_i, applied in ascending order. Requires the
// E_i x E_i block to vanish so the factors commute.
LabelledSeed composite_mutate(const LabelledSeed& v, const Blocks& blocks, std::size_t i);
ExchangeMatrix composite_mutate_matrix(const ExchangeMatrix& c, const Blocks& blocks, std::size_t i);

// Sends E_i onto E_sigma(i) preserving order. Requires |E_i| = |E_sigma(i)|.
Permutation composite_permutation(const Permutation& sigma, const Blocks& blocks);

LabelledSeed apply_composite_word(const LabelledSeed& v, const Blocks& blocks, const MutationWord& w);

struct UnfoldedSeed {
  LabelledSeed seed;  // rank m, generators rendered y1..ym
  Blocks correspondence;  // base variable j unfolds to the generators in E_j
};

// Only the initial seed (x1..xn on spec.base) is unfolded directly; images
// of other seeds come from replaying words.
UnfoldedSeed unfold_seed(const LabelledSeed& u, const UnfoldingSpec& spec);

struct EmbeddedAutomorphism {
  Permutation source;       // automorphism of the marked graph of B
  MutationWord word;        // realization in the base class
  Direction direction = Direction::kDirect;
  LabelledSeed image;       // lifted word applied to the unfolded initial seed
  Permutation vertex_map;   // automorphism of E(C)
  // Set when a second realization (mutations searched in descending order)
  // induces a different map of E(C).
  std::optional<std::string> diagnostic;
};

// `base` and `unfolded` are the class graphs of initial_seed(B) and
// initial_seed(C).
EmbeddedAutomorphism embed_automorphism(const Permutation& phi, const UnfoldingSpec& spec, const ClassGraphs& base,
                                        const ClassGraphs& unfolded);

// Lifted words determine maps of E(C) only up to the group K of lifts of
// words that act trivially on B's class. The group embedding picks one map
// from each coset lift(w) K, the first choice (K sorted, identity first,
// generators in order) that makes the assignment a homomorphism.
struct GroupEmbedding {
  std::vector<EmbeddedAutomorphism> embedded;  // parallel to the source group's elements
  AutGroup ambiguity;      // K
  bool homomorphic = false;  // a compatible choice exists; otherwise word lifts are kept
  std::optional<AutGroup> image;  // set when homomorphic
};

GroupEmbedding embed_automorphism_group(const AutGroup& aut, const UnfoldingSpec& spec, const ClassGraphs& base,
                                        const ClassGraphs& unfolded);

// For each seed of E(B), the seed of E(C) reached by replaying a mutation
// path from the initial seed with composite mutations.
std::vector<std::size_t> embedded_vertices(const UnfoldingSpec& spec, const ClassGraphs& base,
                                           const ClassGraphs& unfolded);

}  // namespace clusterkit

#endif  // CLUSTERKIT_UNFOLDING_HPP_
