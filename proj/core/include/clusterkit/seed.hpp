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


// Labelled seeds, the exchange relation, the action of the global mutation
// group (mutations and index permutations) and mutation-class enumeration.

#ifndef CLUSTERKIT_SEED_HPP_
#define CLUSTERKIT_SEED_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "clusterkit/laurent.hpp"
#include "clusterkit/matrix.hpp"
#include "clusterkit/permutation.hpp"

namespace clusterkit {

struct LabelledSeed {
  std::vector<LaurentPoly> cluster;
  ExchangeMatrix matrix;

  std::size_t rank() const { return matrix.rank(); }
  bool operator==(const LabelledSeed&) const = default;
};

// (x1, ..., xn) attached to b.
LabelledSeed initial_seed(const ExchangeMatrix& b);
// Checks that sizes agree. Algebraic independence is not checked.
LabelledSeed make_seed(std::vector<LaurentPoly> cluster, ExchangeMatrix b);

// Largest bounding box (in lattice points) of an exchange monomial product
// that mutate_seed will expand. Finite-type classes stay far below it.
inline constexpr double kMaxExchangeBox = 1 << 18;

// Exchange relation at k (0-based) plus matrix mutation. Throws CapExceeded
// when an exchange polynomial would exceed kMaxExchangeBox.
LabelledSeed mutate_seed(const LabelledSeed& u, std::size_t k);
// Variable i of the result is variable sigma^-1(i) of u.
LabelledSeed apply_permutation(const LabelledSeed& u, const Permutation& sigma);

// Ordered canonical encodings joined by "; ". Two labelled seeds with the
// same cluster key are treated as equal.
std::string cluster_key(std::span<const LaurentPoly> cluster);

// A seed: the cluster sorted by canonical encoding, matrix reindexed to
// match. `order` sends labelled position i to sorted position order(i), so
// the sorted seed is apply_permutation(labelled, order).
struct Seed {
  std::vector<LaurentPoly> cluster;
  ExchangeMatrix matrix;

  std::size_t rank() const { return matrix.rank(); }
  bool operator==(const Seed&) const = default;
};

struct SortedSeed {
  Seed seed;
  Permutation order;
};

SortedSeed sort_seed(const LabelledSeed& u);
LabelledSeed as_labelled(const Seed& s);

// Words in the global mutation group, read left to right as a right action:
// u . m_{k1} ... m_{kr} . sigma.
struct Mutation {
  std::size_t index;  // 0-based
  bool operator==(const Mutation&) const = default;
};
using WordLetter = std::variant<Mutation, Permutation>;
using Word = std::vector<WordLetter>;

// Normal form: mutations first, then a single permutation.
struct MutationWord {
  std::vector<std::size_t> mutations;  // 0-based
  Permutation permutation;

  bool operator==(const MutationWord&) const = default;
};

// Moves every permutation to the end using sigma . m_j = m_{sigma^-1(j)} . sigma.
MutationWord normalize(const Word& w, std::size_t n);

LabelledSeed apply_word(const LabelledSeed& u, const Word& w);
LabelledSeed apply_word(const LabelledSeed& u, const MutationWord& w);

// "m1 m2 m1 (1 2)". Mutation indices and cycles are 1-based; a run of cycles
// with no space between them, such as "(1 2)(3 4)", is one permutation.
Word parse_word(std::string_view text, std::size_t n);
std::string to_string(const Word& w);
// Mutations, then the permutation in cycle notation if it is not the
// identity; "()" for the empty word.
std::string to_string(const MutationWord& w);

struct EnumerationOptions {
  std::size_t cap = 1'000'000;  // maximum number of (labelled) seeds
  bool strict_seeds = false;    // equal clusters must carry equal matrices
  std::optional<std::size_t> radius;  // mutation distance bound
};

inline constexpr std::size_t kNoVertex = static_cast<std::size_t>(-1);

// Closure of a labelled seed under mutations and permutations. Vertex 0 is
// the input; numbering is breadth-first discovery order with children taken
// as m_1..m_n and then permutations in lexicographic order.
struct LabelledClass {
  std::vector<LabelledSeed> seeds;
  std::vector<std::string> keys;  // cluster_key of each seed
  // mutation[v][k] is the vertex reached by m_k, or kNoVertex when the
  // enumeration was cut off by a radius.
  std::vector<std::vector<std::size_t>> mutation;
  std::vector<std::size_t> depth;  // mutation distance from vertex 0
  bool truncated = false;

  std::size_t size() const { return seeds.size(); }
  std::optional<std::size_t> find(const LabelledSeed& u) const;
  std::optional<std::size_t> find_key(const std::string& key) const;

  std::unordered_map<std::string, std::size_t> index;
};

LabelledClass enumerate_labelled_class(const LabelledSeed& u, const EnumerationOptions& options = {});

// Closure under mutations of the sorted seed. Numbering is breadth-first
// with children taken at sorted positions 1..n.
struct SeedClass {
  std::vector<Seed> seeds;
  std::vector<std::string> keys;
  // next[v][p]: the seed reached by mutating sorted position p of v, and the
  // sorted position of the new variable there.
  struct Step {
    std::size_t vertex = kNoVertex;
    std::size_t position = 0;
  };
  std::vector<std::vector<Step>> next;
  std::vector<std::size_t> depth;
  bool truncated = false;

  std::size_t size() const { return seeds.size(); }
  std::optional<std::size_t> find_key(const std::string& key) const;

  std::unordered_map<std::string, std::size_t> index;
};

SeedClass enumerate_class(const LabelledSeed& u, const EnumerationOptions& options = {});

}  // namespace clusterkit

#endif  // CLUSTERKIT_SEED_HPP_
