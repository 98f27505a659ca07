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

// Skew-symmetrizable exchange matrices: symmetrizers, diagrams, matrix
// mutation, the permutation action and mutation-finiteness detection.

#ifndef CLUSTERKIT_MATRIX_HPP_
#define CLUSTERKIT_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "clusterkit/permutation.hpp"

namespace clusterkit {

// Square integer matrix with zero diagonal, the sign condition
// (b_ij > 0 iff b_ji < 0) and a positive diagonal symmetrizer on every
// connected component. All three are checked on construction.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  ExchangeMatrix(std::size_t n, std::vector<std::int64_t> row_major);
  static ExchangeMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static ExchangeMatrix zero(std::size_t n);

  std::size_t rank() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const std::int64_t> entries() const { return entries_; }
  std::vector<std::vector<std::int64_t>> rows() const;

  bool is_skew_symmetric() const;
  bool is_connected() const;
  // -b_ij * b_ji for the pair, i.e. the diagram weight (0 when no arrow).
  std::int64_t weight(std::size_t i, std::size_t j) const { return -(*this)(i, j) * (*this)(j, i); }
  std::int64_t max_weight() const;

  ExchangeMatrix operator-() const;
  ExchangeMatrix transpose() const;

  bool operator==(const ExchangeMatrix&) const = default;

  // "[[0,1],[-2,0]]"
  std::string to_string() const;

 private:
  struct Trusted {};
  // Skips validation; for results of operations that preserve validity.
  ExchangeMatrix(Trusted, std::size_t n, std::vector<std::int64_t> row_major)
      : n_(n), entries_(std::move(row_major)) {}
  friend ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);
  friend ExchangeMatrix permute_matrix(const ExchangeMatrix& b, const Permutation& sigma);

  std::size_t n_ = 0;
  std::vector<std::int64_t> entries_;
};

// Diagonal of D with B*D skew-symmetric, gcd of the entries equal to 1.
struct Symmetrizer {
  std::vector<std::int64_t> d;

  bool operator==(const Symmetrizer&) const = default;
};

struct Arc {
  std::size_t source;
  std::size_t target;
  std::int64_t weight;

  bool operator==(const Arc&) const = default;
  auto operator<=>(const Arc&) const = default;
};

// Weighted oriented graph with at most one arc per vertex pair. Weight-1
// arcs are drawn unlabelled.
struct Diagram {
  std::size_t vertex_count = 0;
  std::vector<Arc> arcs;  // sorted by (source, target)

  bool operator==(const Diagram&) const = default;
};

// Requires a connected diagram; the ratio d_j/d_i = -b_ji/b_ij is propagated
// along a spanning tree and then checked on every remaining arc.
Symmetrizer compute_symmetrizer(const ExchangeMatrix& b);

// Fomin-Zelevinsky matrix mutation at k (0-based).
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);

// Entry (i, j) of the result is b(sigma^-1(i), sigma^-1(j)).
ExchangeMatrix permute_matrix(const ExchangeMatrix& b, const Permutation& sigma);
// The same action on any square matrix, given row-major.
std::vector<std::int64_t> permute_entries(std::size_t n, std::span<const std::int64_t> row_major,
                                          const Permutation& sigma);
// Entry i of the result is d(sigma^-1(i)).
Symmetrizer permute_symmetrizer(const Symmetrizer& d, const Permutation& sigma);

ExchangeMatrix opposite(const ExchangeMatrix& b);

Diagram matrix_to_diagram(const ExchangeMatrix& b);

// Lexicographically least entry sequence over simultaneous row/column
// permutations. Two matrices are permutation-equivalent iff their canonical
// forms agree.
std::vector<std::int64_t> canonical_form(const ExchangeMatrix& b);

enum class MutationFiniteness { kFinite, kInfinite, kInconclusive };

struct FinitenessReport {
  MutationFiniteness verdict = MutationFiniteness::kInconclusive;
  std::size_t classes_explored = 0;  // distinct matrices up to permutation
  std::int64_t max_weight_seen = 0;
};

// Breadth-first search over the matrix mutation class up to permutation.
// For rank >= 3 an arc weight above 4 proves mutation-infiniteness; reaching
// closure proves finiteness; running past `state_cap` classes is reported
// as inconclusive. Disconnected input is rejected.
FinitenessReport is_mutation_finite(const ExchangeMatrix& b, std::size_t state_cap);

}  // namespace clusterkit

#endif  // CLUSTERKIT_MATRIX_HPP_
