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

#ifndef CLUSTERKIT_PERMUTATION_HPP_
#define CLUSTERKIT_PERMUTATION_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clusterkit {

// A bijection of {0, ..., n-1}. Used both for index permutations acting on
// seeds and for vertex permutations of exchange graphs. Indices are 0-based
// in the API; text forms (cycle notation) are 1-based.
class Permutation {
 public:
  Permutation() = default;
  // images[i] is the image of i. Throws InvalidInput unless bijective.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  static Permutation from_one_based(std::span<const int> images);
  // Cycle notation such as "(1 3 2)" or "(1 2)(3 4)"; "()" is the identity.
  static Permutation parse_cycles(std::string_view text, std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  std::span<const std::size_t> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::size_t order() const;
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> images_;
};

// (outer * inner)(i) = outer(inner(i)).
Permutation compose(const Permutation& outer, const Permutation& inner);

// All permutations of n points in lexicographic order of image sequences.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace clusterkit

#endif  // CLUSTERKIT_PERMUTATION_HPP_
