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


#include "clusterkit/permutation.hpp"

#include <gtest/gtest.h>

#include "clusterkit/errors.hpp"

namespace clusterkit {
namespace {

TEST(Permutation, CycleNotationRoundTrip) {
  Permutation p = Permutation::parse_cycles("(1 3 2)", 3);
  EXPECT_EQ(p(0), 2u);
  EXPECT_EQ(p(2), 1u);
  EXPECT_EQ(p(1), 0u);
  EXPECT_EQ(p.to_cycle_string(), "(1 3 2)");
  EXPECT_EQ(Permutation::parse_cycles("(1 2)(3 4)", 4).to_cycle_string(), "(1 2)(3 4)");
  EXPECT_EQ(Permutation::parse_cycles("()", 3), Permutation::identity(3));
  EXPECT_EQ(Permutation::identity(2).to_cycle_string(), "()");
}

TEST(Permutation, RejectsBadInput) {
  EXPECT_THROW(Permutation(std::vector<std::size_t>{0, 0}), InvalidInput);
  EXPECT_THROW(Permutation(std::vector<std::size_t>{0, 2}), InvalidInput);
  EXPECT_THROW(Permutation::parse_cycles("(1 4)", 3), InvalidInput);
  EXPECT_THROW(Permutation::parse_cycles("(1 2)(2 3)", 3), InvalidInput);
  EXPECT_THROW(Permutation::parse_cycles("1 2", 3), InvalidInput);
  EXPECT_THROW(compose(Permutation::identity(2), Permutation::identity(3)), InvalidInput);
}

TEST(Permutation, ComposeInverseOrder) {
  Permutation s = Permutation::parse_cycles("(1 2 3)", 4);
  Permutation t = Permutation::parse_cycles("(3 4)", 4);
  Permutation st = compose(s, t);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(st(i), s(t(i)));
  EXPECT_TRUE(compose(s, s.inverse()).is_identity());
  EXPECT_EQ(s.order(), 3u);
  EXPECT_EQ(st.order(), 4u);
  EXPECT_EQ(Permutation::parse_cycles("(1 2)(3 4 5)", 5).order(), 6u);
}

TEST(Permutation, AllPermutationsLexicographic) {
  auto all = all_permutations(3);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_TRUE(all.front().is_identity());
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Permutation, FromOneBased) {
  std::vector<int> images{3, 1, 2};
  Permutation p = Permutation::from_one_based(images);
  EXPECT_EQ(p, Permutation::parse_cycles("(1 3 2)", 3));
}

}  // namespace
}  // namespace clusterkit
