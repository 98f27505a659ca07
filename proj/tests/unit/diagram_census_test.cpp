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


#include "clusterkit/diagram_census.hpp"

#include <gtest/gtest.h>

#include <map>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace clusterkit {
namespace {

std::vector<int> as_ints(const std::vector<LoopLength>& v) {
  std::vector<int> out;
  for (const LoopLength& l : v) out.push_back(l.is_infinite() ? 0 : l.steps());
  return out;
}

// The same candidate space, filtered and classified with the oracles only.
struct OracleCensus {
  std::size_t candidates = 0;
  std::size_t finite = 0;
  std::size_t dictionary_failures = 0;
  std::map<oracle::Mat, oracle::Invariants> classes;  // diagram key -> invariants
  std::size_t inconsistent_classes = 0;
};

OracleCensus oracle_census() {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs{{0, 0}};
  for (std::int64_t w = 1; w <= 5; ++w) {
    for (std::int64_t p = 1; p <= w; ++p) {
      if (w % p) continue;
      pairs.push_back({p, -w / p});
      pairs.push_back({-w / p, p});
    }
  }
  OracleCensus out;
  for (auto [b01, b10] : pairs) {
    for (auto [b02, b20] : pairs) {
      for (auto [b12, b21] : pairs) {
        oracle::Mat b{{0, b01, b02}, {b10, 0, b12}, {b20, b21, 0}};
        if (b01 && b02 && b12 && b10 * b21 * b02 != -b01 * b12 * b20) continue;
        ++out.candidates;
        if (oracle::finiteness(b) != oracle::Finiteness::kFinite) continue;
        ++out.finite;
        oracle::Fingerprint f{oracle::random_point(3, 23), b};
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = i + 1; j < 3; ++j)
            if (oracle::loop_length(f, i, j) != oracle::loop_for_weight(-b[i][j] * b[j][i])) ++out.dictionary_failures;
        oracle::Invariants inv = oracle::invariants(b);
        auto [it, fresh] = out.classes.emplace(oracle::diagram_key(b), inv);
        if (!fresh && !(it->second == inv)) ++out.inconsistent_classes;
      }
    }
  }
  return out;
}

TEST(Census, WeightDictionary) {
  EXPECT_EQ(loop_length_for_weight(0), LoopLength::finite(4));
  EXPECT_EQ(loop_length_for_weight(1), LoopLength::finite(5));
  EXPECT_EQ(loop_length_for_weight(2), LoopLength::finite(6));
  EXPECT_EQ(loop_length_for_weight(3), LoopLength::finite(8));
  EXPECT_TRUE(loop_length_for_weight(4).is_infinite());
}

class CensusVsOracle : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    census_ = new DiagramCensus(three_vertex_census());
    oracle_ = new OracleCensus(oracle_census());
  }
  static void TearDownTestSuite() {
    delete census_;
    delete oracle_;
  }
  static DiagramCensus* census_;
  static OracleCensus* oracle_;
};
DiagramCensus* CensusVsOracle::census_ = nullptr;
OracleCensus* CensusVsOracle::oracle_ = nullptr;

TEST_F(CensusVsOracle, Counts) {
  EXPECT_EQ(census_->candidates, oracle_->candidates);
  EXPECT_EQ(census_->mutation_finite, oracle_->finite);
  EXPECT_EQ(census_->classes.size(), oracle_->classes.size());
  EXPECT_EQ(census_->dictionary_checks, 3 * census_->mutation_finite);
}

TEST_F(CensusVsOracle, DictionaryHolds) {
  EXPECT_EQ(oracle_->dictionary_failures, 0u);
  EXPECT_TRUE(census_->dictionary_failures.empty());
}

TEST_F(CensusVsOracle, InvariantsAreFunctionsOfTheDiagram) {
  EXPECT_EQ(oracle_->inconsistent_classes, 0u);
  EXPECT_TRUE(census_->invariant_failures.empty());
  for (const CensusClass& c : census_->classes) {
    oracle::Invariants expected = oracle::invariants(c.representative.rows());
    EXPECT_EQ(as_ints(c.invariants.n0), expected.n0) << c.representative.to_string();
    EXPECT_EQ(as_ints(c.invariants.n1), expected.n1) << c.representative.to_string();
  }
}

TEST_F(CensusVsOracle, InvariantsSeparateDiagramsUpToTheConvention) {
  std::map<oracle::Invariants, std::vector<oracle::Mat>> by_inv;
  for (const auto& [key, inv] : oracle_->classes) by_inv[inv].push_back(key);
  std::size_t collisions = 0;
  for (const auto& [inv, keys] : by_inv) {
    if (keys.size() == 1) continue;
    ++collisions;
    // Only {4,4,inf}: an isolated vertex beside a heavy arrow. Exactly one
    // of the colliding diagrams has weight 4, the one the convention picks.
    EXPECT_EQ(inv.n0, (std::vector<int>{4, 4, 0}));
    std::size_t weight_four = 0;
    for (const auto& k : keys) {
      EXPECT_FALSE(oracle::connected(k));
      std::int64_t w = 0;
      for (auto& row : k)
        for (auto x : row) w = std::max(w, std::abs(x));
      EXPECT_GE(w, 4);
      if (w == 4) ++weight_four;
    }
    EXPECT_EQ(weight_four, 1u);
  }
  EXPECT_EQ(collisions, 1u);
  ASSERT_EQ(census_->collisions.size(), 1u);
  EXPECT_TRUE(census_->collisions[0].resolved_by_convention);
  EXPECT_TRUE(census_->ok());
}

TEST_F(CensusVsOracle, B3Row) {
  bool found = false;
  for (const CensusClass& c : census_->classes) {
    if (to_string(c.invariants.n0) == "{4,5,6}" && c.connected) {
      EXPECT_EQ(c.max_weight, 2);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace clusterkit
