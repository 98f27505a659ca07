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

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "clusterkit/errors.hpp"

namespace clusterkit {
namespace {

using Entry = std::pair<std::int64_t, std::int64_t>;  // (b_ij, b_ji)

std::vector<Entry> pair_options(std::int64_t max_weight) {
  std::vector<Entry> out{{0, 0}};
  for (std::int64_t w = 1; w <= max_weight; ++w) {
    for (std::int64_t p = 1; p <= w; ++p) {
      if (w % p != 0) continue;
      std::int64_t q = w / p;
      out.push_back({p, -q});
      out.push_back({-q, p});
    }
  }
  return out;
}

// Directed weight matrix of the diagram, minimized over vertex orders.
std::vector<std::int64_t> diagram_key(const std::array<std::int64_t, 9>& w) {
  std::vector<std::int64_t> best;
  for (const auto& sigma : all_permutations(3)) {
    std::vector<std::int64_t> cand(9);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) cand[sigma(i) * 3 + sigma(j)] = w[i * 3 + j];
    }
    if (best.empty() || cand < best) best = cand;
  }
  return best;
}

std::vector<std::int64_t> reversal_class(const ExchangeMatrix& b) {
  std::array<std::int64_t, 9> w{}, r{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (b(i, j) > 0) {
        w[i * 3 + j] = b.weight(i, j);
        r[j * 3 + i] = b.weight(i, j);
      }
    }
  }
  return std::min(diagram_key(w), diagram_key(r));
}

bool finite_type(const ExchangeMatrix& b, std::size_t cap) {
  if (!b.is_connected()) return true;  // rank <= 2 components, always finite
  auto report = is_mutation_finite(b, cap);
  if (report.verdict == MutationFiniteness::kInconclusive) {
    throw CapExceeded("finiteness of " + b.to_string() + " undecided at the census cap");
  }
  return report.verdict == MutationFiniteness::kFinite;
}

}  // namespace

LoopLength loop_length_for_weight(std::int64_t weight) {
  switch (weight) {
    case 0: return LoopLength::finite(4);
    case 1: return LoopLength::finite(5);
    case 2: return LoopLength::finite(6);
    case 3: return LoopLength::finite(8);
    default: return LoopLength::infinite();
  }
}

bool DiagramCensus::ok() const {
  if (!dictionary_failures.empty() || !invariant_failures.empty()) return false;
  return std::all_of(collisions.begin(), collisions.end(),
                     [](const CensusCollision& c) { return c.resolved_by_convention; });
}

DiagramCensus three_vertex_census(std::int64_t max_weight, std::size_t finiteness_cap) {
  const auto options = pair_options(max_weight);
  DiagramCensus census;
  std::map<std::vector<std::int64_t>, std::size_t> class_of;

  for (const auto& e01 : options) {
    for (const auto& e02 : options) {
      for (const auto& e12 : options) {
        std::vector<std::int64_t> rows{0, e01.first, e02.first, e01.second, 0, e12.first,
                                       e02.second, e12.second, 0};
        ExchangeMatrix b;
        try {
          b = ExchangeMatrix(3, rows);
        } catch (const InvalidInput&) {
          continue;  // inconsistent around the triangle
        }
        ++census.candidates;
        if (!finite_type(b, finiteness_cap)) continue;
        ++census.mutation_finite;

        LabelledSeed u = initial_seed(b);
        for (std::size_t a = 0; a < 3; ++a) {
          for (std::size_t c = a + 1; c < 3; ++c) {
            ++census.dictionary_checks;
            LoopLength got = geodesic_loop(u, a, c);
            LoopLength want = loop_length_for_weight(b.weight(a, c));
            if (got != want) {
              census.dictionary_failures.push_back(b.to_string() + " pair (" + std::to_string(a + 1) + "," +
                                                   std::to_string(c + 1) + "): loop " + got.to_string() +
                                                   ", weight " + std::to_string(b.weight(a, c)));
            }
          }
        }

        NInvariants inv = n_invariants(u);
        auto key = reversal_class(b);
        auto [it, fresh] = class_of.try_emplace(key, census.classes.size());
        if (fresh) {
          census.classes.push_back({key, b, b.is_connected(), b.max_weight(), inv});
        } else if (census.classes[it->second].invariants != inv) {
          census.invariant_failures.push_back(b.to_string() + " and " +
                                              census.classes[it->second].representative.to_string() +
                                              " have the same diagram but different loop invariants");
        }
      }
    }
  }

  std::map<NInvariants, std::vector<std::size_t>> by_invariants;
  for (std::size_t i = 0; i < census.classes.size(); ++i) by_invariants[census.classes[i].invariants].push_back(i);
  const std::vector<LoopLength> ambiguous{LoopLength::finite(4), LoopLength::finite(4), LoopLength::infinite()};
  for (auto& [inv, members] : by_invariants) {
    if (members.size() < 2) continue;
    CensusCollision c{inv, members, false};
    // Only an isolated vertex next to an arrow of weight k >= 4 may collide;
    // the convention reads that as k = 4.
    if (inv.n0 == ambiguous) {
      std::size_t weight_four = 0;
      bool all_heavy = true;
      for (std::size_t m : members) {
        const auto& cls = census.classes[m];
        if (cls.connected || cls.max_weight < 4) all_heavy = false;
        if (cls.max_weight == 4) ++weight_four;
      }
      c.resolved_by_convention = all_heavy && weight_four == 1;
    }
    census.collisions.push_back(std::move(c));
  }
  return census;
}

}  // namespace clusterkit
