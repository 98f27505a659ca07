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


#include "clusterkit/automorphisms.hpp"

#include <gtest/gtest.h>

#include <set>

#include "clusterkit/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace clusterkit {
namespace {

using fixtures::a2;
using fixtures::a3;
using fixtures::b2;
using fixtures::b3;
using fixtures::cluster;

oracle::Graph oracle_graph(const ExchangeGraph& g, const std::vector<std::int64_t>* marks) {
  oracle::Graph out;
  out.n = g.vertex_count();
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    out.edges[std::minmax(g.edges[e].u, g.edges[e].v)] = marks ? (*marks)[e] : 1;
  return out;
}

std::vector<std::vector<std::size_t>> as_images(const AutGroup& g) {
  std::vector<std::vector<std::size_t>> out;
  for (const Permutation& p : g.elements) out.emplace_back(p.images().begin(), p.images().end());
  return out;
}

std::vector<Permutation> closure_of_generators(const AutGroup& g, std::size_t degree) {
  std::vector<Permutation> gens;
  for (std::size_t i : g.generators) gens.push_back(g.elements[i]);
  auto out = generate(gens, degree);
  std::sort(out.begin(), out.end());
  return out;
}

struct Case {
  const char* name;
  ExchangeMatrix b;
  std::size_t unmarked;
  std::size_t marked;
  std::size_t direct;
};

std::vector<Case> desk_cases() {
  return {{"A2", a2(), 10, 10, 5}, {"B2", b2(), 12, 6, 3}, {"A3", a3(), 12, 12, 6}, {"B3", b3(), 8, 8, 4}};
}

TEST(GraphAutomorphisms, MatchBruteForce) {
  for (const Case& c : desk_cases()) {
    SCOPED_TRACE(c.name);
    ClassGraphs graphs = build_class_graphs(initial_seed(c.b));
    AutGroup unmarked = graph_automorphisms(graphs.graph());
    AutGroup marked = graph_automorphisms(graphs.marked);
    EXPECT_EQ(as_images(unmarked), oracle::automorphisms(oracle_graph(graphs.graph(), nullptr)));
    EXPECT_EQ(as_images(marked), oracle::automorphisms(oracle_graph(graphs.graph(), &graphs.marked.marks)));
    EXPECT_EQ(unmarked.order(), c.unmarked);
    EXPECT_EQ(marked.order(), c.marked);
  }
}

TEST(GraphAutomorphisms, PruningDoesNotChangeTheGroup) {
  for (const Case& c : desk_cases()) {
    SCOPED_TRACE(c.name);
    ClassGraphs graphs = build_class_graphs(initial_seed(c.b));
    AutSearchOptions plain;
    plain.prune = false;
    EXPECT_EQ(graph_automorphisms(graphs.marked).elements, graph_automorphisms(graphs.marked, plain).elements);
    EXPECT_EQ(graph_automorphisms(graphs.graph()).elements, graph_automorphisms(graphs.graph(), plain).elements);
  }
}

TEST(GraphAutomorphisms, GeneratorsReproduceTheGroup) {
  for (const Case& c : desk_cases()) {
    SCOPED_TRACE(c.name);
    ClassGraphs graphs = build_class_graphs(initial_seed(c.b));
    for (const AutGroup& g : {graph_automorphisms(graphs.graph()), graph_automorphisms(graphs.marked)}) {
      EXPECT_EQ(closure_of_generators(g, graphs.graph().vertex_count()), g.elements);
      EXPECT_TRUE(g.elements.front().is_identity());
    }
  }
}

TEST(GraphAutomorphisms, NodeCapIsReported) {
  ClassGraphs graphs = build_class_graphs(initial_seed(a3()));
  AutSearchOptions tiny;
  tiny.prune = false;
  tiny.node_cap = 3;
  EXPECT_THROW(graph_automorphisms(graphs.graph(), tiny), CapExceeded);
}

TEST(GraphAutomorphisms, TruncatedGraphIsRejected) {
  EnumerationOptions ball;
  ball.radius = 1;
  ExchangeGraph g = build_exchange_graph(initial_seed(a3()), ball);
  EXPECT_THROW(graph_automorphisms(g), InvalidInput);
}

TEST(GroupType, Tags) {
  ClassGraphs graphs = build_class_graphs(initial_seed(b3()));
  ClusterAutomorphismReport r = cluster_automorphism_group(graphs);
  EXPECT_EQ(r.aut.type, GroupType::kDihedral);
  EXPECT_EQ(r.aut_plus.type, GroupType::kCyclic);
  EXPECT_EQ(make_group({Permutation::identity(3)}).type, GroupType::kTrivial);
  EXPECT_THROW(make_group({Permutation::identity(3), Permutation({1, 2, 0})}), InvariantViolation);
}

TEST(ClusterGroup, Orders) {
  for (const Case& c : desk_cases()) {
    SCOPED_TRACE(c.name);
    ClusterAutomorphismReport r = cluster_automorphism_group(build_class_graphs(initial_seed(c.b)));
    EXPECT_EQ(r.aut.order(), c.marked);
    EXPECT_EQ(r.aut_plus.order(), c.direct);
  }
}

TEST(ClusterGroup, MarkedAutomorphismsAreNeverNonCluster) {
  for (const Case& c : desk_cases()) {
    SCOPED_TRACE(c.name);
    ClusterAutomorphismReport r = cluster_automorphism_group(build_class_graphs(initial_seed(c.b)));
    std::size_t direct = 0;
    for (const ClusterAutomorphism& a : r.classified) {
      ASSERT_NE(a.direction, Direction::kNonCluster);
      if (a.direction == Direction::kDirect) {
        EXPECT_EQ(a.image_matrix, c.b);
        ++direct;
      } else {
        EXPECT_EQ(a.image_matrix, -c.b);
      }
    }
    EXPECT_EQ(direct, r.aut_plus.order());
  }
}

TEST(ClusterGroup, IndexTwoExactlyWhenOppositeIsReachable) {
  for (const Case& c : desk_cases()) {
    SCOPED_TRACE(c.name);
    ClusterAutomorphismReport r = cluster_automorphism_group(build_class_graphs(initial_seed(c.b)));
    bool reaches = oracle::reaches(c.b.rows(), oracle::negate(c.b.rows()));
    EXPECT_EQ(r.opposite_in_class, reaches);
    EXPECT_EQ(r.index(), reaches ? 2u : 1u);
  }
}

TEST(ClusterGroup, SkewSymmetricUnmarkedAreAllCluster) {
  for (const ExchangeMatrix& b : {a2(), a3()}) {
    ClassGraphs graphs = build_class_graphs(initial_seed(b));
    AutGroup all = graph_automorphisms(graphs.graph());
    ClusterAutomorphismReport r = cluster_automorphism_group(graphs);
    EXPECT_EQ(all.order(), r.aut.order());
    for (const Permutation& phi : all.elements) EXPECT_NE(classify(phi, graphs).direction, Direction::kNonCluster);
  }
}

const ClusterAutomorphism* find_realization(const std::vector<ClusterAutomorphism>& list,
                                            const std::vector<LaurentPoly>& target) {
  for (const ClusterAutomorphism& a : list)
    if (a.realization == target) return &a;
  return nullptr;
}

TEST(Classify, B2QuarterTurnIsNotCluster) {
  ClassGraphs graphs = build_class_graphs(initial_seed(b2()));
  std::vector<ClusterAutomorphism> all;
  for (const Permutation& phi : graph_automorphisms(graphs.graph()).elements) all.push_back(classify(phi, graphs));
  const ClusterAutomorphism* r = find_realization(all, cluster({"x2", "x1^-1 + x1^-1*x2^2"}, 2));
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->vertex_map.order(), 6u);
  EXPECT_EQ(r->direction, Direction::kNonCluster);
  EXPECT_EQ(r->image_matrix, ExchangeMatrix::from_rows({{0, 2}, {-1, 0}}));
  EXPECT_EQ(r->image_matrix, -b2().transpose());
  EXPECT_FALSE(preserves_marks(graphs.marked, r->vertex_map));
  // The pullback moves labelled vertex 0 into the other component.
  auto comp = graphs.labelled.components();
  EXPECT_NE(comp[0], comp[r->labelled_map(0)]);
  for (std::size_t v = 0; v < comp.size(); ++v) EXPECT_NE(comp[v], comp[r->labelled_map(v)]);
}

TEST(Classify, B2ThirdTurnIsDirect) {
  ClassGraphs graphs = build_class_graphs(initial_seed(b2()));
  ClusterAutomorphismReport r = cluster_automorphism_group(graphs);
  const ClusterAutomorphism* f =
      find_realization(r.classified, cluster({"x1^-1 + x1^-1*x2^2", "x1^-1*x2^-1 + x2^-1 + x1^-1*x2"}, 2));
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->direction, Direction::kDirect);
  EXPECT_EQ(f->vertex_map.order(), 3u);
}

TEST(Classify, A2FifthTurn) {
  ClassGraphs graphs = build_class_graphs(initial_seed(a2()));
  ClusterAutomorphismReport r = cluster_automorphism_group(graphs);
  const ClusterAutomorphism* f = find_realization(r.classified, cluster({"x2", "x1^-1 + x1^-1*x2"}, 2));
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->vertex_map.order(), 5u);
  EXPECT_EQ(f->labelled_map.order(), 5u);
  EXPECT_EQ(f->direction, Direction::kDirect);
  MutationWord w = word_realization(f->vertex_map, graphs);
  EXPECT_EQ(to_string(w), "m1 (1 2)");
  EXPECT_EQ(apply_word(initial_seed(a2()), w).cluster, f->realization);
}

TEST(Classify, B3TripleMutationGeneratesTheDirectGroup) {
  ClassGraphs graphs = build_class_graphs(initial_seed(b3()));
  LabelledSeed image = apply_word(initial_seed(b3()), parse_word("m1 m2 m3", 3));
  Permutation phi = automorphism_from_image(image, graphs);
  ClusterAutomorphism a = classify(phi, graphs);
  EXPECT_EQ(a.direction, Direction::kDirect);
  EXPECT_EQ(a.realization, image.cluster);
  EXPECT_EQ(phi.order(), 4u);
  ClusterAutomorphismReport r = cluster_automorphism_group(graphs);
  auto closure = generate({phi}, graphs.graph().vertex_count());
  std::sort(closure.begin(), closure.end());
  EXPECT_EQ(closure, r.aut_plus.elements);
}

TEST(Classify, RealizationAgreesWithTheGraph) {
  for (const Case& c : desk_cases()) {
    SCOPED_TRACE(c.name);
    ClassGraphs graphs = build_class_graphs(initial_seed(c.b));
    std::size_t v0 = graphs.seed_of[0];
    for (const Permutation& phi : graph_automorphisms(graphs.graph()).elements) {
      ClusterAutomorphism a = classify(phi, graphs);
      Seed target = sort_seed(make_seed(a.realization, a.image_matrix)).seed;
      EXPECT_EQ(target.cluster, graphs.graph().vertices.seeds[phi(v0)].cluster);
    }
  }
}

// The image seed carries R or its opposite, never anything else.
TEST(Classify, DiagramIsPreservedOrReversed) {
  for (const Case& c : desk_cases()) {
    SCOPED_TRACE(c.name);
    ClassGraphs graphs = build_class_graphs(initial_seed(c.b));
    const std::size_t n = c.b.rank();
    for (const Permutation& phi : graph_automorphisms(graphs.graph()).elements) {
      ExchangeMatrix m = classify(phi, graphs).image_matrix;
      bool same = true, reversed = true;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (m.weight(i, j) != c.b.weight(i, j)) same = reversed = false;
          auto sg = [](std::int64_t x) { return (x > 0) - (x < 0); };
          if (sg(m(i, j)) != sg(c.b(i, j))) same = false;
          if (sg(m(i, j)) != -sg(c.b(i, j))) reversed = false;
        }
      }
      EXPECT_TRUE(same || reversed) << m.to_string();
    }
  }
}

TEST(Pullback, CommutesWithMutationsAndPermutations) {
  for (const Case& c : desk_cases()) {
    SCOPED_TRACE(c.name);
    ClassGraphs graphs = build_class_graphs(initial_seed(c.b));
    for (const Permutation& phi : graph_automorphisms(graphs.graph()).elements) {
      Permutation psi = pullback(phi, graphs);
      EXPECT_EQ(check_pullback(psi, phi, graphs), std::nullopt);
      // Independent of the check above: commute on every labelled vertex.
      const LabelledClass& lc = graphs.labelled.vertices;
      for (std::size_t v = 0; v < lc.size(); ++v) {
        for (std::size_t k = 0; k < c.b.rank(); ++k) {
          std::size_t e = graphs.labelled.incident[v][k];
          std::size_t w = graphs.labelled.edges[e].u == v ? graphs.labelled.edges[e].v : graphs.labelled.edges[e].u;
          std::size_t pe = graphs.labelled.incident[psi(v)][k];
          std::size_t pw = graphs.labelled.edges[pe].u == psi(v) ? graphs.labelled.edges[pe].v
                                                                 : graphs.labelled.edges[pe].u;
          EXPECT_EQ(psi(w), pw);
        }
        for (std::size_t i = 0; i + 1 < c.b.rank(); ++i) EXPECT_EQ(psi(graphs.transposed[v][i]), graphs.transposed[psi(v)][i]);
        EXPECT_EQ(graphs.seed_of[psi(v)], phi(graphs.seed_of[v]));
      }
    }
  }
}

TEST(Pullback, IsAnInjectiveHomomorphism) {
  for (const Case& c : desk_cases()) {
    SCOPED_TRACE(c.name);
    ClassGraphs graphs = build_class_graphs(initial_seed(c.b));
    AutGroup g = graph_automorphisms(graphs.graph());
    std::vector<Permutation> lifts;
    for (const Permutation& phi : g.elements) lifts.push_back(pullback(phi, graphs));
    EXPECT_EQ(std::set<Permutation>(lifts.begin(), lifts.end()).size(), lifts.size());
    for (std::size_t a = 0; a < g.order(); ++a) {
      for (std::size_t b = 0; b < g.order(); ++b) {
        std::size_t ab = *g.index_of(compose(g.elements[a], g.elements[b]));
        EXPECT_EQ(lifts[ab], compose(lifts[a], lifts[b]));
      }
    }
  }
}

TEST(Pullback, RejectsANonAutomorphism) {
  ClassGraphs graphs = build_class_graphs(initial_seed(a2()));
  Permutation swap({1, 0, 2, 3, 4});
  ASSERT_FALSE(is_graph_automorphism(graphs.graph(), swap));
  EXPECT_THROW(pullback(swap, graphs), InvalidInput);
}

// Geodesic loops are carried to geodesic loops of the same length.
TEST(Loops, PreservedByEveryAutomorphism) {
  for (const Case& c : desk_cases()) {
    SCOPED_TRACE(c.name);
    ClassGraphs graphs = build_class_graphs(initial_seed(c.b));
    const LabelledClass& lc = graphs.labelled.vertices;
    auto point = oracle::random_point(c.b.rank(), 5);
    for (const Permutation& phi : graph_automorphisms(graphs.marked).elements) {
      Permutation psi = pullback(phi, graphs);
      for (std::size_t v = 0; v < lc.size(); ++v) {
        oracle::Fingerprint here{point, lc.seeds[v].matrix.rows()};
        oracle::Fingerprint there{point, lc.seeds[psi(v)].matrix.rows()};
        for (std::size_t a = 0; a < c.b.rank(); ++a)
          for (std::size_t b = a + 1; b < c.b.rank(); ++b)
            ASSERT_EQ(oracle::loop_length(here, a, b), oracle::loop_length(there, a, b));
      }
    }
  }
}

TEST(Words, IdentityIsEmpty) {
  ClassGraphs graphs = build_class_graphs(initial_seed(b3()));
  Permutation id = Permutation::identity(graphs.graph().vertex_count());
  EXPECT_EQ(to_string(word_realization(id, graphs)), "()");
}

TEST(Words, EveryWordReachesTheImage) {
  for (const Case& c : desk_cases()) {
    SCOPED_TRACE(c.name);
    ClassGraphs graphs = build_class_graphs(initial_seed(c.b));
    for (const Permutation& phi : cluster_automorphism_group(graphs).aut.elements) {
      ClusterAutomorphism a = classify(phi, graphs);
      for (SearchOrder order : {SearchOrder::kAscending, SearchOrder::kDescending}) {
        MutationWord w = word_realization(phi, graphs, order);
        LabelledSeed reached = apply_word(initial_seed(c.b), w);
        EXPECT_EQ(reached.cluster, a.realization);
        EXPECT_EQ(automorphism_from_image(reached, graphs), phi);
      }
    }
  }
}

TEST(Words, AnySeedOfTheClassInducesAnAutomorphism) {
  ClassGraphs graphs = build_class_graphs(initial_seed(b2()));
  LabelledSeed turned =
      make_seed(cluster({"x2", "x1^-1 + x1^-1*x2^2"}, 2), ExchangeMatrix::from_rows({{0, 2}, {-1, 0}}));
  Permutation phi = automorphism_from_image(turned, graphs);
  EXPECT_EQ(phi.order(), 6u);
  EXPECT_EQ(classify(phi, graphs).direction, Direction::kNonCluster);
  LabelledSeed stranger = make_seed(cluster({"x1", "x1 + x2"}, 2), b2());
  EXPECT_THROW(automorphism_from_image(stranger, graphs), InvalidInput);
}

}  // namespace
}  // namespace clusterkit
