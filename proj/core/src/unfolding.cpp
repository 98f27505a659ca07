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


#include "clusterkit/unfolding.hpp"

#include <deque>
#include <map>
#include <set>

#include "clusterkit/errors.hpp"

namespace clusterkit {
namespace {

std::string block_name(std::size_t i, std::size_t j) {
  return "E" + std::to_string(i + 1) + " x E" + std::to_string(j + 1);
}

void require_zero_block(const ExchangeMatrix& c, const Blocks& blocks, std::size_t i) {
  if (i >= blocks.size()) throw InvalidInput("composite mutation index out of range");
  for (std::size_t r : blocks[i]) {
    for (std::size_t s : blocks[i]) {
      if (c(r, s) != 0) {
        throw InvalidInput("constituents of composite mutation " + std::to_string(i + 1) +
                           " do not commute: block " + block_name(i, i) + " is nonzero");
      }
    }
  }
}

std::vector<std::int64_t> pair_key(const ExchangeMatrix& b, const ExchangeMatrix& c) {
  std::vector<std::int64_t> key(b.entries().begin(), b.entries().end());
  key.insert(key.end(), c.entries().begin(), c.entries().end());
  return key;
}

}  // namespace

std::string to_string(UnfoldingVerdict v) {
  switch (v) {
    case UnfoldingVerdict::kValid: return "valid";
    case UnfoldingVerdict::kInvalid: return "invalid";
    case UnfoldingVerdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

UnfoldingSpec make_unfolding(ExchangeMatrix base, Blocks blocks, ExchangeMatrix unfolded) {
  if (!base.is_connected()) throw InvalidInput("unfoldings of disconnected diagrams are not supported");
  Symmetrizer d = compute_symmetrizer(base);
  if (blocks.size() != base.rank()) {
    throw InvalidInput("expected " + std::to_string(base.rank()) + " blocks, got " + std::to_string(blocks.size()));
  }
  std::size_t next = 0;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].size() != static_cast<std::size_t>(d.d[j])) {
      throw InvalidInput("block E" + std::to_string(j + 1) + " has " + std::to_string(blocks[j].size()) +
                         " indices but the symmetrizer entry is " + std::to_string(d.d[j]));
    }
    for (std::size_t r : blocks[j]) {
      if (r != next) throw InvalidInput("blocks must list consecutive indices 1..m in order");
      ++next;
    }
  }
  if (next != unfolded.rank()) {
    throw InvalidInput("blocks cover " + std::to_string(next) + " indices but C has rank " +
                       std::to_string(unfolded.rank()));
  }
  if (!unfolded.is_skew_symmetric()) throw InvalidInput("the unfolded matrix must be skew-symmetric");
  return UnfoldingSpec{std::move(base), std::move(d), std::move(blocks), std::move(unfolded)};
}

std::optional<std::string> check_block_conditions(const ExchangeMatrix& b, const ExchangeMatrix& c,
                                                  const Blocks& blocks) {
  const std::size_t n = b.rank();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t col : blocks[j]) {
        std::int64_t sum = 0;
        for (std::size_t row : blocks[i]) {
          std::int64_t e = c(row, col);
          sum += e;
          if (i == j && e != 0) return "block " + block_name(i, i) + " is not zero";
          if (b(i, j) > 0 && e < 0) {
            return "block " + block_name(i, j) + " has a negative entry while b_" + std::to_string(i + 1) +
                   std::to_string(j + 1) + " > 0";
          }
        }
        if (sum != b(i, j)) {
          return "column " + std::to_string(col + 1) + " of block " + block_name(i, j) + " sums to " +
                 std::to_string(sum) + ", expected " + std::to_string(b(i, j));
        }
      }
    }
  }
  return std::nullopt;
}

UnfoldingReport validate_unfolding(const UnfoldingSpec& spec, std::size_t cap) {
  struct State {
    ExchangeMatrix b, c;
    std::size_t parent;
    std::size_t via;
  };
  auto path = [](const std::vector<State>& states, std::size_t v) {
    std::vector<std::size_t> ks;
    for (; states[v].parent != kNoVertex; v = states[v].parent) ks.push_back(states[v].via);
    std::string out;
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) out += (out.empty() ? "m" : " m") + std::to_string(*it + 1);
    return out.empty() ? std::string("the initial pair") : "after " + out;
  };

  UnfoldingReport report;
  std::vector<State> states{{spec.base, spec.unfolded, kNoVertex, 0}};
  std::map<std::vector<std::int64_t>, std::size_t> seen{{pair_key(spec.base, spec.unfolded), 0}};
  const std::size_t n = spec.base_rank();
  for (std::size_t head = 0; head < states.size(); ++head) {
    report.pairs_explored = head + 1;
    if (auto why = check_block_conditions(states[head].b, states[head].c, spec.blocks)) {
      report.verdict = UnfoldingVerdict::kInvalid;
      report.diagnostic = path(states, head) + ": " + *why;
      return report;
    }
    for (std::size_t k = 0; k < n; ++k) {
      ExchangeMatrix b = mutate_matrix(states[head].b, k);
      ExchangeMatrix c = composite_mutate_matrix(states[head].c, spec.blocks, k);
      if (!seen.try_emplace(pair_key(b, c), states.size()).second) continue;
      if (states.size() >= cap) {
        report.verdict = UnfoldingVerdict::kInconclusive;
        report.diagnostic = "pair class exceeds the cap of " + std::to_string(cap);
        return report;
      }
      states.push_back({std::move(b), std::move(c), head, k});
    }
  }
  report.verdict = UnfoldingVerdict::kValid;
  return report;
}

ExchangeMatrix composite_mutate_matrix(const ExchangeMatrix& c, const Blocks& blocks, std::size_t i) {
  require_zero_block(c, blocks, i);
  ExchangeMatrix out = c;
  for (std::size_t r : blocks[i]) out = mutate_matrix(out, r);
  return out;
}

LabelledSeed composite_mutate(const LabelledSeed& v, const Blocks& blocks, std::size_t i) {
  require_zero_block(v.matrix, blocks, i);
  LabelledSeed out = v;
  for (std::size_t r : blocks[i]) out = mutate_seed(out, r);
  return out;
}

Permutation composite_permutation(const Permutation& sigma, const Blocks& blocks) {
  if (sigma.size() != blocks.size()) throw InvalidInput("permutation size does not match the block count");
  std::size_t m = 0;
  for (const auto& e : blocks) m += e.size();
  std::vector<std::size_t> images(m);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& from = blocks[i];
    const auto& to = blocks[sigma(i)];
    if (from.size() != to.size()) {
      throw InvalidInput("cannot lift the permutation: |E" + std::to_string(i + 1) + "| = " +
                         std::to_string(from.size()) + " but |E" + std::to_string(sigma(i) + 1) +
                         "| = " + std::to_string(to.size()));
    }
    for (std::size_t r = 0; r < from.size(); ++r) images[from[r]] = to[r];
  }
  return Permutation(std::move(images));
}

LabelledSeed apply_composite_word(const LabelledSeed& v, const Blocks& blocks, const MutationWord& w) {
  LabelledSeed out = v;
  for (std::size_t k : w.mutations) out = composite_mutate(out, blocks, k);
  if (w.permutation.size() == 0) return out;
  return apply_permutation(out, composite_permutation(w.permutation, blocks));
}

UnfoldedSeed unfold_seed(const LabelledSeed& u, const UnfoldingSpec& spec) {
  if (u.matrix != spec.base) throw InvalidInput("seed matrix differs from the unfolding's base matrix");
  if (u != initial_seed(spec.base)) throw InvalidInput("only the initial seed can be unfolded directly");
  return UnfoldedSeed{initial_seed(spec.unfolded), spec.blocks};
}

EmbeddedAutomorphism embed_automorphism(const Permutation& phi, const UnfoldingSpec& spec, const ClassGraphs& base,
                                        const ClassGraphs& unfolded) {
  if (base.labelled.vertices.seeds[0] != initial_seed(spec.base) ||
      unfolded.labelled.vertices.seeds[0] != initial_seed(spec.unfolded)) {
    throw InvalidInput("class graphs must start from the initial seeds of B and C");
  }
  ClusterAutomorphism c = classify(phi, base);
  if (c.direction == Direction::kNonCluster) {
    throw InvalidInput("only cluster automorphisms can be embedded; this one sends B to " +
                       c.image_matrix.to_string());
  }
  const LabelledSeed start = unfold_seed(base.labelled.vertices.seeds[0], spec).seed;

  auto lift = [&](const MutationWord& w, LabelledSeed* image) {
    *image = apply_composite_word(start, spec.blocks, w);
    const ExchangeMatrix& want = c.direction == Direction::kDirect ? spec.unfolded : -spec.unfolded;
    if (image->matrix != want) {
      throw InvariantViolation("lifted word sends C to " + image->matrix.to_string() + " instead of " +
                               want.to_string());
    }
    return automorphism_from_image(*image, unfolded);
  };

  EmbeddedAutomorphism out;
  out.source = phi;
  out.direction = c.direction;
  out.word = word_realization(phi, base, SearchOrder::kAscending);
  out.vertex_map = lift(out.word, &out.image);

  LabelledSeed other_image;
  MutationWord other = word_realization(phi, base, SearchOrder::kDescending);
  if (lift(other, &other_image) != out.vertex_map) {
    out.diagnostic = "realizations '" + to_string(out.word) + "' and '" + to_string(other) +
                     "' induce different maps of E(C)";
  }
  return out;
}

std::vector<std::size_t> embedded_vertices(const UnfoldingSpec& spec, const ClassGraphs& base,
                                           const ClassGraphs& unfolded) {
  const auto& lab = base.labelled.vertices;
  const std::size_t n = base.rank();
  std::vector<std::size_t> out(base.graph().vertex_count(), kNoVertex);
  std::vector<LabelledSeed> lifted(lab.size());
  std::vector<bool> seen(lab.size(), false);
  lifted[0] = unfold_seed(lab.seeds[0], spec).seed;
  seen[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    auto target = unfolded.labelled.vertices.find(lifted[v]);
    if (!target) throw InvariantViolation("lifted seed is outside the unfolded class");
    std::size_t s = base.seed_of[v], t = unfolded.seed_of[*target];
    if (out[s] == kNoVertex) {
      out[s] = t;
    } else if (out[s] != t) {
      throw InvariantViolation("two labellings of one seed lift to different seeds");
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t w = lab.mutation[v][k];
      if (w == kNoVertex || seen[w]) continue;
      seen[w] = true;
      lifted[w] = composite_mutate(lifted[v], spec.blocks, k);
      queue.push_back(w);
    }
  }
  return out;
}

}  // namespace clusterkit

namespace clusterkit {
namespace {

// Maps of E(C) induced by lifting words u . w = u, restricted to words whose
// permutation part respects block sizes.
std::vector<Permutation> loop_lifts(const UnfoldingSpec& spec, const ClassGraphs& base, const ClassGraphs& unfolded) {
  const auto& lab = base.labelled.vertices;
  const std::size_t n = base.rank();
  const LabelledSeed start = initial_seed(spec.unfolded);

  std::vector<std::vector<std::size_t>> path(lab.size());
  std::vector<bool> seen(lab.size(), false);
  std::vector<std::size_t> order{0};
  seen[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::size_t v = order[head];
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t w = lab.mutation[v][k];
      if (w == kNoVertex || seen[w]) continue;
      seen[w] = true;
      path[w] = path[v];
      path[w].push_back(k);
      order.push_back(w);
    }
  }

  std::set<Permutation> out;
  auto lift = [&](const MutationWord& loop) {
    LabelledSeed image = apply_composite_word(start, spec.blocks, loop);
    if (image.matrix != spec.unfolded) {
      throw InvariantViolation("a trivial word of B lifts to a map sending C to " + image.matrix.to_string());
    }
    out.insert(automorphism_from_image(image, unfolded));
  };
  for (std::size_t v : order) {
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t w = lab.mutation[v][k];
      MutationWord loop{path[v], Permutation::identity(n)};
      loop.mutations.push_back(k);
      loop.mutations.insert(loop.mutations.end(), path[w].rbegin(), path[w].rend());
      lift(loop);
    }
    if (v == 0 || base.seed_of[v] != base.seed_of[0]) continue;
    // v relabels the initial seed: v . sigma = u.
    std::vector<std::size_t> sigma(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (lab.seeds[v].cluster[i] == lab.seeds[0].cluster[j]) sigma[i] = j;
      }
    }
    MutationWord loop{path[v], Permutation(sigma)};
    bool liftable = true;
    for (std::size_t i = 0; i < n; ++i) liftable &= spec.d.d[i] == spec.d.d[sigma[i]];
    if (liftable) lift(loop);
  }
  return {out.begin(), out.end()};
}

}  // namespace

GroupEmbedding embed_automorphism_group(const AutGroup& aut, const UnfoldingSpec& spec, const ClassGraphs& base,
                                        const ClassGraphs& unfolded) {
  GroupEmbedding out;
  for (const auto& phi : aut.elements) out.embedded.push_back(embed_automorphism(phi, spec, base, unfolded));
  const std::size_t degree = unfolded.graph().vertex_count();
  out.ambiguity = make_group(generate(loop_lifts(spec, base, unfolded), degree));
  const auto& k = out.ambiguity.elements;

  // Cosets lift(w) K of every element, for membership tests.
  std::vector<std::set<Permutation>> coset(aut.order());
  for (std::size_t i = 0; i < aut.order(); ++i) {
    for (const auto& x : k) coset[i].insert(compose(out.embedded[i].vertex_map, x));
  }

  const auto& gens = aut.generators;
  std::vector<std::size_t> choice(gens.size(), 0);
  for (;;) {
    // Extend the generator images multiplicatively over the whole group.
    std::vector<std::optional<Permutation>> image(aut.order());
    image[0] = Permutation::identity(degree);
    std::deque<std::size_t> queue{0};
    bool ok = true;
    while (ok && !queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < gens.size() && ok; ++g) {
        std::size_t y = *aut.index_of(compose(aut.elements[gens[g]], aut.elements[x]));
        Permutation value = compose(compose(out.embedded[gens[g]].vertex_map, k[choice[g]]), *image[x]);
        if (!image[y]) {
          if (!coset[y].count(value)) ok = false;
          image[y] = std::move(value);
          queue.push_back(y);
        } else if (*image[y] != value) {
          ok = false;
        }
      }
    }
    if (ok) {
      std::vector<Permutation> elements;
      for (auto& m : image) elements.push_back(*m);
      std::set<Permutation> distinct(elements.begin(), elements.end());
      if (distinct.size() == aut.order()) {
        for (std::size_t i = 0; i < aut.order(); ++i) out.embedded[i].vertex_map = elements[i];
        out.homomorphic = true;
        out.image = make_group(std::move(elements));
        break;
      }
    }
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == k.size()) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  return out;
}

}  // namespace clusterkit
