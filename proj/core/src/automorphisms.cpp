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

#include <algorithm>
#include <deque>
#include <set>

#include "clusterkit/errors.hpp"

namespace clusterkit {
namespace {

using Colour = std::vector<std::int64_t>;

// Marks on the edges joining a and b, sorted. Unmarked graphs use 0.
std::vector<std::int64_t> marks_between(const ExchangeGraph& g, const std::vector<std::int64_t>* marks,
                                        std::size_t a, std::size_t b) {
  std::vector<std::int64_t> out;
  for (std::size_t e : g.incident[a]) {
    if (e == kNoEdge || g.other_end(e, a) != b) continue;
    out.push_back(marks ? (*marks)[e] : 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Colour> vertex_colours(const ExchangeGraph& g, const std::vector<std::int64_t>* marks, bool prune) {
  std::vector<Colour> colour(g.vertex_count());
  if (!prune) return colour;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& s = g.vertices.seeds[v];
    if (s.rank() >= 2) {
      for (const auto& len : n_invariants(as_labelled(s)).n0) colour[v].push_back(len.steps());
    }
    if (marks) {
      std::vector<std::int64_t> incident;
      for (std::size_t e : g.incident[v]) {
        if (e != kNoEdge) incident.push_back((*marks)[e]);
      }
      std::sort(incident.begin(), incident.end());
      colour[v].push_back(-1);
      colour[v].insert(colour[v].end(), incident.begin(), incident.end());
    }
  }
  return colour;
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const ExchangeGraph& g, const std::vector<std::int64_t>* marks, const AutSearchOptions& options)
      : g_(g), marks_(marks), cap_(options.node_cap), colour_(vertex_colours(g, marks, options.prune)) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    parent_.assign(n, kNoVertex);
    for (std::size_t root = 0; root < n; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      std::deque<std::size_t> queue{root};
      while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        order_.push_back(v);
        for (std::size_t w : g.neighbors(v)) {
          if (!seen[w]) {
            seen[w] = true;
            parent_[w] = v;
            queue.push_back(w);
          }
        }
      }
    }
  }

  std::vector<Permutation> run() {
    image_.assign(g_.vertex_count(), kNoVertex);
    used_.assign(g_.vertex_count(), false);
    if (g_.vertex_count() > 0) recurse(0);
    return std::move(found_);
  }

 private:
  void recurse(std::size_t idx) {
    if (idx == order_.size()) {
      found_.emplace_back(image_);
      return;
    }
    if (++nodes_ > cap_) {
      throw CapExceeded("automorphism search exceeded " + std::to_string(cap_) + " nodes");
    }
    const std::size_t v = order_[idx];
    std::vector<std::size_t> candidates;
    if (parent_[v] == kNoVertex) {
      for (std::size_t c = 0; c < g_.vertex_count(); ++c) candidates.push_back(c);
    } else {
      candidates = g_.neighbors(image_[parent_[v]]);
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }
    for (std::size_t c : candidates) {
      if (used_[c] || colour_[c] != colour_[v] || !consistent(v, c)) continue;
      image_[v] = c;
      used_[c] = true;
      recurse(idx + 1);
      used_[c] = false;
      image_[v] = kNoVertex;
    }
  }

  bool consistent(std::size_t v, std::size_t c) const {
    if (g_.neighbors(v).size() != g_.neighbors(c).size()) return false;
    for (std::size_t w : g_.neighbors(v)) {
      if (image_[w] == kNoVertex && w != v) continue;
      std::size_t iw = w == v ? c : image_[w];
      if (marks_between(g_, marks_, v, w) != marks_between(g_, marks_, c, iw)) return false;
    }
    return true;
  }

  const ExchangeGraph& g_;
  const std::vector<std::int64_t>* marks_;
  std::size_t cap_;
  std::size_t nodes_ = 0;
  std::vector<Colour> colour_;
  std::vector<std::size_t> order_, parent_, image_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

void require_complete(const ExchangeGraph& g) {
  if (g.vertices.truncated) throw InvalidInput("automorphisms need the full exchange graph, not a truncated ball");
}

std::optional<GroupType> classify_group(const std::vector<Permutation>& elements) {
  const std::size_t order = elements.size();
  if (order > 16) return std::nullopt;
  if (order == 1) return GroupType::kTrivial;
  for (const auto& g : elements) {
    if (g.order() == order) return GroupType::kCyclic;
  }
  if (order % 2 == 0) {
    const std::size_t m = order / 2;
    for (const auto& r : elements) {
      if (r.order() != m) continue;
      std::vector<Permutation> powers{Permutation::identity(r.size())};
      while (powers.size() < m) powers.push_back(compose(r, powers.back()));
      const Permutation r_inv = r.inverse();
      for (const auto& s : elements) {
        if (s.order() != 2 || std::find(powers.begin(), powers.end(), s) != powers.end()) continue;
        if (compose(s, compose(r, s)) == r_inv) return GroupType::kDihedral;
      }
    }
  }
  return GroupType::kOther;
}

std::size_t find_labelled(const ClassGraphs& graphs, const LabelledSeed& s, const char* what) {
  auto v = graphs.labelled.vertices.find(s);
  if (!v) throw InvariantViolation(std::string(what) + ": labelled seed outside the class");
  return *v;
}

bool is_bijection(const std::vector<std::size_t>& map) {
  std::vector<bool> hit(map.size(), false);
  for (std::size_t v : map) {
    if (v >= map.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace

std::string to_string(GroupType t) {
  switch (t) {
    case GroupType::kTrivial: return "trivial";
    case GroupType::kCyclic: return "cyclic";
    case GroupType::kDihedral: return "dihedral";
    case GroupType::kOther: return "other";
  }
  return "other";
}

std::string to_string(Direction d) {
  switch (d) {
    case Direction::kDirect: return "direct";
    case Direction::kInverse: return "inverse";
    case Direction::kNonCluster: return "non-cluster";
  }
  return "non-cluster";
}

std::optional<std::size_t> AutGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

std::vector<Permutation> generate(const std::vector<Permutation>& generators, std::size_t degree) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> queue{Permutation::identity(degree)};
  while (!queue.empty()) {
    Permutation g = queue.front();
    queue.pop_front();
    for (const auto& s : generators) {
      Permutation h = compose(s, g);
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return {seen.begin(), seen.end()};
}

AutGroup make_group(std::vector<Permutation> elements) {
  if (elements.empty()) throw InvalidInput("a group has at least one element");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  AutGroup group;
  group.elements = std::move(elements);
  const std::size_t degree = group.elements.front().size();
  if (!group.elements.front().is_identity()) throw InvariantViolation("element list lacks the identity");
  for (const auto& a : group.elements) {
    for (const auto& b : group.elements) {
      if (!group.index_of(compose(a, b))) throw InvariantViolation("element list is not closed under composition");
    }
  }
  std::vector<Permutation> gens;
  std::set<Permutation> span{Permutation::identity(degree)};
  for (std::size_t i = 0; i < group.elements.size(); ++i) {
    if (span.count(group.elements[i])) continue;
    gens.push_back(group.elements[i]);
    group.generators.push_back(i);
    auto closure = generate(gens, degree);
    span = std::set<Permutation>(closure.begin(), closure.end());
  }
  if (span.size() != group.order()) throw InvariantViolation("generators do not reproduce the group order");
  group.type = classify_group(group.elements);
  return group;
}

bool is_graph_automorphism(const ExchangeGraph& g, const Permutation& phi) {
  if (phi.size() != g.vertex_count()) return false;
  for (const auto& e : g.edges) {
    if (marks_between(g, nullptr, e.u, e.v) != marks_between(g, nullptr, phi(e.u), phi(e.v))) return false;
  }
  return true;
}

bool preserves_marks(const MarkedExchangeGraph& g, const Permutation& phi) {
  if (phi.size() != g.graph.vertex_count()) return false;
  for (const auto& e : g.graph.edges) {
    if (marks_between(g.graph, &g.marks, e.u, e.v) != marks_between(g.graph, &g.marks, phi(e.u), phi(e.v))) {
      return false;
    }
  }
  return true;
}

AutGroup graph_automorphisms(const ExchangeGraph& g, const AutSearchOptions& options) {
  require_complete(g);
  return make_group(AutomorphismSearch(g, nullptr, options).run());
}

AutGroup graph_automorphisms(const MarkedExchangeGraph& g, const AutSearchOptions& options) {
  require_complete(g.graph);
  return make_group(AutomorphismSearch(g.graph, &g.marks, options).run());
}

Permutation pullback(const Permutation& phi, const ClassGraphs& graphs, std::size_t anchor) {
  const auto& lab = graphs.labelled.vertices;
  const auto& g = graphs.graph();
  const std::size_t n = graphs.rank();
  const std::size_t count = lab.size();
  if (phi.size() != g.vertex_count()) throw InvalidInput("automorphism size does not match the exchange graph");
  if (anchor >= count) throw InvalidInput("anchor outside the labelled class");
  if (!is_graph_automorphism(g, phi)) throw InvalidInput("not an exchange graph automorphism");

  // Labelling of the image of the anchor: the variable exchanged along the
  // image of edge k goes to position k.
  const std::size_t s = graphs.seed_of[anchor];
  const std::size_t t = phi(s);
  std::vector<std::size_t> to_label(n, kNoVertex);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t e = g.incident[s][graphs.sort_order[anchor](k)];
    if (e == kNoEdge) throw InvalidInput("pullback needs the full exchange graph");
    std::size_t target = phi(g.other_end(e, s));
    std::size_t found = kNoVertex;
    for (std::size_t p = 0; p < n; ++p) {
      std::size_t f = g.incident[t][p];
      if (f != kNoEdge && g.other_end(f, t) == target) {
        if (found != kNoVertex) throw InvalidInput("pullback is undefined on graphs with parallel edges");
        found = p;
      }
    }
    if (found == kNoVertex || to_label[found] != kNoVertex) {
      throw InvariantViolation("map is not an exchange graph automorphism at the anchor");
    }
    to_label[found] = k;
  }
  LabelledSeed start = apply_permutation(as_labelled(g.vertices.seeds[t]), Permutation(to_label));

  std::vector<std::size_t> psi(count, kNoVertex);
  psi[anchor] = find_labelled(graphs, start, "pullback");
  std::deque<std::size_t> queue{anchor};
  auto assign = [&](std::size_t v, std::size_t image) {
    if (v == kNoVertex || image == kNoVertex) throw InvalidInput("pullback needs the full labelled class");
    if (psi[v] == kNoVertex) {
      psi[v] = image;
      queue.push_back(v);
    } else if (psi[v] != image) {
      throw InvariantViolation("pullback propagation is inconsistent at labelled vertex " + std::to_string(v));
    }
  };
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < n; ++k) assign(lab.mutation[v][k], lab.mutation[psi[v]][k]);
    for (std::size_t i = 0; i + 1 < n; ++i) assign(graphs.transposed[v][i], graphs.transposed[psi[v]][i]);
  }
  if (!is_bijection(psi)) throw InvariantViolation("pullback is not a bijection of the labelled class");
  Permutation out(std::move(psi));
  if (auto why = check_pullback(out, phi, graphs)) throw InvariantViolation("pullback: " + *why);
  return out;
}

std::optional<std::string> check_pullback(const Permutation& psi, const Permutation& phi, const ClassGraphs& graphs) {
  const auto& lab = graphs.labelled.vertices;
  const std::size_t n = graphs.rank();
  if (psi.size() != lab.size()) return "size mismatch";
  for (std::size_t v = 0; v < lab.size(); ++v) {
    if (graphs.seed_of[psi(v)] != phi(graphs.seed_of[v])) {
      return "does not project onto the graph automorphism at labelled vertex " + std::to_string(v);
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t w = lab.mutation[v][k];
      if (w != kNoVertex && psi(w) != lab.mutation[psi(v)][k]) {
        return "edge label " + std::to_string(k + 1) + " not preserved at labelled vertex " + std::to_string(v);
      }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (psi(graphs.transposed[v][i]) != graphs.transposed[psi(v)][i]) {
        return "does not commute with a transposition at labelled vertex " + std::to_string(v);
      }
    }
  }
  return std::nullopt;
}

ClusterAutomorphism classify(const Permutation& phi, const ClassGraphs& graphs) {
  ClusterAutomorphism out;
  out.vertex_map = phi;
  out.labelled_map = pullback(phi, graphs, 0);
  const auto& seeds = graphs.labelled.vertices.seeds;
  const LabelledSeed& image = seeds[out.labelled_map(0)];
  out.realization = image.cluster;
  out.image_matrix = image.matrix;
  const ExchangeMatrix& b = seeds[0].matrix;
  if (image.matrix == b) {
    out.direction = Direction::kDirect;
  } else if (image.matrix == -b) {
    out.direction = Direction::kInverse;
  } else {
    out.direction = Direction::kNonCluster;
  }
  return out;
}

ClusterAutomorphismReport cluster_automorphism_group(const ClassGraphs& graphs, const AutSearchOptions& options) {
  ClusterAutomorphismReport report;
  report.aut = graph_automorphisms(graphs.marked, options);
  std::vector<Permutation> direct;
  for (const auto& phi : report.aut.elements) {
    auto c = classify(phi, graphs);
    if (c.direction == Direction::kNonCluster) {
      throw InvariantViolation("marked automorphism sends B to " + c.image_matrix.to_string() +
                               ", neither B nor -B");
    }
    if (c.direction == Direction::kDirect) direct.push_back(phi);
    report.classified.push_back(std::move(c));
  }
  report.aut_plus = make_group(std::move(direct));
  const ExchangeMatrix minus_b = -graphs.labelled.vertices.seeds[0].matrix;
  for (const auto& s : graphs.labelled.vertices.seeds) {
    if (s.matrix == minus_b) {
      report.opposite_in_class = true;
      break;
    }
  }
  const std::size_t index = report.index();
  if (report.aut.order() % report.aut_plus.order() != 0 || (index != 1 && index != 2)) {
    throw InvariantViolation("direct automorphisms have index " + std::to_string(index));
  }
  if ((index == 2) != report.opposite_in_class) {
    throw InvariantViolation("index of the direct subgroup disagrees with -B occurring in the class");
  }
  return report;
}

MutationWord word_realization(const Permutation& phi, const ClassGraphs& graphs, SearchOrder order) {
  const auto& lab = graphs.labelled.vertices;
  const std::size_t n = graphs.rank();
  const Permutation psi = pullback(phi, graphs, 0);
  const std::size_t target = psi(0);
  const std::size_t target_seed = graphs.seed_of[target];

  std::vector<std::size_t> parent(lab.size(), kNoVertex), via(lab.size(), 0);
  std::vector<bool> seen(lab.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = kNoVertex;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    if (graphs.seed_of[v] == target_seed) {
      reached = v;
      break;
    }
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t k = order == SearchOrder::kAscending ? step : n - 1 - step;
      std::size_t w = lab.mutation[v][k];
      if (w != kNoVertex && !seen[w]) {
        seen[w] = true;
        parent[w] = v;
        via[w] = k;
        queue.push_back(w);
      }
    }
  }
  if (reached == kNoVertex) throw InvariantViolation("target seed unreachable from the initial seed");

  MutationWord word;
  for (std::size_t v = reached; v != 0; v = parent[v]) word.mutations.push_back(via[v]);
  std::reverse(word.mutations.begin(), word.mutations.end());
  const auto& r = lab.seeds[reached].cluster;
  const auto& t = lab.seeds[target].cluster;
  std::vector<std::size_t> sigma(n, kNoVertex);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (r[i] == t[j]) sigma[i] = j;
    }
  }
  word.permutation = Permutation(sigma);
  if (apply_word(lab.seeds[0], word) != lab.seeds[target]) {
    throw InvariantViolation("word realization does not reproduce the pulled-back image");
  }
  return word;
}

Permutation automorphism_from_image(const LabelledSeed& image, const ClassGraphs& graphs) {
  const auto& lab = graphs.labelled.vertices;
  const std::size_t n = graphs.rank();
  auto start = lab.find(image);
  if (!start) throw InvalidInput("image seed is not in the labelled class");

  std::vector<std::size_t> f(lab.size(), kNoVertex);
  f[0] = *start;
  std::deque<std::size_t> queue{0};
  auto assign = [&](std::size_t v, std::size_t w) {
    if (v == kNoVertex || w == kNoVertex) throw InvalidInput("automorphism extension needs the full class");
    if (f[v] == kNoVertex) {
      f[v] = w;
      queue.push_back(v);
    } else if (f[v] != w) {
      throw InvariantViolation("image does not extend consistently over the labelled class");
    }
  };
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < n; ++k) assign(lab.mutation[v][k], lab.mutation[f[v]][k]);
    for (std::size_t i = 0; i + 1 < n; ++i) assign(graphs.transposed[v][i], graphs.transposed[f[v]][i]);
  }

  const auto& g = graphs.graph();
  std::vector<std::size_t> phi(g.vertex_count(), kNoVertex);
  for (std::size_t v = 0; v < lab.size(); ++v) {
    std::size_t s = graphs.seed_of[v], t = graphs.seed_of[f[v]];
    if (phi[s] == kNoVertex) {
      phi[s] = t;
    } else if (phi[s] != t) {
      throw InvariantViolation("image does not induce a well-defined map of seeds");
    }
  }
  if (!is_bijection(phi)) throw InvariantViolation("induced map of seeds is not a bijection");
  Permutation out(std::move(phi));
  if (!is_graph_automorphism(g, out)) throw InvariantViolation("induced map is not an exchange graph automorphism");
  return out;
}

}  // namespace clusterkit
