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


#include "clusterkit/exchange_graph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include "clusterkit/errors.hpp"

namespace clusterkit {
namespace {

void require_connected(const LabelledSeed& u) {
  if (!u.matrix.is_connected()) throw InvalidInput("the diagram of " + u.matrix.to_string() + " is disconnected");
}

std::string unordered_key(const LabelledSeed& u) { return cluster_key(sort_seed(u).seed.cluster); }

// Arithmetic modulo the Mersenne prime 2^61 - 1. Loops are traced on values
// at a fixed point first; a seed can only recur when its values do, so the
// symbolic check runs only at candidate closing steps.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
__extension__ using Wide = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  Wide p = static_cast<Wide>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t r = lo + hi;
  return r >= kPrime ? r - kPrime : r;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a)) {
    if (e & 1) r = mul_mod(r, a);
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

std::uint64_t value_mod(const LaurentPoly& p, const std::vector<std::uint64_t>& point,
                                       const std::vector<std::uint64_t>& inverse) {
  std::uint64_t total = 0;
  for (const auto& t : p.terms()) {
    BigInt c = t.coefficient % BigInt(kPrime);
    if (c < 0) c += kPrime;
    std::uint64_t v = static_cast<std::uint64_t>(c);
    for (std::size_t i = 0; i < t.monomial.rank(); ++i) {
      int e = t.monomial.exponent(i);
      if (e > 0) v = mul_mod(v, pow_mod(point[i], static_cast<std::uint64_t>(e)));
      if (e < 0) v = mul_mod(v, pow_mod(inverse[i], static_cast<std::uint64_t>(-e)));
    }
    total = (total + v) % kPrime;
  }
  return total;
}

// Values of the cluster at a fixed pseudo-random point, or nothing if some
// value vanishes (then the caller falls back to exact arithmetic).
std::optional<std::vector<std::uint64_t>> cluster_values(const LabelledSeed& u) {
  const std::size_t ambient = u.cluster.empty() ? 0 : u.cluster[0].rank();
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<std::uint64_t> point(ambient), inverse(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    point[i] = 2 + rng() % (kPrime - 3);
    inverse[i] = inv_mod(point[i]);
  }
  std::vector<std::uint64_t> values;
  for (const auto& p : u.cluster) {
    std::uint64_t v = value_mod(p, point, inverse);
    if (v == 0) return std::nullopt;
    values.push_back(v);
  }
  return values;
}

// Exchange relation on values; false if the old value is zero.
bool mutate_values(std::vector<std::uint64_t>& values, const ExchangeMatrix& b, std::size_t k) {
  std::uint64_t pos = 1, neg = 1;
  for (std::size_t j = 0; j < b.rank(); ++j) {
    std::int64_t e = b(j, k);
    if (e > 0) pos = mul_mod(pos, pow_mod(values[j], static_cast<std::uint64_t>(e)));
    if (e < 0) neg = mul_mod(neg, pow_mod(values[j], static_cast<std::uint64_t>(-e)));
  }
  if (values[k] == 0) return false;
  values[k] = mul_mod((pos + neg) % kPrime, inv_mod(values[k]));
  return values[k] != 0;
}

LoopLength geodesic_loop_exact(const LabelledSeed& u, std::size_t a, std::size_t b) {
  const std::string start = unordered_key(u);
  LabelledSeed v = u;
  for (int step = 1; step <= kLoopCutoff; ++step) {
    v = mutate_seed(v, step % 2 == 1 ? a : b);
    if (unordered_key(v) == start) return LoopLength::finite(step);
  }
  return LoopLength::infinite();
}

}  // namespace

std::vector<std::size_t> LabelledExchangeGraph::components() const {
  const std::size_t n = vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : edges) {
    std::size_t a = root(e.u), b = root(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> label(n, kNoVertex), out(n);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = root(v);
    if (label[r] == kNoVertex) label[r] = next++;
    out[v] = label[r];
  }
  return out;
}

std::size_t LabelledExchangeGraph::component_count() const {
  auto c = components();
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

LabelledExchangeGraph build_labelled_exchange_graph(const LabelledSeed& u, const EnumerationOptions& options) {
  require_connected(u);
  LabelledExchangeGraph g;
  g.vertices = enumerate_labelled_class(u, options);
  const std::size_t n = u.rank();
  g.incident.assign(g.vertices.size(), std::vector<std::size_t>(n, kNoEdge));
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t w = g.vertices.mutation[v][k];
      if (w == kNoVertex || g.incident[v][k] != kNoEdge) continue;
      std::size_t back = g.vertices.mutation[w][k];
      if (back != kNoVertex && back != v) throw InvariantViolation("mutation is not an involution on the labelled class");
      g.incident[v][k] = g.incident[w][k] = g.edges.size();
      g.edges.push_back({v, w, k});
    }
  }
  return g;
}

std::size_t ExchangeGraph::edge_between(std::size_t a, std::size_t b) const {
  for (std::size_t e : incident[a]) {
    if (e != kNoEdge && other_end(e, a) == b) return e;
  }
  return kNoEdge;
}

std::vector<std::size_t> ExchangeGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t e : incident[v]) {
    if (e != kNoEdge) out.push_back(other_end(e, v));
  }
  return out;
}

ExchangeGraph build_exchange_graph(const LabelledSeed& u, const EnumerationOptions& options) {
  require_connected(u);
  ExchangeGraph g;
  g.vertices = enumerate_class(u, options);
  const std::size_t n = u.rank();
  g.incident.assign(g.vertices.size(), std::vector<std::size_t>(n, kNoEdge));
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    for (std::size_t p = 0; p < n; ++p) {
      auto step = g.vertices.next[v][p];
      if (step.vertex == kNoVertex || g.incident[v][p] != kNoEdge) continue;
      auto back = g.vertices.next[step.vertex][step.position];
      if (back.vertex != kNoVertex && (back.vertex != v || back.position != p)) {
        throw InvariantViolation("mutation is not an involution on the seed class");
      }
      g.incident[v][p] = g.incident[step.vertex][step.position] = g.edges.size();
      g.edges.push_back({v, step.vertex, p, step.position});
    }
  }
  return g;
}

MarkedExchangeGraph mark_exchange_graph(ExchangeGraph g) {
  std::vector<Symmetrizer> d;
  d.reserve(g.vertex_count());
  for (const auto& s : g.vertices.seeds) d.push_back(compute_symmetrizer(s.matrix));
  MarkedExchangeGraph m;
  m.marks.reserve(g.edge_count());
  for (const auto& e : g.edges) {
    std::int64_t from_u = d[e.u].d[e.pos_u];
    std::int64_t from_v = d[e.v].d[e.pos_v];
    if (from_u != from_v) {
      throw InvariantViolation("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is marked " +
                               std::to_string(from_u) + " from one end and " + std::to_string(from_v) +
                               " from the other");
    }
    m.marks.push_back(from_u);
  }
  m.graph = std::move(g);
  return m;
}

MarkedExchangeGraph build_marked_exchange_graph(const LabelledSeed& u, const EnumerationOptions& options) {
  return mark_exchange_graph(build_exchange_graph(u, options));
}

std::vector<std::size_t> ClassGraphs::representatives() const {
  std::vector<std::size_t> rep(graph().vertex_count(), kNoVertex);
  for (std::size_t v = 0; v < seed_of.size(); ++v) {
    if (rep[seed_of[v]] == kNoVertex) rep[seed_of[v]] = v;
  }
  return rep;
}

ClassGraphs build_class_graphs(const LabelledSeed& u, const EnumerationOptions& options) {
  ClassGraphs out;
  out.labelled = build_labelled_exchange_graph(u, options);
  out.marked = build_marked_exchange_graph(u, options);
  const auto& seeds = out.marked.graph.vertices;
  out.seed_of.reserve(out.labelled.vertex_count());
  out.sort_order.reserve(out.labelled.vertex_count());
  for (const auto& s : out.labelled.vertices.seeds) {
    SortedSeed sorted = sort_seed(s);
    auto w = seeds.find_key(cluster_key(sorted.seed.cluster));
    if (!w) throw InvariantViolation("labelled seed has no image in the exchange graph");
    if (seeds.seeds[*w].matrix != sorted.seed.matrix) {
      throw InvariantViolation("labelled seed and its quotient carry different matrices");
    }
    out.seed_of.push_back(*w);
    out.sort_order.push_back(std::move(sorted.order));
  }
  const std::size_t n = u.rank();
  std::vector<Permutation> swaps;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    std::swap(images[i], images[i + 1]);
    swaps.emplace_back(std::move(images));
  }
  out.transposed.assign(out.labelled.vertex_count(), std::vector<std::size_t>(swaps.size(), kNoVertex));
  for (std::size_t v = 0; v < out.labelled.vertex_count(); ++v) {
    for (std::size_t i = 0; i < swaps.size(); ++i) {
      auto w = out.labelled.vertices.find(apply_permutation(out.labelled.vertices.seeds[v], swaps[i]));
      if (!w) throw InvariantViolation("labelled class is not closed under permutations");
      out.transposed[v][i] = *w;
    }
  }
  return out;
}

void verify_marking_lifts(const ClassGraphs& graphs) {
  const auto& g = graphs.graph();
  for (const auto& e : graphs.labelled.edges) {
    std::int64_t d = compute_symmetrizer(graphs.labelled.vertices.seeds[e.u].matrix).d[e.label];
    std::size_t s = graphs.seed_of[e.u];
    std::size_t pos = graphs.sort_order[e.u](e.label);
    std::size_t q = g.incident[s][pos];
    if (q == kNoEdge) continue;  // cut off by a radius
    if (g.other_end(q, s) != graphs.seed_of[e.v]) {
      throw InvariantViolation("labelled edge does not project onto an exchange graph edge");
    }
    if (graphs.marked.marks[q] != d) {
      throw InvariantViolation("labelled lift of edge " + std::to_string(q) + " gives mark " + std::to_string(d) +
                               " instead of " + std::to_string(graphs.marked.marks[q]));
    }
  }
}

std::string LoopLength::to_string() const { return is_infinite() ? "inf" : std::to_string(steps_); }

LoopLength geodesic_loop(const LabelledSeed& u, std::size_t a, std::size_t b) {
  const std::size_t n = u.rank();
  if (a >= n || b >= n) throw InvalidInput("loop index outside the seed rank");
  if (a == b) throw InvalidInput("a geodesic loop needs two distinct positions");
  auto values = cluster_values(u);
  if (!values) return geodesic_loop_exact(u, a, b);
  const std::vector<std::uint64_t> start = *values;
  const std::string start_key = unordered_key(u);
  ExchangeMatrix m = u.matrix;
  for (int step = 1; step <= kLoopCutoff; ++step) {
    std::size_t k = step % 2 == 1 ? a : b;
    if (!mutate_values(*values, m, k)) return geodesic_loop_exact(u, a, b);
    m = mutate_matrix(m, k);
    const auto& now = *values;
    bool same = (now[a] == start[a] && now[b] == start[b]) || (now[a] == start[b] && now[b] == start[a]);
    if (!same) continue;
    LabelledSeed v = u;
    for (int s = 1; s <= step; ++s) v = mutate_seed(v, s % 2 == 1 ? a : b);
    if (unordered_key(v) == start_key) return LoopLength::finite(step);
  }
  return LoopLength::infinite();
}

NInvariants n_invariants(const LabelledSeed& u) {
  const std::size_t n = u.rank();
  if (n < 2) throw InvalidInput("loop invariants need rank at least 2");
  NInvariants out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) out.n0.push_back(geodesic_loop(u, a, b));
  }
  for (std::size_t k = 0; k < n && n >= 3; ++k) {
    LabelledSeed v = mutate_seed(u, k);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (a != k && b != k) out.n1.push_back(geodesic_loop(v, a, b));
      }
    }
  }
  std::sort(out.n0.begin(), out.n0.end());
  std::sort(out.n1.begin(), out.n1.end());
  return out;
}

std::string to_string(const std::vector<LoopLength>& multiset) {
  std::string out = "{";
  for (std::size_t i = 0; i < multiset.size(); ++i) {
    if (i) out += ",";
    out += multiset[i].to_string();
  }
  return out + "}";
}

}  // namespace clusterkit
