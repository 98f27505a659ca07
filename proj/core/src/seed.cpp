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


#include "clusterkit/seed.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "clusterkit/errors.hpp"
#include "clusterkit/parallel.hpp"

namespace clusterkit {
namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "; ";
    out += parts[i];
  }
  return out;
}

std::vector<std::string> encodings(std::span<const LaurentPoly> cluster) {
  std::vector<std::string> out;
  out.reserve(cluster.size());
  for (const auto& p : cluster) out.push_back(p.to_string());
  return out;
}

std::string sorted_key(std::span<const LaurentPoly> cluster) {
  auto parts = encodings(cluster);
  std::sort(parts.begin(), parts.end());
  return join(parts);
}

void check_index(std::size_t k, std::size_t n) {
  if (k >= n) {
    throw InvalidInput("mutation index " + std::to_string(k + 1) + " outside 1.." + std::to_string(n));
  }
}

// Seeds expanded per parallel batch. Children are merged in vertex order, so
// the batch size affects neither numbering nor results, only how far past
// the cap a failing enumeration computes.
constexpr std::size_t kChunk = 256;

void check_cap(std::size_t size, std::size_t cap) {
  if (size > cap) throw CapExceeded("mutation class exceeds the cap of " + std::to_string(cap) + " seeds");
}

bool within_radius(std::size_t depth, const std::optional<std::size_t>& radius) {
  return !radius || depth < *radius;
}

}  // namespace

LabelledSeed initial_seed(const ExchangeMatrix& b) {
  LabelledSeed u;
  u.matrix = b;
  for (std::size_t i = 0; i < b.rank(); ++i) u.cluster.push_back(LaurentPoly::generator(b.rank(), i));
  return u;
}

LabelledSeed make_seed(std::vector<LaurentPoly> cluster, ExchangeMatrix b) {
  if (cluster.size() != b.rank()) {
    throw InvalidInput("cluster has " + std::to_string(cluster.size()) + " variables but the matrix has rank " +
                       std::to_string(b.rank()));
  }
  for (const auto& p : cluster) {
    if (p.is_zero()) throw InvalidInput("cluster variables must be nonzero");
    if (p.rank() != cluster.front().rank()) throw InvalidInput("cluster variables live in different rings");
  }
  return LabelledSeed{std::move(cluster), std::move(b)};
}

namespace {

// Lattice points in the bounding box of the Newton polytope of the product
// of cluster[j]^|b_jk| over j with sign(b_jk) == sign. Bounds its term count.
double exchange_box(const LabelledSeed& u, std::size_t k, int sign) {
  const std::size_t ambient = u.cluster[k].rank();
  std::vector<double> width(ambient, 0.0);
  for (std::size_t j = 0; j < u.rank(); ++j) {
    const std::int64_t b = u.matrix(j, k) * sign;
    if (b <= 0) continue;
    const auto terms = u.cluster[j].terms();
    if (terms.empty()) continue;
    for (std::size_t i = 0; i < ambient; ++i) {
      int lo = terms.front().monomial.exponent(i), hi = lo;
      for (const Term& t : terms) {
        lo = std::min(lo, t.monomial.exponent(i));
        hi = std::max(hi, t.monomial.exponent(i));
      }
      width[i] += static_cast<double>(b) * (hi - lo);
    }
  }
  double points = 1.0;
  for (double w : width) points *= w + 1.0;
  return points;
}

}  // namespace

LabelledSeed mutate_seed(const LabelledSeed& u, std::size_t k) {
  const std::size_t n = u.rank();
  check_index(k, n);
  if (exchange_box(u, k, 1) > kMaxExchangeBox || exchange_box(u, k, -1) > kMaxExchangeBox) {
    throw CapExceeded("exchange polynomial at position " + std::to_string(k + 1) +
                      " is too large to expand (mutation-infinite input?)");
  }
  const std::size_t ambient = u.cluster[k].rank();
  LaurentPoly pos = LaurentPoly::constant(ambient, 1);
  LaurentPoly neg = LaurentPoly::constant(ambient, 1);
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t b = u.matrix(j, k);
    if (b > 0) pos *= u.cluster[j].pow(static_cast<unsigned>(b));
    if (b < 0) neg *= u.cluster[j].pow(static_cast<unsigned>(-b));
  }
  LabelledSeed out;
  out.cluster = u.cluster;
  out.cluster[k] = exact_div(pos + neg, u.cluster[k]);
  out.matrix = mutate_matrix(u.matrix, k);
  return out;
}

LabelledSeed apply_permutation(const LabelledSeed& u, const Permutation& sigma) {
  if (sigma.size() != u.rank()) throw InvalidInput("permutation size does not match the seed rank");
  LabelledSeed out;
  out.cluster.resize(u.rank());
  for (std::size_t i = 0; i < u.rank(); ++i) out.cluster[sigma(i)] = u.cluster[i];
  out.matrix = permute_matrix(u.matrix, sigma);
  return out;
}

std::string cluster_key(std::span<const LaurentPoly> cluster) { return join(encodings(cluster)); }

SortedSeed sort_seed(const LabelledSeed& u) {
  const std::size_t n = u.rank();
  auto parts = encodings(u.cluster);
  std::vector<std::size_t> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), std::size_t{0});
  std::sort(by_rank.begin(), by_rank.end(), [&](std::size_t a, std::size_t b) { return parts[a] < parts[b]; });
  std::vector<std::size_t> order(n);
  for (std::size_t r = 0; r < n; ++r) order[by_rank[r]] = r;
  Permutation sigma(std::move(order));
  LabelledSeed s = apply_permutation(u, sigma);
  return SortedSeed{Seed{std::move(s.cluster), std::move(s.matrix)}, std::move(sigma)};
}

LabelledSeed as_labelled(const Seed& s) { return LabelledSeed{s.cluster, s.matrix}; }

MutationWord normalize(const Word& w, std::size_t n) {
  MutationWord out{{}, Permutation::identity(n)};
  for (const auto& letter : w) {
    if (const auto* m = std::get_if<Mutation>(&letter)) {
      check_index(m->index, n);
      out.mutations.push_back(out.permutation.inverse()(m->index));
    } else {
      const auto& sigma = std::get<Permutation>(letter);
      if (sigma.size() != n) throw InvalidInput("permutation size does not match the word rank");
      out.permutation = compose(sigma, out.permutation);
    }
  }
  return out;
}

LabelledSeed apply_word(const LabelledSeed& u, const Word& w) {
  LabelledSeed v = u;
  for (const auto& letter : w) {
    if (const auto* m = std::get_if<Mutation>(&letter)) {
      v = mutate_seed(v, m->index);
    } else {
      v = apply_permutation(v, std::get<Permutation>(letter));
    }
  }
  return v;
}

LabelledSeed apply_word(const LabelledSeed& u, const MutationWord& w) {
  LabelledSeed v = u;
  for (std::size_t k : w.mutations) v = mutate_seed(v, k);
  if (w.permutation.size() == 0) return v;  // default-constructed: identity
  return apply_permutation(v, w.permutation);
}

Word parse_word(std::string_view text, std::size_t n) {
  Word out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw InvalidInput("cannot parse word '" + std::string(text) + "': " + why);
  };
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else if (c == 'm' || c == 'M') {
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("expected an index after 'm'");
      std::size_t k = std::stoul(std::string(text.substr(start, pos - start)));
      if (k < 1 || k > n) fail("mutation index " + std::to_string(k) + " outside 1.." + std::to_string(n));
      out.emplace_back(Mutation{k - 1});
    } else if (c == '(') {
      std::size_t start = pos;
      while (pos < text.size() && text[pos] == '(') {
        std::size_t close = text.find(')', pos);
        if (close == std::string_view::npos) fail("unterminated cycle");
        pos = close + 1;
      }
      out.emplace_back(Permutation::parse_cycles(text.substr(start, pos - start), n));
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& letter : w) {
    if (!out.empty()) out += ' ';
    if (const auto* m = std::get_if<Mutation>(&letter)) {
      out += "m" + std::to_string(m->index + 1);
    } else {
      out += std::get<Permutation>(letter).to_cycle_string();
    }
  }
  return out.empty() ? "()" : out;
}

std::string to_string(const MutationWord& w) {
  std::string out;
  for (std::size_t k : w.mutations) {
    if (!out.empty()) out += ' ';
    out += "m" + std::to_string(k + 1);
  }
  if (!w.permutation.is_identity()) {
    if (!out.empty()) out += ' ';
    out += w.permutation.to_cycle_string();
  }
  return out.empty() ? "()" : out;
}

std::optional<std::size_t> LabelledClass::find(const LabelledSeed& u) const {
  return find_key(cluster_key(u.cluster));
}

std::optional<std::size_t> LabelledClass::find_key(const std::string& key) const {
  auto it = index.find(key);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SeedClass::find_key(const std::string& key) const {
  auto it = index.find(key);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

LabelledClass enumerate_labelled_class(const LabelledSeed& u, const EnumerationOptions& options) {
  const std::size_t n = u.rank();
  LabelledClass c;
  std::set<std::string> permuted;  // sorted keys whose labellings were generated
  const auto perms = all_permutations(n);

  auto insert = [&](LabelledSeed s, std::string key, std::size_t depth) -> std::size_t {
    auto [it, fresh] = c.index.try_emplace(key, c.seeds.size());
    if (!fresh) {
      if (options.strict_seeds && c.seeds[it->second].matrix != s.matrix) {
        throw InvariantViolation("cluster [" + key + "] occurs with matrices " +
                                 c.seeds[it->second].matrix.to_string() + " and " + s.matrix.to_string());
      }
      return it->second;
    }
    c.seeds.push_back(std::move(s));
    c.keys.push_back(std::move(key));
    c.mutation.emplace_back(n, kNoVertex);
    c.depth.push_back(depth);
    check_cap(c.seeds.size(), options.cap);
    return it->second;
  };

  insert(u, cluster_key(u.cluster), 0);
  std::size_t head = 0;
  while (head < c.seeds.size()) {
    const std::size_t end = std::min(c.seeds.size(), head + kChunk);
    std::vector<std::vector<LabelledSeed>> kids(end - head);
    parallel_for(end - head, [&](std::size_t i) {
      std::size_t v = head + i;
      if (!within_radius(c.depth[v], options.radius)) return;
      kids[i].reserve(n);
      for (std::size_t k = 0; k < n; ++k) kids[i].push_back(mutate_seed(c.seeds[v], k));
    });
    for (std::size_t v = head; v < end; ++v) {
      auto& children = kids[v - head];
      if (children.empty() && n > 0) c.truncated = true;
      for (std::size_t k = 0; k < children.size(); ++k) {
        std::string key = cluster_key(children[k].cluster);
        c.mutation[v][k] = insert(std::move(children[k]), std::move(key), c.depth[v] + 1);
      }
      if (!permuted.insert(sorted_key(c.seeds[v].cluster)).second) continue;
      for (const auto& sigma : perms) {
        if (sigma.is_identity()) continue;
        LabelledSeed s = apply_permutation(c.seeds[v], sigma);
        std::string key = cluster_key(s.cluster);
        insert(std::move(s), std::move(key), c.depth[v]);
      }
    }
    head = end;
  }
  return c;
}

SeedClass enumerate_class(const LabelledSeed& u, const EnumerationOptions& options) {
  const std::size_t n = u.rank();
  SeedClass c;

  auto insert = [&](Seed s, std::size_t depth) -> std::size_t {
    std::string key = cluster_key(s.cluster);
    auto [it, fresh] = c.index.try_emplace(key, c.seeds.size());
    if (!fresh) {
      if (options.strict_seeds && c.seeds[it->second].matrix != s.matrix) {
        throw InvariantViolation("seed [" + key + "] occurs with matrices " +
                                 c.seeds[it->second].matrix.to_string() + " and " + s.matrix.to_string());
      }
      return it->second;
    }
    c.seeds.push_back(std::move(s));
    c.keys.push_back(std::move(key));
    c.next.emplace_back(n);
    c.depth.push_back(depth);
    check_cap(c.seeds.size(), options.cap);
    return it->second;
  };

  insert(sort_seed(u).seed, 0);
  std::size_t head = 0;
  while (head < c.seeds.size()) {
    const std::size_t end = std::min(c.seeds.size(), head + kChunk);
    std::vector<std::vector<SortedSeed>> kids(end - head);
    parallel_for(end - head, [&](std::size_t i) {
      std::size_t v = head + i;
      if (!within_radius(c.depth[v], options.radius)) return;
      kids[i].reserve(n);
      LabelledSeed base = as_labelled(c.seeds[v]);
      for (std::size_t p = 0; p < n; ++p) kids[i].push_back(sort_seed(mutate_seed(base, p)));
    });
    for (std::size_t v = head; v < end; ++v) {
      auto& children = kids[v - head];
      if (children.empty() && n > 0) c.truncated = true;
      for (std::size_t p = 0; p < children.size(); ++p) {
        std::size_t q = children[p].order(p);
        std::size_t w = insert(std::move(children[p].seed), c.depth[v] + 1);
        c.next[v][p] = SeedClass::Step{w, q};
      }
    }
    head = end;
  }
  return c;
}

}  // namespace clusterkit
