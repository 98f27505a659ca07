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


#include "clusterkit/green.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "clusterkit/errors.hpp"

namespace clusterkit {
namespace {

FramedQuiver with_frame(const ExchangeMatrix& q, std::int64_t sign) {
  if (!q.is_skew_symmetric()) throw InvalidInput("framed quivers need a skew-symmetric matrix");
  const std::size_t n = q.rank();
  std::vector<std::int64_t> e(4 * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e[i * 2 * n + j] = q(i, j);
    e[i * 2 * n + n + i] = sign;
    e[(n + i) * 2 * n + i] = -sign;
  }
  return FramedQuiver{ExchangeMatrix(2 * n, std::move(e)), n};
}

std::vector<Permutation> alignments(const FramedQuiver& end, const FramedQuiver& target) {
  const std::size_t n = end.mutable_count;
  std::vector<Permutation> out;
  std::vector<std::size_t> sigma(2 * n);
  for (std::size_t i = 0; i < n; ++i) sigma[n + i] = n + i;
  std::vector<bool> used(n, false);
  // Row i of the frame block must land on row sigma(i) of the target's.
  auto fits = [&](std::size_t i, std::size_t j) {
    for (std::size_t f = n; f < 2 * n; ++f) {
      if (end.matrix(i, f) != target.matrix(j, f)) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      Permutation full(sigma);
      if (permute_matrix(end.matrix, full) == target.matrix) {
        out.emplace_back(std::vector<std::size_t>(sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(n)));
      }
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || !fits(i, j)) continue;
      used[j] = true;
      sigma[i] = j;
      self(self, i + 1);
      used[j] = false;
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

struct Memo {
  std::vector<std::vector<std::size_t>> suffixes;
  bool hit_length = false;
  bool hit_cap = false;
};

class GreenSearch {
 public:
  GreenSearch(std::size_t cap) : cap_(cap) {}

  std::shared_ptr<const Memo> solve(const FramedQuiver& r, std::size_t remaining) {
    std::vector<std::int64_t> key(r.matrix.entries().begin(), r.matrix.entries().end());
    key.push_back(static_cast<std::int64_t>(remaining));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    auto result = std::make_shared<Memo>();
    bool any_green = false;
    for (std::size_t k = 0; k < r.mutable_count; ++k) {
      if (vertex_colour(r, k) != VertexColour::kGreen) continue;
      any_green = true;
      if (remaining == 0) {
        result->hit_length = true;
        break;
      }
      auto child = solve(mutate(r, k), remaining - 1);
      result->hit_length |= child->hit_length;
      result->hit_cap |= child->hit_cap;
      for (const auto& tail : child->suffixes) {
        if (result->suffixes.size() == cap_) {
          result->hit_cap = true;
          break;
        }
        std::vector<std::size_t> seq{k};
        seq.insert(seq.end(), tail.begin(), tail.end());
        result->suffixes.push_back(std::move(seq));
      }
    }
    if (!any_green) result->suffixes.emplace_back();
    memo_.emplace(std::move(key), result);
    return result;
  }

  std::size_t states() const { return memo_.size(); }

 private:
  std::size_t cap_;
  std::map<std::vector<std::int64_t>, std::shared_ptr<const Memo>> memo_;
};

}  // namespace

FramedQuiver frame(const ExchangeMatrix& q) { return with_frame(q, 1); }
FramedQuiver coframe(const ExchangeMatrix& q) { return with_frame(q, -1); }

FramedQuiver mutate(const FramedQuiver& r, std::size_t k) {
  if (k >= r.mutable_count) throw InvalidInput("cannot mutate at a frozen vertex");
  return FramedQuiver{mutate_matrix(r.matrix, k), r.mutable_count};
}

VertexColour vertex_colour(const FramedQuiver& r, std::size_t i) {
  const std::size_t n = r.mutable_count;
  if (i >= n) throw InvalidInput("colours are defined on mutable vertices only");
  bool into = false, out_of = false;
  for (std::size_t f = n; f < 2 * n; ++f) {
    if (r.matrix(i, f) < 0) into = true;
    if (r.matrix(i, f) > 0) out_of = true;
  }
  if (into == out_of) {
    throw InvariantViolation("vertex " + std::to_string(i + 1) + " is " + (into ? "both green and red" : "neither green nor red") +
                             " in " + r.matrix.to_string());
  }
  return into ? VertexColour::kRed : VertexColour::kGreen;
}

std::size_t default_green_length(const ExchangeMatrix& q) {
  std::size_t arrows = 0;
  for (std::size_t i = 0; i < q.rank(); ++i) {
    for (std::size_t j = 0; j < q.rank(); ++j) {
      if (q(i, j) > 0) arrows += static_cast<std::size_t>(q(i, j));
    }
  }
  return 2 * (arrows + q.rank());
}

GreenSearchResult find_maximal_green_sequences(const ExchangeMatrix& q, std::size_t max_len, std::size_t cap) {
  if (max_len == 0 || cap == 0) throw InvalidInput("length and cap bounds must be positive");
  const FramedQuiver start = frame(q);
  const FramedQuiver target = coframe(q);
  GreenSearch search(cap);
  auto memo = search.solve(start, max_len);

  GreenSearchResult result;
  result.truncated_by_length = memo->hit_length;
  result.truncated_by_cap = memo->hit_cap;
  result.states = search.states();
  for (const auto& seq : memo->suffixes) {
    FramedQuiver r = start;
    for (std::size_t k : seq) r = mutate(r, k);
    GreenSequence gs;
    gs.mutations = seq;
    gs.alignments = alignments(r, target);
    if (gs.alignments.empty()) {
      throw InvariantViolation("maximal green sequence does not end at a copy of the coframed quiver");
    }
    gs.permutation = gs.alignments.front();
    result.sequences.push_back(std::move(gs));
  }
  return result;
}

ClusterAutomorphism induced_automorphism(const ExchangeMatrix& q, const GreenSequence& gs) {
  LabelledSeed u = initial_seed(q);
  LabelledSeed v = apply_word(u, MutationWord{gs.mutations, gs.permutation});
  if (v.matrix != q) {
    throw InvariantViolation("green sequence followed by its alignment gives " + v.matrix.to_string() +
                             " instead of " + q.to_string());
  }
  ClusterAutomorphism out;
  out.direction = Direction::kDirect;
  out.realization = v.cluster;
  out.image_matrix = v.matrix;
  return out;
}

ClusterAutomorphism induced_automorphism(const ExchangeMatrix& q, const GreenSequence& gs, const ClassGraphs& graphs) {
  ClusterAutomorphism out = induced_automorphism(q, gs);
  LabelledSeed image{out.realization, out.image_matrix};
  out.vertex_map = automorphism_from_image(image, graphs);
  out.labelled_map = pullback(out.vertex_map, graphs, 0);
  return out;
}

}  // namespace clusterkit
