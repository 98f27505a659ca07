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

#include "clusterkit/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_set>

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "clusterkit/errors.hpp"

namespace clusterkit {
namespace {

using BigRational = boost::multiprecision::cpp_rational;
using BigInteger = boost::multiprecision::cpp_int;

std::string vertex_name(std::size_t i) { return "v" + std::to_string(i + 1); }

// Component labels of the underlying undirected graph.
std::vector<std::size_t> components(const ExchangeMatrix& b, std::size_t* count) {
  const std::size_t n = b.rank();
  std::vector<std::size_t> comp(n, n);
  std::size_t c = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    std::deque<std::size_t> queue{s};
    comp[s] = c;
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (b(i, j) != 0 && comp[j] == n) {
          comp[j] = c;
          queue.push_back(j);
        }
      }
    }
    ++c;
  }
  if (count != nullptr) *count = c;
  return comp;
}

// Propagates d_j / d_i = -b_ji / b_ij over each component. Returns the
// gcd-normalised symmetrizer per component, or a diagnostic on failure.
std::optional<std::vector<std::int64_t>> propagate_symmetrizer(std::size_t n,
                                                               std::span<const std::int64_t> e,
                                                               std::string* why) {
  auto at = [&](std::size_t i, std::size_t j) { return e[i * n + j]; };
  std::vector<std::optional<BigRational>> ratio(n);
  std::vector<std::int64_t> d(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (ratio[root]) continue;
    std::vector<std::size_t> members{root};
    ratio[root] = BigRational(1);
    for (std::size_t head = 0; head < members.size(); ++head) {
      const std::size_t i = members[head];
      for (std::size_t j = 0; j < n; ++j) {
        if (at(i, j) == 0 || ratio[j]) continue;
        std::int64_t num = -at(j, i), den = at(i, j);
        if (den < 0) num = -num, den = -den;
        ratio[j] = *ratio[i] * BigRational(num, den);
        members.push_back(j);
      }
    }
    for (std::size_t i : members) {
      for (std::size_t j : members) {
        if (at(i, j) == 0) continue;
        if (BigRational(at(i, j)) * *ratio[j] != BigRational(-at(j, i)) * *ratio[i]) {
          if (why != nullptr) {
            *why = "not skew-symmetrizable: ratios around a cycle through " + vertex_name(i) +
                   " and " + vertex_name(j) + " are inconsistent (b_ij*d_j != -b_ji*d_i)";
          }
          return std::nullopt;
        }
      }
    }
    BigInteger lcm = 1;
    for (std::size_t i : members) {
      const BigInteger den = boost::multiprecision::denominator(*ratio[i]);
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    BigInteger g = 0;
    std::vector<BigInteger> scaled;
    for (std::size_t i : members) {
      BigRational s = *ratio[i] * BigRational(lcm);
      scaled.push_back(boost::multiprecision::numerator(s));
      g = boost::multiprecision::gcd(g, scaled.back());
    }
    for (std::size_t k = 0; k < members.size(); ++k) {
      const BigInteger v = scaled[k] / g;
      if (v <= 0 || v > BigInteger(std::numeric_limits<std::int64_t>::max())) {
        if (why != nullptr) *why = "symmetrizer entry out of range";
        return std::nullopt;
      }
      d[members[k]] = static_cast<std::int64_t>(v);
    }
  }
  return d;
}

}  // namespace

ExchangeMatrix::ExchangeMatrix(std::size_t n, std::vector<std::int64_t> row_major)
    : n_(n), entries_(std::move(row_major)) {
  if (n_ == 0) throw InvalidInput("exchange matrix must have positive rank");
  if (entries_.size() != n_ * n_) throw InvalidInput("exchange matrix must be square");
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 0) {
      throw InvalidInput("exchange matrix diagonal must be zero (entry " + vertex_name(i) + ")");
    }
    for (std::size_t j = i + 1; j < n_; ++j) {
      const std::int64_t a = (*this)(i, j), b = (*this)(j, i);
      const bool ok = (a > 0 && b < 0) || (a < 0 && b > 0) || (a == 0 && b == 0);
      if (!ok) {
        throw InvalidInput("sign condition fails for pair (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")");
      }
    }
  }
  std::string why;
  if (!propagate_symmetrizer(n_, entries_, &why)) throw InvalidInput(why);
}

ExchangeMatrix ExchangeMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::int64_t> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw InvalidInput("exchange matrix must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return ExchangeMatrix(n, std::move(flat));
}

ExchangeMatrix ExchangeMatrix::zero(std::size_t n) {
  return ExchangeMatrix(n, std::vector<std::int64_t>(n * n, 0));
}

std::vector<std::vector<std::int64_t>> ExchangeMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  }
  return out;
}

bool ExchangeMatrix::is_skew_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if ((*this)(i, j) != -(*this)(j, i)) return false;
    }
  }
  return true;
}

bool ExchangeMatrix::is_connected() const {
  std::size_t count = 0;
  components(*this, &count);
  return count == 1;
}

std::int64_t ExchangeMatrix::max_weight() const {
  std::int64_t w = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) w = std::max(w, weight(i, j));
  }
  return w;
}

ExchangeMatrix ExchangeMatrix::operator-() const {
  ExchangeMatrix m(*this);
  for (std::int64_t& v : m.entries_) v = -v;
  return m;
}

ExchangeMatrix ExchangeMatrix::transpose() const {
  ExchangeMatrix m(*this);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m.entries_[i * n_ + j] = (*this)(j, i);
  }
  return m;
}

std::string ExchangeMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    if (i > 0) os << ',';
    os << '[';
    for (std::size_t j = 0; j < n_; ++j) {
      if (j > 0) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Symmetrizer compute_symmetrizer(const ExchangeMatrix& b) {
  if (!b.is_connected()) {
    throw InvalidInput("diagram is disconnected; symmetrizers are only defined for connected input");
  }
  std::string why;
  auto d = propagate_symmetrizer(b.rank(), b.entries(), &why);
  if (!d) throw InvalidInput(why);
  return Symmetrizer{std::move(*d)};
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
  const std::size_t n = b.rank();
  if (k >= n) throw InvalidInput("mutation index " + std::to_string(k + 1) + " out of range");
  std::vector<std::int64_t> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t bij = b(i, j);
      if (i == k || j == k) {
        out[i * n + j] = -bij;
      } else {
        const std::int64_t bik = b(i, k), bkj = b(k, j);
        // |b_ik| b_kj + b_ik |b_kj| is 0 or 2 b_ik b_kj, so halving is exact.
        out[i * n + j] = bij + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
    }
  }
  return ExchangeMatrix(ExchangeMatrix::Trusted{}, n, std::move(out));
}

std::vector<std::int64_t> permute_entries(std::size_t n, std::span<const std::int64_t> row_major,
                                          const Permutation& sigma) {
  if (sigma.size() != n || row_major.size() != n * n) {
    throw InvalidInput("permutation size does not match matrix rank");
  }
  const Permutation inv = sigma.inverse();
  std::vector<std::int64_t> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = row_major[inv(i) * n + inv(j)];
  }
  return out;
}

ExchangeMatrix permute_matrix(const ExchangeMatrix& b, const Permutation& sigma) {
  return ExchangeMatrix(ExchangeMatrix::Trusted{}, b.rank(), permute_entries(b.rank(), b.entries(), sigma));
}

Symmetrizer permute_symmetrizer(const Symmetrizer& d, const Permutation& sigma) {
  if (sigma.size() != d.d.size()) throw InvalidInput("permutation size does not match symmetrizer");
  const Permutation inv = sigma.inverse();
  Symmetrizer out{std::vector<std::int64_t>(d.d.size())};
  for (std::size_t i = 0; i < d.d.size(); ++i) out.d[i] = d.d[inv(i)];
  return out;
}

ExchangeMatrix opposite(const ExchangeMatrix& b) { return -b; }

Diagram matrix_to_diagram(const ExchangeMatrix& b) {
  Diagram d;
  d.vertex_count = b.rank();
  for (std::size_t i = 0; i < b.rank(); ++i) {
    for (std::size_t j = 0; j < b.rank(); ++j) {
      if (b(i, j) > 0) d.arcs.push_back({i, j, b.weight(i, j)});
    }
  }
  return d;
}

namespace {

// Branch and bound over vertex orders p. The entry sequence is laid out so
// that choosing p[k] fixes the block (b[p0][pk], b[pk][p0], ..., b[pk-1][pk],
// b[pk][pk-1]); pruning happens as soon as a block exceeds the incumbent.
class CanonicalSearch {
 public:
  CanonicalSearch(const ExchangeMatrix& b, std::vector<std::size_t> class_of_position,
                  std::vector<std::size_t> class_of_vertex)
      : b_(b),
        n_(b.rank()),
        position_class_(std::move(class_of_position)),
        vertex_class_(std::move(class_of_vertex)),
        used_(n_, false) {}

  std::vector<std::int64_t> run() {
    seq_.reserve(n_ * (n_ - 1));
    recurse(0);
    return best_;
  }

 private:
  // Compares the current prefix with the incumbent's prefix of equal length.
  // The incumbent changes while siblings are explored, so no cached flag.
  int compare_prefix() const {
    for (std::size_t t = 0; t < seq_.size(); ++t) {
      if (seq_[t] != best_[t]) return seq_[t] < best_[t] ? -1 : 1;
    }
    return 0;
  }

  void recurse(std::size_t k) {
    if (k == n_) {
      if (best_.empty() || compare_prefix() < 0) best_ = seq_;
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      if (!position_class_.empty() && vertex_class_[v] != position_class_[k]) continue;
      const std::size_t mark = seq_.size();
      for (std::size_t i = 0; i < k; ++i) {
        seq_.push_back(b_(order_[i], v));
        seq_.push_back(b_(v, order_[i]));
      }
      if (best_.empty() || compare_prefix() <= 0) {
        used_[v] = true;
        order_.push_back(v);
        recurse(k + 1);
        order_.pop_back();
        used_[v] = false;
      }
      seq_.resize(mark);
    }
  }

  const ExchangeMatrix& b_;
  std::size_t n_;
  std::vector<std::size_t> position_class_;
  std::vector<std::size_t> vertex_class_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
  std::vector<std::int64_t> seq_;
  std::vector<std::int64_t> best_;
};

constexpr std::size_t kExhaustiveCanonicalRank = 8;

}  // namespace

std::vector<std::int64_t> canonical_form(const ExchangeMatrix& b) {
  const std::size_t n = b.rank();
  std::vector<std::int64_t> out;
  out.push_back(static_cast<std::int64_t>(n));
  if (n == 1) return out;
  std::vector<std::size_t> position_class, vertex_class;
  if (n > kExhaustiveCanonicalRank) {
    // Restrict to orders listing vertices by a permutation-invariant
    // signature; still canonical, since the signature classes of two
    // equivalent matrices correspond.
    std::vector<std::vector<std::int64_t>> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::pair<std::int64_t, std::int64_t>> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) row.emplace_back(b(i, j), b(j, i));
      }
      std::sort(row.begin(), row.end());
      for (auto [x, y] : row) {
        sig[i].push_back(x);
        sig[i].push_back(y);
      }
    }
    std::vector<std::vector<std::int64_t>> distinct(sig);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    vertex_class.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      vertex_class[i] = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[i]) - distinct.begin());
    }
    position_class = vertex_class;
    std::sort(position_class.begin(), position_class.end());
    // Fold the class layout into the form so different layouts never tie.
    for (std::size_t c : position_class) out.push_back(static_cast<std::int64_t>(c));
    for (const auto& s : distinct) out.insert(out.end(), s.begin(), s.end());
  }
  CanonicalSearch search(b, std::move(position_class), std::move(vertex_class));
  const std::vector<std::int64_t> best = search.run();
  out.insert(out.end(), best.begin(), best.end());
  return out;
}

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    return boost::hash_range(v.begin(), v.end());
  }
};

}  // namespace

FinitenessReport is_mutation_finite(const ExchangeMatrix& b, std::size_t state_cap) {
  if (!b.is_connected()) {
    throw InvalidInput("diagram is disconnected; mutation-finiteness is decided for connected input");
  }
  FinitenessReport report;
  report.max_weight_seen = b.max_weight();
  report.classes_explored = 1;
  if (b.rank() <= 2) {
    report.verdict = MutationFiniteness::kFinite;
    return report;
  }
  auto too_heavy = [](const ExchangeMatrix& m) { return m.max_weight() > 4; };
  if (too_heavy(b)) {
    report.verdict = MutationFiniteness::kInfinite;
    return report;
  }
  std::unordered_set<std::vector<std::int64_t>, VectorHash> seen;
  std::deque<ExchangeMatrix> queue;
  seen.insert(canonical_form(b));
  queue.push_back(b);
  while (!queue.empty()) {
    const ExchangeMatrix current = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k < current.rank(); ++k) {
      ExchangeMatrix next = mutate_matrix(current, k);
      report.max_weight_seen = std::max(report.max_weight_seen, next.max_weight());
      if (too_heavy(next)) {
        report.verdict = MutationFiniteness::kInfinite;
        report.classes_explored = seen.size();
        return report;
      }
      if (seen.insert(canonical_form(next)).second) {
        if (seen.size() > state_cap) {
          report.verdict = MutationFiniteness::kInconclusive;
          report.classes_explored = seen.size();
          return report;
        }
        queue.push_back(std::move(next));
      }
    }
  }
  report.verdict = MutationFiniteness::kFinite;
  report.classes_explored = seen.size();
  return report;
}

}  // namespace clusterkit
