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

// Sparse multivariate Laurent polynomials with arbitrary-precision integer
// coefficients. Cluster variables live here: by the Laurent phenomenon every
// cluster variable is a Laurent polynomial in the initial cluster, so one
// canonical form (sorted terms, no zero coefficients) gives one equality
// test and one byte encoding.

#ifndef CLUSTERKIT_LAURENT_HPP_
#define CLUSTERKIT_LAURENT_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace clusterkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponent vector of a Laurent monomial x1^e1 * ... * xn^en.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {}

  static Monomial one(std::size_t rank) { return Monomial(std::vector<int>(rank, 0)); }
  static Monomial generator(std::size_t rank, std::size_t index);

  std::size_t rank() const { return exponents_.size(); }
  int exponent(std::size_t i) const { return exponents_[i]; }
  std::span<const int> exponents() const { return exponents_; }
  bool is_one() const;

  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;
  Monomial pow(int k) const;

  // Lexicographic on exponent vectors.
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> exponents_;
};

struct Term {
  Monomial monomial;
  BigInt coefficient;

  bool operator==(const Term&) const = default;
};

class LaurentPoly {
 public:
  // The zero polynomial of the given rank.
  explicit LaurentPoly(std::size_t rank = 0) : rank_(rank) {}

  static LaurentPoly constant(std::size_t rank, const BigInt& value);
  static LaurentPoly generator(std::size_t rank, std::size_t index);
  static LaurentPoly monomial(const Monomial& m, const BigInt& coefficient = 1);
  // Sorts, merges equal monomials and drops zero coefficients.
  static LaurentPoly from_terms(std::size_t rank, std::vector<Term> terms);

  std::size_t rank() const { return rank_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly pow(unsigned k) const;

  bool operator==(const LaurentPoly& other) const = default;

  // Canonical text: terms in ascending lexicographic exponent order, e.g.
  // "x1^-1 + x1^-1*x2". Distinct polynomials give distinct strings, so this
  // doubles as the canonical byte encoding. `prefix` names the generators.
  std::string to_string(std::string_view prefix = "x") const;
  // Numerator over a monomial denominator, e.g. "(1 + x2)/x1". Display only.
  std::string to_fraction_string(std::string_view prefix = "x") const;

  // Inverse of to_string. Accepts integer coefficients, `*` products, `^`
  // with signed exponents and `+`/`-` between terms; whitespace is ignored.
  static LaurentPoly parse(std::string_view text, std::size_t rank,
                           std::string_view prefix = "x");

 private:
  std::size_t rank_ = 0;
  std::vector<Term> terms_;  // strictly ascending monomials, nonzero coefficients
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

// Returns q with q * divisor == dividend, throwing InexactDivision when no
// such Laurent polynomial with integer coefficients exists.
LaurentPoly exact_div(const LaurentPoly& dividend, const LaurentPoly& divisor);

// Exact value at a point with all coordinates nonzero.
Rational evaluate(const LaurentPoly& p, std::span<const Rational> point);

// Ordering by canonical encoding; used to sort clusters into seeds.
bool encoding_less(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace clusterkit

#endif  // CLUSTERKIT_LAURENT_HPP_
