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

#include "clusterkit/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "clusterkit/errors.hpp"

namespace clusterkit {
namespace {

void require_same_rank(const LaurentPoly& p, const LaurentPoly& q, const char* op) {
  if (p.rank() != q.rank()) {
    throw InvalidInput(std::string(op) + ": rank mismatch (" + std::to_string(p.rank()) +
                       " vs " + std::to_string(q.rank()) + ")");
  }
}

// Merges two sorted term lists, b scaled by `sign`.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial < b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial < a[i].monomial) {
      out.push_back({b[j].monomial, sign * b[j].coefficient});
      ++j;
    } else {
      BigInt c = a[i].coefficient + sign * b[j].coefficient;
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

void append_monomial(std::ostringstream& os, const Monomial& m, std::string_view prefix) {
  bool first = true;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    if (!first) os << '*';
    first = false;
    os << prefix << (i + 1);
    if (e != 1) os << '^' << e;
  }
}

std::string render(std::span<const Term> terms, std::string_view prefix) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms) {
    const bool negative = t.coefficient < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const BigInt magnitude = negative ? BigInt(-t.coefficient) : t.coefficient;
    if (t.monomial.is_one()) {
      os << magnitude;
    } else {
      if (magnitude != 1) os << magnitude << '*';
      append_monomial(os, t.monomial, prefix);
    }
  }
  return os.str();
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t rank, std::string_view prefix)
      : text_(text), rank_(rank), prefix_(prefix) {}

  LaurentPoly parse() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    terms.push_back(parse_term(sign));
    for (;;) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(parse_term(c == '-' ? -1 : 1));
    }
    return LaurentPoly::from_terms(rank_, std::move(terms));
  }

 private:
  Term parse_term(int sign) {
    BigInt coefficient = sign;
    std::vector<int> exps(rank_, 0);
    for (;;) {
      skip_space();
      if (at_end()) fail("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coefficient *= parse_unsigned_big();
      } else {
        const std::size_t index = parse_generator();
        int e = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          int s = 1;
          if (!at_end() && peek() == '-') {
            s = -1;
            ++pos_;
          }
          e = s * parse_small_int();
        }
        exps[index] += e;
      }
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {Monomial(std::move(exps)), std::move(coefficient)};
  }

  std::size_t parse_generator() {
    if (text_.substr(pos_, prefix_.size()) != prefix_) {
      fail("expected generator '" + std::string(prefix_) + "<index>'");
    }
    pos_ += prefix_.size();
    const int idx = parse_small_int();
    if (idx < 1 || static_cast<std::size_t>(idx) > rank_) {
      fail("generator index " + std::to_string(idx) + " outside 1.." + std::to_string(rank_));
    }
    return static_cast<std::size_t>(idx - 1);
  }

  BigInt parse_unsigned_big() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  int parse_small_int() {
    const std::size_t start = pos_;
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > std::numeric_limits<int>::max()) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return static_cast<int>(v);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("cannot parse Laurent polynomial '" + std::string(text_) + "' at offset " +
                       std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t rank_;
  std::string_view prefix_;
  std::size_t pos_ = 0;
};

}  // namespace

Monomial Monomial::generator(std::size_t rank, std::size_t index) {
  std::vector<int> e(rank, 0);
  e.at(index) = 1;
  return Monomial(std::move(e));
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<int> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
  std::vector<int> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::pow(int k) const {
  std::vector<int> e(exponents_);
  for (int& v : e) v *= k;
  return Monomial(std::move(e));
}

LaurentPoly LaurentPoly::constant(std::size_t rank, const BigInt& value) {
  LaurentPoly p(rank);
  if (value != 0) p.terms_.push_back({Monomial::one(rank), value});
  return p;
}

LaurentPoly LaurentPoly::generator(std::size_t rank, std::size_t index) {
  if (index >= rank) throw InvalidInput("generator index out of range");
  return monomial(Monomial::generator(rank, index));
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const BigInt& coefficient) {
  LaurentPoly p(m.rank());
  if (coefficient != 0) p.terms_.push_back({m, coefficient});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::size_t rank, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.monomial.rank() != rank) throw InvalidInput("term rank mismatch");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  LaurentPoly p(rank);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coefficient == 0; });
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(*this);
  for (Term& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_rank(*this, other, "add");
  terms_ = merge_terms(terms_, other.terms_, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_rank(*this, other, "sub");
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  require_same_rank(*this, other, "mul");
  std::vector<Term> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : other.terms_) {
      products.push_back({a.monomial * b.monomial, a.coefficient * b.coefficient});
    }
  }
  return from_terms(rank_, std::move(products));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(rank_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string LaurentPoly::to_string(std::string_view prefix) const {
  return render(terms_, prefix);
}

std::string LaurentPoly::to_fraction_string(std::string_view prefix) const {
  if (terms_.empty()) return "0";
  std::vector<int> shift(rank_, 0);
  for (const Term& t : terms_) {
    for (std::size_t i = 0; i < rank_; ++i) shift[i] = std::min(shift[i], t.monomial.exponent(i));
  }
  const Monomial denominator = Monomial(shift).pow(-1);
  if (denominator.is_one()) return to_string(prefix);
  std::vector<Term> numerator;
  numerator.reserve(terms_.size());
  for (const Term& t : terms_) numerator.push_back({t.monomial * denominator, t.coefficient});
  std::ostringstream os;
  const std::string num = render(numerator, prefix);
  if (numerator.size() > 1) {
    os << '(' << num << ')';
  } else {
    os << num;
  }
  os << '/';
  std::ostringstream den;
  append_monomial(den, denominator, prefix);
  const std::string d = den.str();
  const bool compound = d.find('*') != std::string::npos;
  if (compound) os << '(';
  os << d;
  if (compound) os << ')';
  return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text, std::size_t rank, std::string_view prefix) {
  return Parser(text, rank, prefix).parse();
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly exact_div(const LaurentPoly& dividend, const LaurentPoly& divisor) {
  require_same_rank(dividend, divisor, "exact_div");
  if (divisor.is_zero()) throw InvalidInput("exact_div: division by zero");
  const std::size_t n = dividend.rank();
  if (dividend.is_zero()) return LaurentPoly(n);

  // Newton polytopes add under multiplication, so every term of an exact
  // quotient lies in the box [min(p) - min(m), max(p) - max(m)] coordinate-
  // wise. Each step strictly lowers the candidate term in lex order, and the
  // box is finite, so the loop terminates whether or not division is exact.
  std::vector<int> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    int pmin = std::numeric_limits<int>::max(), pmax = std::numeric_limits<int>::min();
    int mmin = pmin, mmax = pmax;
    for (const Term& t : dividend.terms()) {
      pmin = std::min(pmin, t.monomial.exponent(i));
      pmax = std::max(pmax, t.monomial.exponent(i));
    }
    for (const Term& t : divisor.terms()) {
      mmin = std::min(mmin, t.monomial.exponent(i));
      mmax = std::max(mmax, t.monomial.exponent(i));
    }
    lo[i] = pmin - mmin;
    hi[i] = pmax - mmax;
  }
  auto inexact = [&]() -> InexactDivision {
    return InexactDivision("exact_div: '" + dividend.to_string() + "' is not divisible by '" +
                           divisor.to_string() + "'");
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (lo[i] > hi[i]) throw inexact();
  }

  const Term& lead = divisor.terms().back();
  std::vector<Term> remainder(dividend.terms().begin(), dividend.terms().end());
  std::vector<Term> quotient;
  while (!remainder.empty()) {
    const Term& top = remainder.back();
    Monomial qm = top.monomial / lead.monomial;
    for (std::size_t i = 0; i < n; ++i) {
      if (qm.exponent(i) < lo[i] || qm.exponent(i) > hi[i]) throw inexact();
    }
    if (top.coefficient % lead.coefficient != 0) throw inexact();
    BigInt qc = top.coefficient / lead.coefficient;
    std::vector<Term> scaled;
    scaled.reserve(divisor.size());
    for (const Term& t : divisor.terms()) scaled.push_back({t.monomial * qm, t.coefficient * qc});
    remainder = merge_terms(remainder, scaled, -1);
    quotient.push_back({std::move(qm), std::move(qc)});
  }
  return LaurentPoly::from_terms(n, std::move(quotient));
}

Rational evaluate(const LaurentPoly& p, std::span<const Rational> point) {
  if (point.size() != p.rank()) throw InvalidInput("evaluate: point has wrong dimension");
  for (const Rational& c : point) {
    if (c == 0) throw InvalidInput("evaluate: coordinates must be nonzero");
  }
  Rational total = 0;
  for (const Term& t : p.terms()) {
    Rational value = Rational(t.coefficient);
    for (std::size_t i = 0; i < p.rank(); ++i) {
      const int e = t.monomial.exponent(i);
      if (e == 0) continue;
      const Rational base = e > 0 ? point[i] : Rational(1) / point[i];
      for (int k = 0; k < std::abs(e); ++k) value *= base;
    }
    total += value;
  }
  return total;
}

bool encoding_less(const LaurentPoly& a, const LaurentPoly& b) {
  return a.to_string() < b.to_string();
}

}  // namespace clusterkit
