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


#ifndef CLUSTERKIT_TESTS_FIXTURES_HPP_
#define CLUSTERKIT_TESTS_FIXTURES_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "clusterkit/seed.hpp"

namespace clusterkit {

inline void PrintTo(const ExchangeMatrix& b, std::ostream* os) { *os << b.to_string(); }
inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Permutation& p, std::ostream* os) { *os << p.to_cycle_string(); }

}  // namespace clusterkit

namespace fixtures {

using clusterkit::ExchangeMatrix;
using clusterkit::LaurentPoly;

inline ExchangeMatrix a2() { return ExchangeMatrix::from_rows({{0, 1}, {-1, 0}}); }
inline ExchangeMatrix b2() { return ExchangeMatrix::from_rows({{0, 1}, {-2, 0}}); }
inline ExchangeMatrix a3() { return ExchangeMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}); }
inline ExchangeMatrix b3() { return ExchangeMatrix::from_rows({{0, 2, 0}, {-1, 0, 1}, {0, -1, 0}}); }
inline ExchangeMatrix cyclic3() { return ExchangeMatrix::from_rows({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}); }

inline LaurentPoly poly(const char* text, std::size_t n, const char* prefix = "x") {
  return LaurentPoly::parse(text, n, prefix);
}

inline std::vector<LaurentPoly> cluster(std::initializer_list<const char*> texts, std::size_t n,
                                        const char* prefix = "x") {
  std::vector<LaurentPoly> out;
  for (const char* t : texts) out.push_back(poly(t, n, prefix));
  return out;
}

}  // namespace fixtures

#endif  // CLUSTERKIT_TESTS_FIXTURES_HPP_
