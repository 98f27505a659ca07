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


#include <benchmark/benchmark.h>

#include <random>

#include "clusterkit/laurent.hpp"

namespace {

using clusterkit::BigInt;
using clusterkit::LaurentPoly;
using clusterkit::Monomial;
using clusterkit::Term;

LaurentPoly random_poly(std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<int> exp(-4, 4), coef(-9, 9);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) ts.push_back(Term{Monomial({exp(rng), exp(rng), exp(rng)}), BigInt(coef(rng))});
  return LaurentPoly::from_terms(3, std::move(ts));
}

void BM_Mul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  LaurentPoly p = random_poly(rng, static_cast<int>(state.range(0)));
  LaurentPoly q = random_poly(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(clusterkit::mul(p, q));
}
BENCHMARK(BM_Mul)->Arg(4)->Arg(16)->Arg(64);

void BM_ExactDiv(benchmark::State& state) {
  std::mt19937_64 rng(2);
  LaurentPoly p = random_poly(rng, static_cast<int>(state.range(0)));
  LaurentPoly q = random_poly(rng, static_cast<int>(state.range(0)));
  LaurentPoly pq = clusterkit::mul(p, q);
  for (auto _ : state) benchmark::DoNotOptimize(clusterkit::exact_div(pq, q));
}
BENCHMARK(BM_ExactDiv)->Arg(4)->Arg(16)->Arg(64);

void BM_Encode(benchmark::State& state) {
  std::mt19937_64 rng(3);
  LaurentPoly p = random_poly(rng, 32);
  for (auto _ : state) benchmark::DoNotOptimize(p.to_string());
}
BENCHMARK(BM_Encode);

}  // namespace
