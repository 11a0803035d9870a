//  Copyright 2026 The odolab Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "odolab/action.hpp"
#include "odolab/coset_table.hpp"
#include "odolab/eigenset.hpp"
#include "odolab/group.hpp"
#include "odolab/oracle.hpp"
#include "odolab/scale.hpp"

namespace {

using namespace odolab;

GroupCtxPtr free_z() {
  return std::make_shared<const GroupCtx>("Z", std::vector<std::string>{"a"});
}

CosetTable nz(const GroupCtxPtr& z, int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = (i + 1) % n;
  return CosetTable::from_table(z, {Perm(std::move(m))}, 0);
}

void BM_Canonicalize(benchmark::State& state) {
  const GroupCtxPtr z = free_z();
  const int n = static_cast<int>(state.range(0));
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = (i + 1) % n;
  const std::vector<Perm> action{Perm(m)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(CosetTable::from_table(z, action, n / 2));
  }
}
BENCHMARK(BM_Canonicalize)->Arg(64)->Arg(1024)->Arg(16384);

void BM_Intersect(benchmark::State& state) {
  const GroupCtxPtr z = free_z();
  const int n = static_cast<int>(state.range(0));
  const CosetTable a = nz(z, n);
  const CosetTable b = nz(z, n + 1);  // coprime, so the result has n*(n+1) points
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersect(a, b));
  }
}
BENCHMARK(BM_Intersect)->Arg(32)->Arg(256)->Arg(1024);

void BM_Join(benchmark::State& state) {
  const GroupCtxPtr z = free_z();
  const int n = static_cast<int>(state.range(0));
  const CosetTable a = nz(z, 4 * n);
  const CosetTable b = nz(z, 6 * n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(join(a, b));
  }
}
BENCHMARK(BM_Join)->Arg(16)->Arg(128)->Arg(1024);

void BM_Overgroups(benchmark::State& state) {
  const GroupCtxPtr ctx = oracle::s5_context();
  const CosetTable t = CosetTable::from_subgroup_words(
      ctx, {parse_word("c t c^-1 t^-1", *ctx)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(overgroups(t));
  }
}
BENCHMARK(BM_Overgroups);

void BM_EigenhullS5(benchmark::State& state) {
  const GroupCtxPtr ctx = oracle::s5_context();
  const auto g1 = oracle::closure({perm_from_cycle_string("(1 2 3)", 5),
                                   perm_from_cycle_string("(2 3)(4 5)", 5)},
                                  5);
  const CosetTable t = oracle::table_of(ctx, g1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigenhull_enum(t));
  }
}
BENCHMARK(BM_EigenhullS5);

void BM_EnumerateSubgroupsS5(benchmark::State& state) {
  const GroupCtxPtr ctx = oracle::s5_context();
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::enumerate_subgroups(*ctx));
  }
}
BENCHMARK(BM_EnumerateSubgroupsS5)->Unit(benchmark::kMillisecond);

void BM_Subodometer(benchmark::State& state) {
  const GroupCtxPtr z = free_z();
  const int n = static_cast<int>(state.range(0));
  const FiniteScale s = FiniteScale::directify({nz(z, 4 * n), nz(z, 6 * n)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(s_subodometer(s));
  }
}
BENCHMARK(BM_Subodometer)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
