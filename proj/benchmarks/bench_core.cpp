//  Copyright 2026 The relind Authors
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

#include <relind/boxes.hpp>
#include <relind/determinacy.hpp>
#include <relind/quantum.hpp>
#include <relind/scenario.hpp>

#include <benchmark/benchmark.h>

using namespace relind;

static void BM_Boost(benchmark::State& state) {
  const Minkowski mk;
  SpacetimePoint p{0.3, 1.7};
  for (auto _ : state) {
    p = mk.boost(p, 0.25);
    p = mk.boost(p, -0.25);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_Boost);

static void BM_TruthAt(benchmark::State& state) {
  const Minkowski mk;
  Determinations d;
  d.add({"a", 0, {0, 0}});
  d.add({"b", 1, {0, 1}});
  d.add({"c", 1, {0.5, 2}});
  const auto p = Proposition::parse("(a=0 ^ b=1) | !c=0 <-> a=1");
  for (auto _ : state) benchmark::DoNotOptimize(truth_at(d, p, {1.2, 0.9}, mk));
}
BENCHMARK(BM_TruthAt);

static void BM_Frontier(benchmark::State& state) {
  const Minkowski mk;
  Determinations d;
  for (int i = 0; i < state.range(0); ++i) d.add({"v" + std::to_string(i), i % 2, {0.1 * i, 0.3 * i}});
  std::vector<Proposition> atoms;
  for (int i = 0; i < state.range(0); ++i) atoms.push_back(Proposition::atom("v" + std::to_string(i), 0));
  const auto p = atoms.size() == 1 ? atoms[0] : Proposition::compound(Connective::Xor, atoms);
  for (auto _ : state) benchmark::DoNotOptimize(determinacy_frontier(d, p, Worldline{{0, 0}, 0.2}, mk));
}
BENCHMARK(BM_Frontier)->Arg(2)->Arg(8)->Arg(32);

static void BM_ChshExact(benchmark::State& state) {
  const Box pr = pr_box();
  for (auto _ : state) benchmark::DoNotOptimize(local_bound(pr));
}
BENCHMARK(BM_ChshExact);

static void BM_StateAt(benchmark::State& state) {
  const Minkowski mk;
  QuantumSetup s;
  s.initial = w_state();
  s.measurements = {{"a", 0, Basis::z(), {0, 0}, 0}, {"b", 1, Basis::z(), {0.2, 1}, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(state_at(s, {2, 0.5}, mk));
}
BENCHMARK(BM_StateAt);

static void BM_RunBuiltin(benchmark::State& state) {
  const Scenario s = builtin_scenario("fig1");
  for (auto _ : state) benchmark::DoNotOptimize(run(s));
}
BENCHMARK(BM_RunBuiltin);

BENCHMARK_MAIN();
