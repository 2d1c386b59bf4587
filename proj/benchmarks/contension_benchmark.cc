// Copyright 2026 The rbim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "benchmark/benchmark.h"
#include "rbim/generator.h"
#include "rbim/measures.h"

namespace rbim {
namespace {

void BM_MinimumParadoxicalAtoms(benchmark::State& state) {
  GeneratorConfig config;
  config.seed = 31;
  config.atom_count = static_cast<std::size_t>(state.range(0));
  config.fact_count = config.atom_count;
  config.rule_count = config.atom_count;
  const RuleBase base = GenerateRuleBase(config);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MinimumParadoxicalAtoms(base.rules()));
  }
}
BENCHMARK(BM_MinimumParadoxicalAtoms)->DenseRange(4, 12, 2);

}  // namespace
}  // namespace rbim

BENCHMARK_MAIN();
