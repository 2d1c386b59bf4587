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
#include <cstdint>

#include "benchmark/benchmark.h"
#include "rbim/generator.h"
#include "rbim/indexed_base.h"
#include "rbim/rule_base.h"

namespace rbim {
namespace {

RuleBase Workload(std::size_t elements) {
  GeneratorConfig config;
  config.seed = 17;
  config.atom_count = 6;
  config.fact_count = elements / 3;
  config.rule_count = elements - config.fact_count;
  return GenerateRuleBase(config);
}

void BM_MinimalInconsistent(benchmark::State& state) {
  const RuleBase base = Workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    IndexedBase indexed(base);
    benchmark::DoNotOptimize(indexed.MinimalInconsistent().size());
  }
}
BENCHMARK(BM_MinimalInconsistent)->DenseRange(8, 20, 4);

void BM_IsConsistent(benchmark::State& state) {
  const RuleBase base = Workload(18);
  IndexedBase indexed(base);
  std::uint32_t mask = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(indexed.IsConsistent(mask));
    mask = (mask + 1) & indexed.full_mask();
  }
}
BENCHMARK(BM_IsConsistent);

}  // namespace
}  // namespace rbim

BENCHMARK_MAIN();
