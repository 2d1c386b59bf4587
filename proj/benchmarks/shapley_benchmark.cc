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
#include "rbim/shapley.h"

namespace rbim {
namespace {

void BM_AdjustedShapley(benchmark::State& state) {
  GeneratorConfig config;
  config.seed = 23;
  config.atom_count = 6;
  config.fact_count = 4;
  config.rule_count = static_cast<std::size_t>(state.range(0)) - 4;
  const RuleBase base = GenerateRuleBase(config);
  const InconsistencyMeasure& measure = MeasureByName("rb-mi");
  for (auto _ : state) {
    const CoalitionGame game(measure, base);
    benchmark::DoNotOptimize(game.AdjustedShapleyValues());
  }
}
BENCHMARK(BM_AdjustedShapley)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace rbim

BENCHMARK_MAIN();
