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

// Seeded random rule bases for property tests and postulate campaigns.
//
// Generation is a pure function of GeneratorConfig. The bit stream is
// std::mt19937_64 (whose output sequence is fixed by the C++ standard) and
// bounded draws use rejection sampling on raw engine output, so the same seed
// yields the same base on every conforming platform.

#ifndef RBIM_GENERATOR_H_
#define RBIM_GENERATOR_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rbim/rule_base.h"

namespace rbim {

inline constexpr std::string_view kPrngAlgorithm = "mt19937_64+rejection/v1";

class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, bound). bound must be positive.
  std::uint64_t Below(std::uint64_t bound);
  // True with probability numerator/denominator.
  bool Bernoulli(std::uint64_t numerator, std::uint64_t denominator);

 private:
  std::mt19937_64 engine_;
};

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t atom_count = 4;
  std::size_t fact_count = 3;
  std::size_t rule_count = 4;
  std::size_t max_body_size = 2;
  // Probability that a generated literal is negative.
  std::uint64_t negation_numerator = 1;
  std::uint64_t negation_denominator = 2;
};

// Atom names used by the generator: a, b, ..., z, then p26, p27, ...
std::string GeneratedAtomName(std::size_t index);

// Throws ShapeInfeasible when more distinct facts or rules are requested than
// exist over the configured atoms, and std::invalid_argument for a malformed
// config (no elements, no atoms, probability outside [0, 1]).
RuleBase GenerateRuleBase(const GeneratorConfig& config);
// Same, drawing from an existing stream (config.seed is ignored).
RuleBase GenerateRuleBase(const GeneratorConfig& config, Prng& prng);

// A random literal over atoms [0, atom_count).
Literal RandomLiteral(const GeneratorConfig& config, Prng& prng);
// A random non-fact rule with a body of 1..max_body_size distinct atoms.
Rule RandomRule(const GeneratorConfig& config, Prng& prng);

}  // namespace rbim

#endif  // RBIM_GENERATOR_H_
