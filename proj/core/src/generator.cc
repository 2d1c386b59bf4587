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
#include "rbim/generator.h"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "rbim/errors.h"

namespace rbim {

namespace {

constexpr std::size_t kRetriesPerElement = 64;

// Number of distinct non-fact rules over atom_count atoms, saturating.
std::uint64_t DistinctRuleCount(std::size_t atom_count,
                                std::size_t max_body_size) {
  constexpr std::uint64_t kCap = std::numeric_limits<std::uint64_t>::max() / 4;
  std::uint64_t bodies = 0;
  std::uint64_t choose = 1;  // C(atom_count, k)
  for (std::size_t k = 1; k <= std::min(atom_count, max_body_size); ++k) {
    choose = choose * (atom_count - k + 1) / k;
    if (k >= 62 || choose > (kCap >> k)) return kCap;
    bodies += choose << k;
    if (bodies > kCap) return kCap;
  }
  if (bodies > kCap / (2 * atom_count)) return kCap;
  return bodies * 2 * atom_count;
}

void Validate(const GeneratorConfig& config) {
  if (config.atom_count == 0) {
    throw std::invalid_argument("generator needs at least one atom");
  }
  if (config.fact_count + config.rule_count == 0) {
    throw std::invalid_argument("generator needs at least one element");
  }
  if (config.negation_denominator == 0 ||
      config.negation_numerator > config.negation_denominator) {
    throw std::invalid_argument("negation probability must lie in [0, 1]");
  }
  if (config.rule_count > 0 && config.max_body_size == 0) {
    throw ShapeInfeasible("rules need a body of at least one literal");
  }
  if (config.fact_count > 2 * config.atom_count) {
    throw ShapeInfeasible("only " + std::to_string(2 * config.atom_count) +
                          " distinct facts exist over " +
                          std::to_string(config.atom_count) + " atoms");
  }
  if (config.rule_count >
      DistinctRuleCount(config.atom_count, config.max_body_size)) {
    throw ShapeInfeasible("not enough distinct rules exist for the shape");
  }
}

}  // namespace

std::uint64_t Prng::Below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Prng::Below needs bound > 0");
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

bool Prng::Bernoulli(std::uint64_t numerator, std::uint64_t denominator) {
  return Below(denominator) < numerator;
}

std::string GeneratedAtomName(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "p" + std::to_string(index);
}

Literal RandomLiteral(const GeneratorConfig& config, Prng& prng) {
  Atom atom(GeneratedAtomName(prng.Below(config.atom_count)));
  const bool negative =
      prng.Bernoulli(config.negation_numerator, config.negation_denominator);
  return Literal(std::move(atom), !negative);
}

Rule RandomRule(const GeneratorConfig& config, Prng& prng) {
  const std::size_t max_body =
      std::min(config.max_body_size, config.atom_count);
  const std::size_t body_size = 1 + prng.Below(max_body);
  std::vector<std::size_t> atoms(config.atom_count);
  for (std::size_t i = 0; i < atoms.size(); ++i) atoms[i] = i;
  // Partial Fisher-Yates for body_size distinct atoms.
  std::vector<Literal> body;
  for (std::size_t i = 0; i < body_size; ++i) {
    const std::size_t j = i + prng.Below(atoms.size() - i);
    std::swap(atoms[i], atoms[j]);
    const bool negative =
        prng.Bernoulli(config.negation_numerator, config.negation_denominator);
    body.emplace_back(Atom(GeneratedAtomName(atoms[i])), !negative);
  }
  Literal head = RandomLiteral(config, prng);
  return Rule(std::move(body), std::move(head));
}

RuleBase GenerateRuleBase(const GeneratorConfig& config) {
  Prng prng(config.seed);
  return GenerateRuleBase(config, prng);
}

RuleBase GenerateRuleBase(const GeneratorConfig& config, Prng& prng) {
  Validate(config);
  std::set<Rule> elements;
  auto fill = [&](std::size_t count, auto draw) {
    const std::size_t target = elements.size() + count;
    std::size_t attempts = 0;
    while (elements.size() < target) {
      if (attempts++ >= kRetriesPerElement * (count + 1)) {
        throw ShapeInfeasible("retry cap reached while drawing distinct "
                              "elements; shape too dense");
      }
      elements.insert(draw());
    }
  };
  fill(config.fact_count,
       [&] { return Rule::Fact(RandomLiteral(config, prng)); });
  fill(config.rule_count, [&] { return RandomRule(config, prng); });
  return RuleBase(std::vector<Rule>(elements.begin(), elements.end()));
}

}  // namespace rbim
