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

// Executable rationality postulates.
//
// Each Check* function decides one postulate on one concrete instance and
// returns a PostulateCheck carrying every input needed to re-run it. A
// campaign runs a postulate over fixed regression instances followed by
// seeded random instances; "no violation in N instances" is evidence, not
// proof.

#ifndef RBIM_POSTULATES_H_
#define RBIM_POSTULATES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbim/generator.h"
#include "rbim/limits.h"
#include "rbim/measures.h"
#include "rbim/rule_base.h"

namespace rbim {

enum class Verdict { kHolds, kViolated, kInapplicable };
std::string_view VerdictName(Verdict verdict);

struct PostulateCheck {
  std::string postulate;
  std::string measure;
  Verdict verdict = Verdict::kInapplicable;
  RuleBase base;
  // FE: the fact added; RE: the rule added; IN: the removed element;
  // free formula independence: the free formula added.
  std::optional<Rule> formula;
  // MO: the superset base.
  std::optional<RuleBase> other_base;
  // Human-readable values behind the verdict.
  std::string detail;
};

// I(B) = 0 iff R(B) u F' is consistent for every consistent F' of F(B).
PostulateCheck CheckRC(const InconsistencyMeasure& measure,
                       const RuleBase& base, const Limits& limits = {});

// The RC condition itself, independent of any measure.
bool IsRuleConsistent(const RuleBase& base, const Limits& limits = {});

// Which bases admit a fact elision instance.
enum class FactElisionPremise {
  // The atom of alpha occurs in no rule of R(B): the added fact is safe with
  // respect to the business rules.
  kSafeForRules,
  // Only: no rule of R(B) has head alpha.
  kHeadOnly,
};

// If the premise holds, I(B) = I(B u {!alpha}).
PostulateCheck CheckFE(const InconsistencyMeasure& measure,
                       const RuleBase& base, const Literal& alpha,
                       const Limits& limits = {},
                       FactElisionPremise premise =
                           FactElisionPremise::kSafeForRules);

// If rule is not in B and not free in B u {rule}, then
// I(B u {rule}) > I(B u {head(rule)}).
PostulateCheck CheckRE(const InconsistencyMeasure& measure,
                       const RuleBase& base, const Rule& rule,
                       const Limits& limits = {});

// I(B) = 0 iff B is consistent.
PostulateCheck CheckCO(const InconsistencyMeasure& measure,
                       const RuleBase& base, const Limits& limits = {});

// If B is a subset of B' then I(B) <= I(B').
PostulateCheck CheckMO(const InconsistencyMeasure& measure,
                       const RuleBase& base, const RuleBase& superset,
                       const Limits& limits = {});

// If alpha is free in B then I(B) = I(B \ {alpha}).
PostulateCheck CheckIN(const InconsistencyMeasure& measure,
                       const RuleBase& base, const Rule& alpha,
                       const Limits& limits = {});

// Distribution, Minimality, Fact-Minimality, Rule-Involvement,
// Rule Consistency', Free formula independence' and Upper Bound of the
// (adjusted) Shapley values. free_formula is the formula added for free
// formula independence'; when absent one is chosen deterministically.
std::vector<PostulateCheck> CheckShapleyProperties(
    const InconsistencyMeasure& measure, const RuleBase& base,
    const std::optional<Rule>& free_formula = std::nullopt,
    const Limits& limits = {});

inline constexpr std::string_view kShapleyPropertyNames[] = {
    "Distribution",      "Minimality",        "Fact-Minimality",
    "Rule-Involvement",  "Rule Consistency'", "Free formula independence'",
    "Upper Bound",
};

// Re-runs the predicate recorded in check and returns the fresh verdict.
PostulateCheck Recheck(const PostulateCheck& check, const Limits& limits = {});

enum class Postulate { kRC, kFE, kRE, kCO, kMO, kIN };
// "RC", "FE", "RE", "CO", "MO", "IN". Throws UnknownPostulate.
Postulate PostulateByName(std::string_view name);
std::string_view PostulateName(Postulate postulate);

// Known instances from the literature, run before the random ones.
std::vector<PostulateCheck> FixedInstances(const InconsistencyMeasure& measure,
                                           Postulate postulate,
                                           const Limits& limits = {});

// One random instance: a base generated from config with the given seed plus
// whatever extra input the postulate needs, drawn from the same stream.
PostulateCheck RandomInstance(const InconsistencyMeasure& measure,
                              Postulate postulate,
                              const GeneratorConfig& config,
                              const Limits& limits = {});

struct CampaignResult {
  std::string measure;
  std::string postulate;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  std::string prng = std::string(kPrngAlgorithm);
  std::size_t fixed_instances = 0;
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t inapplicable = 0;
  // Lowest-indexed violation: fixed instances first, then by seed.
  std::optional<PostulateCheck> first_violation;
};

// Fixed instances (if include_fixed) followed by budget random instances with
// seeds config.seed, config.seed + 1, ...
CampaignResult RunCampaign(const InconsistencyMeasure& measure,
                           Postulate postulate, std::size_t budget,
                           const GeneratorConfig& config,
                           const Limits& limits = {},
                           bool include_fixed = true);

// First violation of a campaign, if any.
std::optional<PostulateCheck> SearchCounterexample(
    const InconsistencyMeasure& measure, Postulate postulate,
    std::size_t budget, const GeneratorConfig& config,
    const Limits& limits = {});

}  // namespace rbim

#endif  // RBIM_POSTULATES_H_
