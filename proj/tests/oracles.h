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
// Slow reference implementations used to cross-check the library. They share
// only the data types with rbim; every algorithm here is the textbook
// definition applied by exhaustive enumeration.

#ifndef RBIM_TESTS_ORACLES_H_
#define RBIM_TESTS_ORACLES_H_

#include <functional>
#include <set>
#include <vector>

#include "rbim/rational.h"
#include "rbim/rule_base.h"
#include "rbim/semantics.h"

namespace rbim::oracle {

// Least fixpoint by repeated passes over every rule until nothing changes.
LiteralSet MinimalModel(const std::vector<Rule>& rules);
bool IsConsistent(const std::vector<Rule>& rules);

// All subsets, kept when inconsistent and every one-smaller subset is
// consistent. Members are sorted element vectors.
std::set<std::vector<Rule>> MinimalInconsistent(const RuleBase& base);
std::set<std::vector<Rule>> MinimalInconsistentWithoutFacts(
    const RuleBase& base);

// Minimum number of b atoms over all 3^k interpretations of the atoms of
// rules that satisfy every rule.
std::size_t Contension(const std::vector<Rule>& rules);

// The eight measures computed from the oracles above.
Rational Measure(std::string_view name, const RuleBase& base);

using Game = std::function<Rational(const RuleBase&)>;

// Average marginal contribution over all |base|! orderings.
std::vector<Rational> PermutationShapley(const Game& game,
                                         const RuleBase& base);

// Adjusted values by summing CoalPayoff and AddPayoff over all coalitions,
// with Free(C) taken from the oracle MI of each coalition.
std::vector<Rational> DefinitionAdjustedShapley(const Game& game,
                                                const RuleBase& base);

}  // namespace rbim::oracle

#endif  // RBIM_TESTS_ORACLES_H_
