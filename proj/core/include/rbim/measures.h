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

// Inconsistency measures over rule bases.
//
// Classical measures treat every element alike:
//   drastic      1 if the base is inconsistent, else 0
//   mi           number of minimal inconsistent subsets
//   problematic  number of elements in some minimal inconsistent subset
//   contension   fewest atoms mapped to b by a three-valued model
//
// The rule-based variants only look at minimal inconsistent subsets that are
// not pure fact sets {a, !a}; rb-problematic additionally counts rules only.

#ifndef RBIM_MEASURES_H_
#define RBIM_MEASURES_H_

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rbim/indexed_base.h"
#include "rbim/limits.h"
#include "rbim/mis.h"
#include "rbim/rational.h"
#include "rbim/rule_base.h"

namespace rbim {

class InconsistencyMeasure {
 public:
  virtual ~InconsistencyMeasure() = default;

  // Canonical registry name, e.g. "rb-mi".
  virtual std::string_view name() const = 0;
  // True for the four measures that ignore pure fact conflicts.
  virtual bool rule_based() const = 0;

  // Value on the sub-base of indexed selected by subset. Never negative.
  virtual Rational EvaluateSubset(const IndexedBase& indexed,
                                  ElementMask subset) const = 0;

  Rational Evaluate(const RuleBase& base, const Limits& limits = {}) const;
};

// Fewest atoms that a three-valued interpretation satisfying every rule must
// map to b. Only atoms occurring in the rules are searched. Throws
// SizeLimitExceeded when that atom count exceeds limits.max_contension_atoms.
std::size_t MinimumParadoxicalAtoms(std::span<const Rule> rules,
                                    const Limits& limits = {});

Rational IDrastic(const RuleBase& base, const Limits& limits = {});
Rational IMI(const RuleBase& base, const Limits& limits = {});
Rational IProblematic(const RuleBase& base, const Limits& limits = {});
Rational IContension(const RuleBase& base, const Limits& limits = {});
Rational IRbDrastic(const RuleBase& base, const Limits& limits = {});
Rational IRbMI(const RuleBase& base, const Limits& limits = {});
Rational IRbProblematic(const RuleBase& base, const Limits& limits = {});
Rational IRbContension(const RuleBase& base, const Limits& limits = {});

// Registry. Names: drastic, mi, problematic, contension, rb-drastic, rb-mi,
// rb-problematic, rb-contension.
const InconsistencyMeasure& MeasureByName(std::string_view name);
std::span<const InconsistencyMeasure* const> AllMeasures();
std::span<const InconsistencyMeasure* const> ClassicalMeasures();
std::span<const InconsistencyMeasure* const> RuleBasedMeasures();
std::vector<std::string> MeasureNames();

struct MeasureReport {
  std::map<std::string, Rational> values;
  MISet mi;
  MISet mi_without_facts;
};

// Every registered measure on one base, sharing a single MI enumeration.
MeasureReport MeasureAll(const RuleBase& base, const Limits& limits = {});

}  // namespace rbim

#endif  // RBIM_MEASURES_H_
