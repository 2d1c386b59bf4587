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

// Shapley inconsistency values.
//
// The classical value of element a in base B (n = |B|) is
//
//   S_a = sum over coalitions C of B of  (|C|-1)! (n-|C|)! / n!
//                                         * (I(C) - I(C \ {a}))
//
// where each summand is the coalition payoff of a in C. The adjusted value
// gives facts 0 and hands their payoff in each coalition C, in equal shares,
// to the rules of C that lie in some minimal inconsistent subset of C. All
// arithmetic is exact.

#ifndef RBIM_SHAPLEY_H_
#define RBIM_SHAPLEY_H_

#include <vector>

#include "rbim/indexed_base.h"
#include "rbim/limits.h"
#include "rbim/measures.h"
#include "rbim/rational.h"
#include "rbim/rule_base.h"

namespace rbim {

struct ShapleyEntry {
  Rule element;
  Rational value;

  friend bool operator==(const ShapleyEntry&, const ShapleyEntry&) = default;
};

// One entry per element, in canonical element order.
using ShapleyVector = std::vector<ShapleyEntry>;

// Entries by non-increasing value. Equal values put rules before facts, then
// follow canonical element order.
using CulpabilityRanking = std::vector<ShapleyEntry>;

Rational Sum(const ShapleyVector& values);
Rational Max(const ShapleyVector& values);
// Throws ElementNotInBase.
const Rational& ValueOf(const ShapleyVector& values, const Rule& element);

// The coalitional game "measure restricted to sub-bases of base". Evaluates
// the measure once per coalition (2^n of them) and answers every Shapley
// query from that table.
class CoalitionGame {
 public:
  CoalitionGame(const InconsistencyMeasure& measure, const RuleBase& base,
                const Limits& limits = {});

  const IndexedBase& indexed() const { return indexed_; }
  std::size_t size() const { return indexed_.size(); }

  // I(C)
  const Rational& Value(ElementMask coalition) const {
    return values_[coalition];
  }
  // (|C|-1)!(n-|C|)!/n! for |C| >= 1.
  const Rational& Weight(std::size_t coalition_size) const {
    return weights_[coalition_size];
  }

  Rational CoalitionPayoff(std::size_t element, ElementMask coalition) const;
  Rational AdditionalPayoff(std::size_t rule, ElementMask coalition) const;

  ShapleyVector ShapleyValues() const;
  ShapleyVector AdjustedShapleyValues() const;

 private:
  // Sum of the coalition payoffs of the facts in coalition.
  Rational FactPayoff(ElementMask coalition) const;

  IndexedBase indexed_;
  std::vector<Rational> values_;
  std::vector<Rational> weights_;
  // Union of the MI members inside each coalition; its complement within the
  // coalition is Free(coalition).
  std::vector<ElementMask> involved_;
};

// Payoff of element within coalition, weighted against n = |base|.
// Zero for the empty coalition and when element is not in coalition.
// Throws ElementNotInBase if element or any coalition member is not in base.
Rational CoalitionPayoff(const InconsistencyMeasure& measure,
                         const RuleBase& base, const Rule& element,
                         const RuleBase& coalition, const Limits& limits = {});

Rational ShapleyValue(const InconsistencyMeasure& measure,
                      const RuleBase& base, const Rule& element,
                      const Limits& limits = {});
ShapleyVector ShapleyValues(const InconsistencyMeasure& measure,
                            const RuleBase& base, const Limits& limits = {});

// Share of the facts' payoff in coalition handed to rule. Zero when rule is
// not in coalition or is free in it. Throws NotARule for facts.
Rational AdditionalPayoff(const InconsistencyMeasure& measure,
                          const RuleBase& base, const Rule& rule,
                          const RuleBase& coalition, const Limits& limits = {});

Rational AdjustedShapleyValue(const InconsistencyMeasure& measure,
                              const RuleBase& base, const Rule& element,
                              const Limits& limits = {});
ShapleyVector AdjustedShapleyValues(const InconsistencyMeasure& measure,
                                    const RuleBase& base,
                                    const Limits& limits = {});

// Largest adjusted value; 0 for the empty base.
Rational MaxAdjustedShapleyValue(const InconsistencyMeasure& measure,
                                 const RuleBase& base,
                                 const Limits& limits = {});

CulpabilityRanking RankByCulpability(const ShapleyVector& adjusted);
CulpabilityRanking RankByCulpability(const InconsistencyMeasure& measure,
                                     const RuleBase& base,
                                     const Limits& limits = {});

// Smallest adjusted value a non-free rule can receive, computed from its
// smallest minimal inconsistent subset M (m = |M|, n = |base|):
//   w + |F(M)| * w / |R(M)|   with   w = (m-1)!(n-m)!/n!.
// Throws ElementNotInBase, NotARule, or std::invalid_argument if the rule is
// free.
Rational RuleInvolvementLowerBound(const RuleBase& base, const Rule& rule,
                                   const Limits& limits = {});

}  // namespace rbim

#endif  // RBIM_SHAPLEY_H_
