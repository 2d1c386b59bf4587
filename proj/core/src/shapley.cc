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
#include "rbim/shapley.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rbim/errors.h"

namespace rbim {

namespace {

Rational CoalitionWeight(std::size_t coalition_size, std::size_t n) {
  if (coalition_size == 0 || coalition_size > n) return Rational(0);
  return Rational(Factorial(coalition_size - 1) * Factorial(n - coalition_size),
                  Factorial(n));
}

void RequireRule(const Rule& rule) {
  if (rule.IsFact()) {
    throw NotARule("'" + rule.ToString() + "' is a fact, not a rule");
  }
}

}  // namespace

Rational Sum(const ShapleyVector& values) {
  Rational total = 0;
  for (const ShapleyEntry& e : values) total += e.value;
  return total;
}

Rational Max(const ShapleyVector& values) {
  Rational best = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == 0 || values[i].value > best) best = values[i].value;
  }
  return best;
}

const Rational& ValueOf(const ShapleyVector& values, const Rule& element) {
  for (const ShapleyEntry& e : values) {
    if (e.element == element) return e.value;
  }
  throw ElementNotInBase("'" + element.ToString() + "' has no Shapley entry");
}

CoalitionGame::CoalitionGame(const InconsistencyMeasure& measure,
                             const RuleBase& base, const Limits& limits)
    : indexed_(base, limits) {
  const std::size_t n = indexed_.size();
  const std::size_t count = std::size_t{1} << n;
  values_.reserve(count);
  involved_.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    const auto coalition = static_cast<ElementMask>(mask);
    values_.push_back(measure.EvaluateSubset(indexed_, coalition));
    involved_.push_back(indexed_.ProblematicWithin(coalition));
  }
  for (std::size_t b = 0; b <= n; ++b) {
    weights_.push_back(CoalitionWeight(b, n));
  }
}

Rational CoalitionGame::CoalitionPayoff(std::size_t element,
                                        ElementMask coalition) const {
  const ElementMask bit = IndexedBase::Bit(element);
  if (!(coalition & bit)) return Rational(0);
  return Weight(PopCount(coalition)) *
         (values_[coalition] - values_[coalition & ~bit]);
}

Rational CoalitionGame::FactPayoff(ElementMask coalition) const {
  Rational total = 0;
  const ElementMask facts = coalition & indexed_.fact_mask();
  for (std::size_t i = 0; i < size(); ++i) {
    if (facts & IndexedBase::Bit(i)) total += CoalitionPayoff(i, coalition);
  }
  return total;
}

Rational CoalitionGame::AdditionalPayoff(std::size_t rule,
                                         ElementMask coalition) const {
  RequireRule(indexed_.element(rule));
  const ElementMask bit = IndexedBase::Bit(rule);
  if (!(coalition & bit) || !(involved_[coalition] & bit)) return Rational(0);
  const int blamable =
      PopCount(coalition & indexed_.rule_mask() & involved_[coalition]);
  return FactPayoff(coalition) / blamable;
}

ShapleyVector CoalitionGame::ShapleyValues() const {
  const std::size_t n = size();
  std::vector<Rational> sums(n);
  const std::size_t count = std::size_t{1} << n;
  for (std::size_t mask = 1; mask < count; ++mask) {
    const auto coalition = static_cast<ElementMask>(mask);
    for (std::size_t i = 0; i < n; ++i) {
      if (coalition & IndexedBase::Bit(i)) {
        sums[i] += CoalitionPayoff(i, coalition);
      }
    }
  }
  ShapleyVector out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({indexed_.element(i), std::move(sums[i])});
  }
  return out;
}

ShapleyVector CoalitionGame::AdjustedShapleyValues() const {
  const std::size_t n = size();
  std::vector<Rational> sums(n);
  const std::size_t count = std::size_t{1} << n;
  for (std::size_t mask = 1; mask < count; ++mask) {
    const auto coalition = static_cast<ElementMask>(mask);
    const ElementMask rules = coalition & indexed_.rule_mask();
    if (rules == 0) continue;
    const ElementMask blamable = rules & involved_[coalition];
    Rational share = 0;
    if (blamable != 0) {
      share = FactPayoff(coalition) / PopCount(blamable);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const ElementMask bit = IndexedBase::Bit(i);
      if (!(rules & bit)) continue;
      sums[i] += CoalitionPayoff(i, coalition);
      if (blamable & bit) sums[i] += share;
    }
  }
  ShapleyVector out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({indexed_.element(i), std::move(sums[i])});
  }
  return out;
}

Rational CoalitionPayoff(const InconsistencyMeasure& measure,
                         const RuleBase& base, const Rule& element,
                         const RuleBase& coalition, const Limits& limits) {
  IndexedBase indexed(base, limits);
  const std::size_t i = indexed.IndexOf(element);
  const ElementMask mask = indexed.MaskOf(coalition);
  const ElementMask bit = IndexedBase::Bit(i);
  if (!(mask & bit)) return Rational(0);
  return CoalitionWeight(PopCount(mask), indexed.size()) *
         (measure.EvaluateSubset(indexed, mask) -
          measure.EvaluateSubset(indexed, mask & ~bit));
}

Rational ShapleyValue(const InconsistencyMeasure& measure,
                      const RuleBase& base, const Rule& element,
                      const Limits& limits) {
  return ValueOf(ShapleyValues(measure, base, limits), element);
}

ShapleyVector ShapleyValues(const InconsistencyMeasure& measure,
                            const RuleBase& base, const Limits& limits) {
  return CoalitionGame(measure, base, limits).ShapleyValues();
}

Rational AdditionalPayoff(const InconsistencyMeasure& measure,
                          const RuleBase& base, const Rule& rule,
                          const RuleBase& coalition, const Limits& limits) {
  RequireRule(rule);
  IndexedBase indexed(base, limits);
  const ElementMask bit = IndexedBase::Bit(indexed.IndexOf(rule));
  const ElementMask mask = indexed.MaskOf(coalition);
  const ElementMask involved = indexed.ProblematicWithin(mask);
  if (!(mask & bit) || !(involved & bit)) return Rational(0);
  const Rational weight = CoalitionWeight(PopCount(mask), indexed.size());
  const Rational whole = measure.EvaluateSubset(indexed, mask);
  Rational fact_payoff = 0;
  for (std::size_t i = 0; i < indexed.size(); ++i) {
    const ElementMask fact = IndexedBase::Bit(i);
    if (!(mask & indexed.fact_mask() & fact)) continue;
    fact_payoff += weight * (whole - measure.EvaluateSubset(indexed, mask & ~fact));
  }
  return fact_payoff / PopCount(mask & indexed.rule_mask() & involved);
}

Rational AdjustedShapleyValue(const InconsistencyMeasure& measure,
                              const RuleBase& base, const Rule& element,
                              const Limits& limits) {
  return ValueOf(AdjustedShapleyValues(measure, base, limits), element);
}

ShapleyVector AdjustedShapleyValues(const InconsistencyMeasure& measure,
                                    const RuleBase& base,
                                    const Limits& limits) {
  return CoalitionGame(measure, base, limits).AdjustedShapleyValues();
}

Rational MaxAdjustedShapleyValue(const InconsistencyMeasure& measure,
                                 const RuleBase& base, const Limits& limits) {
  return Max(AdjustedShapleyValues(measure, base, limits));
}

CulpabilityRanking RankByCulpability(const ShapleyVector& adjusted) {
  CulpabilityRanking ranking = adjusted;
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const ShapleyEntry& a, const ShapleyEntry& b) {
                     if (a.value != b.value) return a.value > b.value;
                     if (a.element.IsFact() != b.element.IsFact()) {
                       return !a.element.IsFact();
                     }
                     return a.element < b.element;
                   });
  return ranking;
}

CulpabilityRanking RankByCulpability(const InconsistencyMeasure& measure,
                                     const RuleBase& base,
                                     const Limits& limits) {
  return RankByCulpability(AdjustedShapleyValues(measure, base, limits));
}

Rational RuleInvolvementLowerBound(const RuleBase& base, const Rule& rule,
                                   const Limits& limits) {
  RequireRule(rule);
  IndexedBase indexed(base, limits);
  const ElementMask bit = IndexedBase::Bit(indexed.IndexOf(rule));
  for (ElementMask m : indexed.MinimalInconsistent()) {
    if (!(m & bit)) continue;
    const int size = PopCount(m);
    const int facts = PopCount(m & indexed.fact_mask());
    const Rational w = CoalitionWeight(size, indexed.size());
    return w + facts * w / (size - facts);
  }
  throw std::invalid_argument("'" + rule.ToString() + "' is a free formula");
}

}  // namespace rbim
