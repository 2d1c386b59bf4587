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
#include "rbim/measures.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "rbim/errors.h"

namespace rbim {

namespace {

using AtomMask = std::uint32_t;

// A rule read classically: satisfied iff a positive atom in pos is true or a
// negative atom in neg is false. The body contributes complemented literals.
struct Clause {
  AtomMask pos = 0;
  AtomMask neg = 0;
};

bool AnyClauseViolated(const std::vector<Clause>& clauses, AtomMask skip,
                       AtomMask truth) {
  for (const Clause& c : clauses) {
    if ((c.pos | c.neg) & skip) continue;
    if ((c.pos & truth) == 0 && (c.neg & ~truth) == 0) return true;
  }
  return false;
}

// True iff the clauses not touching the b-atoms in both admit a two-valued
// model over the remaining atoms.
bool ClassicallySatisfiable(const std::vector<Clause>& clauses, AtomMask both,
                            AtomMask all) {
  const AtomMask free = all & ~both;
  AtomMask truth = free;
  while (true) {
    if (!AnyClauseViolated(clauses, both, truth)) return true;
    if (truth == 0) return false;
    truth = (truth - 1) & free;
  }
}

bool NextCombination(std::vector<int>& combo, int n) {
  const int k = static_cast<int>(combo.size());
  for (int i = k - 1; i >= 0; --i) {
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Rational Count(std::size_t n) { return Rational(static_cast<long long>(n)); }

class Drastic : public InconsistencyMeasure {
 public:
  std::string_view name() const override { return "drastic"; }
  bool rule_based() const override { return false; }
  Rational EvaluateSubset(const IndexedBase& indexed,
                          ElementMask subset) const override {
    return Count(indexed.IsConsistent(subset) ? 0 : 1);
  }
};

class MICount : public InconsistencyMeasure {
 public:
  std::string_view name() const override { return "mi"; }
  bool rule_based() const override { return false; }
  Rational EvaluateSubset(const IndexedBase& indexed,
                          ElementMask subset) const override {
    return Count(indexed.MinimalInconsistentWithin(subset).size());
  }
};

class Problematic : public InconsistencyMeasure {
 public:
  std::string_view name() const override { return "problematic"; }
  bool rule_based() const override { return false; }
  Rational EvaluateSubset(const IndexedBase& indexed,
                          ElementMask subset) const override {
    return Count(PopCount(indexed.ProblematicWithin(subset)));
  }
};

class Contension : public InconsistencyMeasure {
 public:
  std::string_view name() const override { return "contension"; }
  bool rule_based() const override { return false; }
  Rational EvaluateSubset(const IndexedBase& indexed,
                          ElementMask subset) const override {
    const auto elements = indexed.Elements(subset);
    return Count(MinimumParadoxicalAtoms(elements, indexed.limits()));
  }
};

class RbDrastic : public InconsistencyMeasure {
 public:
  std::string_view name() const override { return "rb-drastic"; }
  bool rule_based() const override { return true; }
  Rational EvaluateSubset(const IndexedBase& indexed,
                          ElementMask subset) const override {
    return Count(indexed.ProblematicWithoutFactsWithin(subset) == 0 ? 0 : 1);
  }
};

class RbMI : public InconsistencyMeasure {
 public:
  std::string_view name() const override { return "rb-mi"; }
  bool rule_based() const override { return true; }
  Rational EvaluateSubset(const IndexedBase& indexed,
                          ElementMask subset) const override {
    return Count(indexed.MinimalInconsistentWithoutFactsWithin(subset).size());
  }
};

class RbProblematic : public InconsistencyMeasure {
 public:
  std::string_view name() const override { return "rb-problematic"; }
  bool rule_based() const override { return true; }
  Rational EvaluateSubset(const IndexedBase& indexed,
                          ElementMask subset) const override {
    const ElementMask involved = indexed.ProblematicWithoutFactsWithin(subset);
    return Count(PopCount(involved & indexed.rule_mask()));
  }
};

class RbContension : public InconsistencyMeasure {
 public:
  std::string_view name() const override { return "rb-contension"; }
  bool rule_based() const override { return true; }
  Rational EvaluateSubset(const IndexedBase& indexed,
                          ElementMask subset) const override {
    const ElementMask involved = indexed.ProblematicWithoutFactsWithin(subset);
    if (involved == 0) return Count(0);
    const auto elements = indexed.Elements(involved);
    return Count(MinimumParadoxicalAtoms(elements, indexed.limits()));
  }
};

const Drastic kDrastic;
const MICount kMI;
const Problematic kProblematic;
const Contension kContension;
const RbDrastic kRbDrastic;
const RbMI kRbMI;
const RbProblematic kRbProblematic;
const RbContension kRbContension;

constexpr std::array<const InconsistencyMeasure*, 8> kAll = {
    &kDrastic,   &kMI,   &kProblematic,   &kContension,
    &kRbDrastic, &kRbMI, &kRbProblematic, &kRbContension};

}  // namespace

Rational InconsistencyMeasure::Evaluate(const RuleBase& base,
                                        const Limits& limits) const {
  IndexedBase indexed(base, limits);
  return EvaluateSubset(indexed, indexed.full_mask());
}

std::size_t MinimumParadoxicalAtoms(std::span<const Rule> rules,
                                    const Limits& limits) {
  std::map<Atom, int> index;
  for (const Rule& r : rules) {
    for (const Atom& a : r.Atoms()) index.emplace(a, 0);
  }
  if (index.size() > limits.max_contension_atoms || index.size() > 31) {
    throw SizeLimitExceeded("contension search over " +
                            std::to_string(index.size()) +
                            " atoms exceeds the limit of " +
                            std::to_string(limits.max_contension_atoms));
  }
  int next = 0;
  for (auto& [atom, i] : index) i = next++;
  const int n = next;

  std::vector<Clause> clauses;
  clauses.reserve(rules.size());
  for (const Rule& r : rules) {
    Clause c;
    auto add = [&](const Literal& l, bool positive) {
      (positive ? c.pos : c.neg) |= AtomMask{1} << index.at(l.atom());
    };
    add(r.head(), r.head().positive());
    for (const Literal& l : r.body()) add(l, !l.positive());
    clauses.push_back(c);
  }

  const AtomMask all = n == 0 ? 0 : (~AtomMask{0} >> (32 - n));
  for (int k = 0; k <= n; ++k) {
    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    do {
      AtomMask both = 0;
      for (int i : combo) both |= AtomMask{1} << i;
      if (ClassicallySatisfiable(clauses, both, all)) {
        return static_cast<std::size_t>(k);
      }
    } while (NextCombination(combo, n));
  }
  return static_cast<std::size_t>(n);  // unreachable: all-b satisfies
}

Rational IDrastic(const RuleBase& base, const Limits& limits) {
  return kDrastic.Evaluate(base, limits);
}
Rational IMI(const RuleBase& base, const Limits& limits) {
  return kMI.Evaluate(base, limits);
}
Rational IProblematic(const RuleBase& base, const Limits& limits) {
  return kProblematic.Evaluate(base, limits);
}
Rational IContension(const RuleBase& base, const Limits& limits) {
  return kContension.Evaluate(base, limits);
}
Rational IRbDrastic(const RuleBase& base, const Limits& limits) {
  return kRbDrastic.Evaluate(base, limits);
}
Rational IRbMI(const RuleBase& base, const Limits& limits) {
  return kRbMI.Evaluate(base, limits);
}
Rational IRbProblematic(const RuleBase& base, const Limits& limits) {
  return kRbProblematic.Evaluate(base, limits);
}
Rational IRbContension(const RuleBase& base, const Limits& limits) {
  return kRbContension.Evaluate(base, limits);
}

const InconsistencyMeasure& MeasureByName(std::string_view name) {
  for (const InconsistencyMeasure* m : kAll) {
    if (m->name() == name) return *m;
  }
  throw UnknownMeasure("unknown measure '" + std::string(name) + "'");
}

std::span<const InconsistencyMeasure* const> AllMeasures() { return kAll; }

std::span<const InconsistencyMeasure* const> ClassicalMeasures() {
  return std::span<const InconsistencyMeasure* const>(kAll).first(4);
}

std::span<const InconsistencyMeasure* const> RuleBasedMeasures() {
  return std::span<const InconsistencyMeasure* const>(kAll).last(4);
}

std::vector<std::string> MeasureNames() {
  std::vector<std::string> names;
  for (const InconsistencyMeasure* m : kAll) names.emplace_back(m->name());
  return names;
}

MeasureReport MeasureAll(const RuleBase& base, const Limits& limits) {
  IndexedBase indexed(base, limits);
  MeasureReport report;
  for (const InconsistencyMeasure* m : kAll) {
    report.values.emplace(std::string(m->name()),
                          m->EvaluateSubset(indexed, indexed.full_mask()));
  }
  report.mi = ToMISet(indexed, indexed.MinimalInconsistent());
  report.mi_without_facts =
      ToMISet(indexed, indexed.MinimalInconsistentWithoutFacts());
  return report;
}

}  // namespace rbim
