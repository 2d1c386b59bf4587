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

#ifndef RBIM_SEMANTICS_H_
#define RBIM_SEMANTICS_H_

#include <map>
#include <set>
#include <span>
#include <string>

#include "rbim/rule_base.h"

namespace rbim {

using LiteralSet = std::set<Literal>;

// True iff no atom occurs both positively and negatively.
bool IsConsistent(const LiteralSet& literals);

// Least set of literals closed under the rules of the base, computed by
// forward chaining from the facts.
LiteralSet MinimalModel(const RuleBase& base);
LiteralSet MinimalModel(std::span<const Rule> rules);

// A base is consistent iff its minimal model is.
bool IsConsistent(const RuleBase& base);
bool IsConsistent(std::span<const Rule> rules);

// Paraconsistent truth values under the truth order f < b < t.
enum class TruthValue { kFalse = 0, kBoth = 1, kTrue = 2 };

// Swaps t and f, fixes b.
TruthValue Negate(TruthValue value);
char TruthValueSymbol(TruthValue value);

// A total map from a fixed signature to {t, f, b}.
class ThreeValuedInterpretation {
 public:
  ThreeValuedInterpretation() = default;
  // Every atom of the signature starts out as t.
  explicit ThreeValuedInterpretation(std::span<const Atom> signature);

  const std::map<Atom, TruthValue>& assignment() const { return assignment_; }

  // Throws UnknownAtom for atoms outside the signature.
  void Set(const Atom& atom, TruthValue value);
  TruthValue Get(const Atom& atom) const;
  TruthValue Get(const Literal& literal) const;

  // |v^-1(b)|
  std::size_t CountBoth() const;

 private:
  std::map<Atom, TruthValue> assignment_;
};

// A fact evaluates as its head; a rule l1,...,lm -> l0 as the disjunction
// !l1 | ... | !lm | l0, i.e. the maximum under the truth order.
TruthValue Eval3(const ThreeValuedInterpretation& v, const Rule& rule);

// v satisfies a rule iff it evaluates to t or b.
bool Satisfies3(const ThreeValuedInterpretation& v, std::span<const Rule> rules);
bool Satisfies3(const ThreeValuedInterpretation& v, const RuleBase& base);

}  // namespace rbim

#endif  // RBIM_SEMANTICS_H_
