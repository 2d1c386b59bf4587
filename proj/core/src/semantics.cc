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
#include "rbim/semantics.h"

#include <algorithm>
#include <deque>

#include "rbim/errors.h"

namespace rbim {

bool IsConsistent(const LiteralSet& literals) {
  // Negative sorts directly before positive for the same atom.
  const Literal* previous = nullptr;
  for (const Literal& l : literals) {
    if (previous != nullptr && previous->atom() == l.atom()) return false;
    previous = &l;
  }
  return true;
}

LiteralSet MinimalModel(std::span<const Rule> rules) {
  // Worklist forward chaining: each rule keeps a count of body literals not
  // yet derived and fires when it reaches zero.
  std::map<Literal, std::vector<std::size_t>> watchers;
  std::vector<std::size_t> missing(rules.size());
  std::deque<Literal> pending;
  LiteralSet model;
  auto derive = [&](const Literal& l) {
    if (model.insert(l).second) pending.push_back(l);
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    missing[i] = rules[i].body().size();
    for (const Literal& l : rules[i].body()) watchers[l].push_back(i);
    if (missing[i] == 0) derive(rules[i].head());
  }
  while (!pending.empty()) {
    const Literal l = pending.front();
    pending.pop_front();
    auto it = watchers.find(l);
    if (it == watchers.end()) continue;
    for (std::size_t i : it->second) {
      if (--missing[i] == 0) derive(rules[i].head());
    }
  }
  return model;
}

LiteralSet MinimalModel(const RuleBase& base) {
  return MinimalModel(std::span<const Rule>(base.rules()));
}

bool IsConsistent(std::span<const Rule> rules) {
  return IsConsistent(MinimalModel(rules));
}

bool IsConsistent(const RuleBase& base) {
  return IsConsistent(MinimalModel(base));
}

TruthValue Negate(TruthValue value) {
  switch (value) {
    case TruthValue::kTrue:
      return TruthValue::kFalse;
    case TruthValue::kFalse:
      return TruthValue::kTrue;
    case TruthValue::kBoth:
      return TruthValue::kBoth;
  }
  return value;
}

char TruthValueSymbol(TruthValue value) {
  switch (value) {
    case TruthValue::kTrue:
      return 't';
    case TruthValue::kFalse:
      return 'f';
    case TruthValue::kBoth:
      return 'b';
  }
  return '?';
}

ThreeValuedInterpretation::ThreeValuedInterpretation(
    std::span<const Atom> signature) {
  for (const Atom& a : signature) assignment_.emplace(a, TruthValue::kTrue);
}

void ThreeValuedInterpretation::Set(const Atom& atom, TruthValue value) {
  auto it = assignment_.find(atom);
  if (it == assignment_.end()) {
    throw UnknownAtom("atom '" + atom.name() + "' is not in the signature");
  }
  it->second = value;
}

TruthValue ThreeValuedInterpretation::Get(const Atom& atom) const {
  auto it = assignment_.find(atom);
  if (it == assignment_.end()) {
    throw UnknownAtom("atom '" + atom.name() + "' is not in the signature");
  }
  return it->second;
}

TruthValue ThreeValuedInterpretation::Get(const Literal& literal) const {
  const TruthValue v = Get(literal.atom());
  return literal.positive() ? v : Negate(v);
}

std::size_t ThreeValuedInterpretation::CountBoth() const {
  return std::count_if(assignment_.begin(), assignment_.end(), [](auto& kv) {
    return kv.second == TruthValue::kBoth;
  });
}

TruthValue Eval3(const ThreeValuedInterpretation& v, const Rule& rule) {
  TruthValue result = v.Get(rule.head());
  for (const Literal& l : rule.body()) {
    result = std::max(result, Negate(v.Get(l)));
  }
  return result;
}

bool Satisfies3(const ThreeValuedInterpretation& v,
                std::span<const Rule> rules) {
  return std::all_of(rules.begin(), rules.end(), [&](const Rule& r) {
    return Eval3(v, r) != TruthValue::kFalse;
  });
}

bool Satisfies3(const ThreeValuedInterpretation& v, const RuleBase& base) {
  return Satisfies3(v, std::span<const Rule>(base.rules()));
}

}  // namespace rbim
