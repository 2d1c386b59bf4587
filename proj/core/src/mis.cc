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
#include "rbim/mis.h"

#include <algorithm>
#include <set>

#include "rbim/indexed_base.h"

namespace rbim {

MISet ToMISet(const IndexedBase& indexed, std::span<const ElementMask> masks) {
  MISet family;
  family.reserve(masks.size());
  for (ElementMask m : masks) family.push_back(indexed.Subset(m));
  std::stable_sort(family.begin(), family.end(),
                   [](const RuleBase& a, const RuleBase& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return std::lexicographical_compare(
                         a.begin(), a.end(), b.begin(), b.end());
                   });
  return family;
}

MISet EnumerateMI(const RuleBase& base, const Limits& limits) {
  IndexedBase indexed(base, limits);
  return ToMISet(indexed, indexed.MinimalInconsistent());
}

MISet EnumerateMIWithoutFacts(const RuleBase& base, const Limits& limits) {
  IndexedBase indexed(base, limits);
  return ToMISet(indexed, indexed.MinimalInconsistentWithoutFacts());
}

bool IsPureFactSet(std::span<const Rule> elements) {
  std::set<Literal> facts;
  for (const Rule& r : elements) {
    if (r.IsFact()) facts.insert(r.head());
  }
  return std::any_of(facts.begin(), facts.end(), [&](const Literal& l) {
    return facts.contains(l.Complement());
  });
}

bool IsPureFactSet(const RuleBase& elements) {
  return IsPureFactSet(std::span<const Rule>(elements.rules()));
}

std::vector<Rule> FreeFormulas(const RuleBase& base, const Limits& limits) {
  IndexedBase indexed(base, limits);
  ElementMask involved = indexed.ProblematicWithin(indexed.full_mask());
  return indexed.Elements(indexed.full_mask() & ~involved);
}

}  // namespace rbim
