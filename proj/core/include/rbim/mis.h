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

// Minimal inconsistent subsets, the fact-filtered family and free formulas.

#ifndef RBIM_MIS_H_
#define RBIM_MIS_H_

#include <span>
#include <vector>

#include "rbim/indexed_base.h"
#include "rbim/limits.h"
#include "rbim/rule_base.h"

namespace rbim {

// A family of sub-bases, ascending by cardinality, then canonical order.
using MISet = std::vector<RuleBase>;

// Sub-bases of indexed selected by masks, in MISet order.
MISet ToMISet(const IndexedBase& indexed, std::span<const ElementMask> masks);

// Throws SizeLimitExceeded when the base exceeds limits.max_subset_elements.
MISet EnumerateMI(const RuleBase& base, const Limits& limits = {});

// MI with every pure fact set {a, !a} removed.
MISet EnumerateMIWithoutFacts(const RuleBase& base, const Limits& limits = {});

// True iff the set holds the facts a and !a for some atom a.
bool IsPureFactSet(std::span<const Rule> elements);
bool IsPureFactSet(const RuleBase& elements);

// Elements of the base that lie in no member of MI(base).
std::vector<Rule> FreeFormulas(const RuleBase& base, const Limits& limits = {});

}  // namespace rbim

#endif  // RBIM_MIS_H_
