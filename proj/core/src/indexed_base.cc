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
#include "rbim/indexed_base.h"

#include <algorithm>
#include <map>
#include <string>

#include "rbim/errors.h"

namespace rbim {

namespace {

// Next mask with the same popcount (Gosper's hack).
ElementMask NextSamePopCount(ElementMask v) {
  const ElementMask t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (__builtin_ctz(v) + 1));
}

}  // namespace

IndexedBase::IndexedBase(RuleBase base, const Limits& limits)
    : base_(std::move(base)), limits_(limits) {
  const std::size_t cap =
      std::min(limits_.max_subset_elements, kMaxSubsetElementsHardCap);
  if (base_.size() > cap) {
    throw SizeLimitExceeded("rule base has " + std::to_string(base_.size()) +
                            " elements; subset enumeration is limited to " +
                            std::to_string(cap));
  }
  const auto& signature = base_.signature();
  std::map<Atom, int> atom_index;
  for (std::size_t i = 0; i < signature.size(); ++i) {
    atom_index.emplace(signature[i], static_cast<int>(i));
  }
  auto code = [&](const Literal& l) {
    return 2 * atom_index.at(l.atom()) + (l.positive() ? 1 : 0);
  };
  literal_count_ = 2 * signature.size();
  watchers_.resize(literal_count_);
  head_code_.reserve(base_.size());
  body_codes_.reserve(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) {
    const Rule& r = base_.rules()[i];
    full_mask_ |= Bit(i);
    if (r.IsFact()) fact_mask_ |= Bit(i);
    head_code_.push_back(code(r.head()));
    std::vector<int> body;
    for (const Literal& l : r.body()) {
      body.push_back(code(l));
      watchers_[body.back()].push_back(static_cast<int>(i));
    }
    body_codes_.push_back(std::move(body));
  }
}

std::size_t IndexedBase::IndexOf(const Rule& rule) const {
  auto index = base_.IndexOf(rule);
  if (!index) {
    throw ElementNotInBase("'" + rule.ToString() + "' is not in the rule base");
  }
  return *index;
}

ElementMask IndexedBase::MaskOf(const RuleBase& subset) const {
  ElementMask mask = 0;
  for (const Rule& r : subset) mask |= Bit(IndexOf(r));
  return mask;
}

std::vector<Rule> IndexedBase::Elements(ElementMask mask) const {
  std::vector<Rule> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (mask & Bit(i)) out.push_back(element(i));
  }
  return out;
}

RuleBase IndexedBase::Subset(ElementMask mask) const {
  return RuleBase(Elements(mask));
}

bool IndexedBase::IsConsistent(ElementMask mask) const {
  std::vector<char> derived(literal_count_, 0);
  std::vector<int> missing(size(), 0);
  std::vector<int> worklist;
  worklist.reserve(literal_count_);
  auto derive = [&](int literal) {
    if (derived[literal]) return true;
    if (derived[literal ^ 1]) return false;
    derived[literal] = 1;
    worklist.push_back(literal);
    return true;
  };
  for (std::size_t i = 0; i < size(); ++i) {
    if (!(mask & Bit(i))) continue;
    missing[i] = static_cast<int>(body_codes_[i].size());
    if (missing[i] == 0 && !derive(head_code_[i])) return false;
  }
  while (!worklist.empty()) {
    const int literal = worklist.back();
    worklist.pop_back();
    for (int i : watchers_[literal]) {
      if (!(mask & Bit(i))) continue;
      if (--missing[i] == 0 && !derive(head_code_[i])) return false;
    }
  }
  return true;
}

bool IndexedBase::IsPureFactSet(ElementMask mask) const {
  std::vector<char> seen(literal_count_, 0);
  for (std::size_t i = 0; i < size(); ++i) {
    if (!(mask & fact_mask_ & Bit(i))) continue;
    if (seen[head_code_[i] ^ 1]) return true;
    seen[head_code_[i]] = 1;
  }
  return false;
}

void IndexedBase::EnsureMinimalInconsistent() const {
  std::call_once(mi_once_, [this] {
    // Ascending cardinality. A subset that contains no member found so far
    // has only consistent proper subsets, so if it is inconsistent it is
    // minimal.
    const std::size_t n = size();
    for (std::size_t k = 1; k <= n; ++k) {
      ElementMask mask = (k == 32) ? ~ElementMask{0} : (Bit(k) - 1);
      while (true) {
        const bool pruned =
            std::any_of(mi_.begin(), mi_.end(),
                        [mask](ElementMask m) { return IsSubmask(m, mask); });
        if (!pruned && !IsConsistent(mask)) mi_.push_back(mask);
        if (k == n) break;
        const ElementMask next = NextSamePopCount(mask);
        if (next > full_mask_) break;
        mask = next;
      }
    }
    for (ElementMask m : mi_) {
      if (!IsPureFactSet(m)) mi_without_facts_.push_back(m);
    }
  });
}

const std::vector<ElementMask>& IndexedBase::MinimalInconsistent() const {
  EnsureMinimalInconsistent();
  return mi_;
}

const std::vector<ElementMask>& IndexedBase::MinimalInconsistentWithoutFacts()
    const {
  EnsureMinimalInconsistent();
  return mi_without_facts_;
}

namespace {

std::vector<ElementMask> Within(const std::vector<ElementMask>& family,
                                ElementMask mask) {
  std::vector<ElementMask> out;
  for (ElementMask m : family) {
    if (IsSubmask(m, mask)) out.push_back(m);
  }
  return out;
}

ElementMask UnionWithin(const std::vector<ElementMask>& family,
                        ElementMask mask) {
  ElementMask out = 0;
  for (ElementMask m : family) {
    if (IsSubmask(m, mask)) out |= m;
  }
  return out;
}

}  // namespace

std::vector<ElementMask> IndexedBase::MinimalInconsistentWithin(
    ElementMask mask) const {
  return Within(MinimalInconsistent(), mask);
}

std::vector<ElementMask> IndexedBase::MinimalInconsistentWithoutFactsWithin(
    ElementMask mask) const {
  return Within(MinimalInconsistentWithoutFacts(), mask);
}

ElementMask IndexedBase::ProblematicWithin(ElementMask mask) const {
  return UnionWithin(MinimalInconsistent(), mask);
}

ElementMask IndexedBase::ProblematicWithoutFactsWithin(ElementMask mask) const {
  return UnionWithin(MinimalInconsistentWithoutFacts(), mask);
}

}  // namespace rbim
