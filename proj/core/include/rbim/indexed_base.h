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

// Bitmask view of a rule base. Element i of the base (in canonical order) is
// bit i of an ElementMask, so subsets and coalitions are plain integers. All
// subset-sweeping algorithms (MI enumeration, measures on sub-bases, Shapley
// coalition sweeps) work on this representation.

#ifndef RBIM_INDEXED_BASE_H_
#define RBIM_INDEXED_BASE_H_

#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "rbim/limits.h"
#include "rbim/rule_base.h"

namespace rbim {

using ElementMask = std::uint32_t;

inline int PopCount(ElementMask mask) { return __builtin_popcount(mask); }
inline bool IsSubmask(ElementMask sub, ElementMask super) {
  return (sub & ~super) == 0;
}

class IndexedBase {
 public:
  // Throws SizeLimitExceeded if the base has more elements than
  // limits.max_subset_elements (or the hard cap).
  explicit IndexedBase(RuleBase base, const Limits& limits = {});

  IndexedBase(const IndexedBase&) = delete;
  IndexedBase& operator=(const IndexedBase&) = delete;

  const RuleBase& base() const { return base_; }
  const Limits& limits() const { return limits_; }
  std::size_t size() const { return base_.size(); }
  const Rule& element(std::size_t i) const { return base_.rules()[i]; }

  ElementMask full_mask() const { return full_mask_; }
  ElementMask fact_mask() const { return fact_mask_; }
  ElementMask rule_mask() const { return full_mask_ & ~fact_mask_; }
  static ElementMask Bit(std::size_t i) { return ElementMask{1} << i; }

  // Throws ElementNotInBase.
  std::size_t IndexOf(const Rule& rule) const;
  ElementMask MaskOf(const RuleBase& subset) const;
  RuleBase Subset(ElementMask mask) const;
  std::vector<Rule> Elements(ElementMask mask) const;

  // Consistency of the sub-base selected by mask, by forward chaining.
  bool IsConsistent(ElementMask mask) const;

  // MI of the whole base, ascending by cardinality then by mask value.
  // Computed once on first use; safe to call from several threads.
  const std::vector<ElementMask>& MinimalInconsistent() const;
  // MI of the whole base without pure fact sets.
  const std::vector<ElementMask>& MinimalInconsistentWithoutFacts() const;

  // MI of a sub-base: exactly the members of MI(base) contained in it.
  std::vector<ElementMask> MinimalInconsistentWithin(ElementMask mask) const;
  std::vector<ElementMask> MinimalInconsistentWithoutFactsWithin(
      ElementMask mask) const;

  // Union of the MI (resp. MI without pure fact sets) members inside mask.
  ElementMask ProblematicWithin(ElementMask mask) const;
  ElementMask ProblematicWithoutFactsWithin(ElementMask mask) const;

  // True iff mask holds two complementary facts.
  bool IsPureFactSet(ElementMask mask) const;

 private:
  void EnsureMinimalInconsistent() const;

  RuleBase base_;
  Limits limits_;
  ElementMask full_mask_ = 0;
  ElementMask fact_mask_ = 0;
  std::size_t literal_count_ = 0;
  // Literal code = 2 * atom index + (positive ? 1 : 0).
  std::vector<int> head_code_;
  std::vector<std::vector<int>> body_codes_;
  std::vector<std::vector<int>> watchers_;  // literal code -> elements

  mutable std::once_flag mi_once_;
  mutable std::vector<ElementMask> mi_;
  mutable std::vector<ElementMask> mi_without_facts_;
};

}  // namespace rbim

#endif  // RBIM_INDEXED_BASE_H_
