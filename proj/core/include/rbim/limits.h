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
#ifndef RBIM_LIMITS_H_
#define RBIM_LIMITS_H_

#include <cstddef>

namespace rbim {

// Guards for the exponential searches. Raising them is allowed but the cost
// grows as 2^elements (subset sweeps) and 3^atoms (contension search).
struct Limits {
  // Largest rule base for which subsets are enumerated.
  std::size_t max_subset_elements = 22;
  // Largest atom count searched by the contension measures.
  std::size_t max_contension_atoms = 14;
};

// Subset masks are 32-bit; this caps max_subset_elements.
inline constexpr std::size_t kMaxSubsetElementsHardCap = 30;

}  // namespace rbim

#endif  // RBIM_LIMITS_H_
