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
// Shared helpers for the rbim test binaries.

#ifndef RBIM_TESTS_TEST_UTIL_H_
#define RBIM_TESTS_TEST_UTIL_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rbim/generator.h"
#include "rbim/rational.h"
#include "rbim/rule_base.h"

namespace rbim {

// Readable gtest output for rule and base mismatches.
void PrintTo(const Rule& rule, std::ostream* os);
void PrintTo(const RuleBase& base, std::ostream* os);

}  // namespace rbim

namespace rbim::testing {

std::string FixturePath(std::string_view name);
// Parses tests/fixtures/<name>.rules.
RuleBase LoadFixture(std::string_view name);

RuleBase Base(std::string_view text);
Rule R(std::string_view text);
Rational Q(long long numerator, long long denominator = 1);

// The small shape used by the oracle and property suites.
GeneratorConfig SmallConfig(std::uint64_t seed);

}  // namespace rbim::testing

#endif  // RBIM_TESTS_TEST_UTIL_H_
