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
#include "test_util.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rbim/parser.h"

namespace rbim {

void PrintTo(const Rule& rule, std::ostream* os) { *os << rule.ToString(); }

void PrintTo(const RuleBase& base, std::ostream* os) {
  *os << "{";
  for (std::size_t i = 0; i < base.size(); ++i) {
    *os << (i ? " " : "") << base.rules()[i].ToString();
  }
  *os << "}";
}

}  // namespace rbim

namespace rbim::testing {

std::string FixturePath(std::string_view name) {
  return std::string(RBIM_TEST_FIXTURE_DIR) + "/" + std::string(name) +
         ".rules";
}

RuleBase LoadFixture(std::string_view name) {
  std::ifstream in(FixturePath(name));
  if (!in) throw std::runtime_error("missing fixture " + FixturePath(name));
  std::stringstream text;
  text << in.rdbuf();
  return ParseRuleBase(text.str());
}

RuleBase Base(std::string_view text) { return ParseRuleBase(text); }

Rule R(std::string_view text) { return ParseRule(text); }

Rational Q(long long numerator, long long denominator) {
  return Rational(numerator, denominator);
}

GeneratorConfig SmallConfig(std::uint64_t seed) {
  GeneratorConfig config;
  config.seed = seed;
  return config;
}

}  // namespace rbim::testing
