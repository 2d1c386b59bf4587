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

// Text format for rule bases.
//
//   file      := (statement | comment | blank)*
//   comment   := "#" any-to-end-of-line
//   statement := fact | rule
//   fact      := literal "."
//   rule      := literal ("," literal)* "->" literal "."
//   literal   := "!"? identifier
//
// Whitespace between tokens is insignificant.

#ifndef RBIM_PARSER_H_
#define RBIM_PARSER_H_

#include <string>
#include <string_view>

#include "rbim/rule_base.h"

namespace rbim {

// Throws ParseError on the first grammar violation. Repeated statements are
// merged; empty input yields the empty rule base.
RuleBase ParseRuleBase(std::string_view text);

// Canonical rendering, one statement per line, facts first. Round-trips
// through ParseRuleBase.
std::string FormatRuleBase(const RuleBase& base);

Rule ParseRule(std::string_view text);

}  // namespace rbim

#endif  // RBIM_PARSER_H_
