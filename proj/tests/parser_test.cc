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
#include "rbim/parser.h"

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "rbim/errors.h"
#include "rbim/generator.h"
#include "test_util.h"

namespace rbim {
namespace {

using ::rbim::testing::LoadFixture;
using ::rbim::testing::R;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

TEST(ParserTest, FactsOnly) {
  const RuleBase b = ParseRuleBase("a. !a.");
  EXPECT_THAT(b.rules(), ElementsAre(Rule::Fact(Literal::Negative("a")),
                                     Rule::Fact(Literal::Positive("a"))));
}

TEST(ParserTest, RulesWithCommentsAndWhitespace) {
  const RuleBase b = ParseRuleBase(
      "# header\n"
      "  a ,!b->c .\r\n"
      "\n"
      "d.   # trailing\n");
  EXPECT_THAT(b.rules(), ElementsAre(R("d."), R("a, !b -> c.")));
}

TEST(ParserTest, EmptyInput) {
  EXPECT_TRUE(ParseRuleBase("").empty());
  EXPECT_TRUE(ParseRuleBase("# nothing\n\n").empty());
}

TEST(ParserTest, MissingPeriodReportsPosition) {
  try {
    ParseRuleBase("a.\nb -> c");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 7u);
    EXPECT_THAT(e.detail(), HasSubstr("expected '.'"));
  }
}

TEST(ParserTest, RejectsMalformedStatements) {
  EXPECT_THROW(ParseRuleBase("-> a."), ParseError);
  EXPECT_THROW(ParseRuleBase("a - b."), ParseError);
  EXPECT_THROW(ParseRuleBase("a, -> b."), ParseError);
  EXPECT_THROW(ParseRuleBase("!!a."), ParseError);
  EXPECT_THROW(ParseRuleBase("a -> b, c."), ParseError);
  EXPECT_THROW(ParseRuleBase("a @ b."), ParseError);
}

TEST(ParserTest, FormatIsCanonical) {
  EXPECT_EQ(FormatRuleBase(ParseRuleBase("a. !a.")), "!a.\na.\n");
  EXPECT_EQ(FormatRuleBase(LoadFixture("b5")), "a.\n!b.\na -> b.\n");
}

TEST(ParserTest, ParseRuleSingleStatement) {
  EXPECT_EQ(ParseRule("a, b -> !c."),
            Rule({Literal::Positive("a"), Literal::Positive("b")},
                 Literal::Negative("c")));
  EXPECT_THROW(ParseRule("a. b."), ParseError);
}

TEST(ParserTest, RoundTripFixtures) {
  for (const char* name : {"b1", "b1prime", "b2", "b3", "b4", "b5", "b6",
                           "b7"}) {
    const RuleBase b = LoadFixture(name);
    EXPECT_EQ(ParseRuleBase(FormatRuleBase(b)), b) << name;
  }
}

TEST(ParserTest, RoundTripGeneratedBases) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GeneratorConfig config = testing::SmallConfig(seed);
    config.atom_count = 30;
    config.max_body_size = 3;
    const RuleBase b = GenerateRuleBase(config);
    EXPECT_EQ(ParseRuleBase(FormatRuleBase(b)), b) << "seed " << seed;
  }
}

}  // namespace
}  // namespace rbim
