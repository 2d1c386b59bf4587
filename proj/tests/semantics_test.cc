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

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "rbim/errors.h"
#include "rbim/generator.h"
#include "test_util.h"

namespace rbim {
namespace {

using ::rbim::testing::Base;
using ::rbim::testing::LoadFixture;
using ::testing::UnorderedElementsAre;

Literal L(std::string_view text) { return Literal::Parse(text); }

TEST(MinimalModelTest, B3DerivesBothPolarities) {
  EXPECT_THAT(MinimalModel(LoadFixture("b3")),
              UnorderedElementsAre(L("a"), L("b"), L("!b")));
}

TEST(MinimalModelTest, B1ChainsTwoSteps) {
  EXPECT_THAT(MinimalModel(LoadFixture("b1")),
              UnorderedElementsAre(L("platinumCustomer"), L("mentalCondition"),
                                   L("creditWorthy"), L("!creditWorthy")));
}

TEST(MinimalModelTest, B6) {
  EXPECT_THAT(MinimalModel(LoadFixture("b6")),
              UnorderedElementsAre(L("a"), L("b"), L("c"), L("d")));
}

TEST(MinimalModelTest, RulesNeedEveryBodyLiteral) {
  EXPECT_THAT(MinimalModel(Base("a. a, b -> c. !b -> d.")),
              UnorderedElementsAre(L("a")));
  EXPECT_TRUE(MinimalModel(RuleBase()).empty());
}

TEST(ConsistencyTest, FixtureBases) {
  EXPECT_FALSE(IsConsistent(LoadFixture("b1")));
  EXPECT_FALSE(IsConsistent(LoadFixture("b2")));
  EXPECT_FALSE(IsConsistent(LoadFixture("b5")));
  EXPECT_TRUE(IsConsistent(LoadFixture("b6")));
  EXPECT_TRUE(IsConsistent(RuleBase()));
}

TEST(ConsistencyTest, LiteralSets) {
  EXPECT_TRUE(IsConsistent(LiteralSet{L("a"), L("!b")}));
  EXPECT_FALSE(IsConsistent(LiteralSet{L("!a"), L("a"), L("c")}));
}

TEST(MinimalModelTest, MatchesOracleAndIsMonotone) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GeneratorConfig config = testing::SmallConfig(seed);
    config.rule_count = 6;
    const RuleBase b = GenerateRuleBase(config);
    EXPECT_EQ(MinimalModel(b), oracle::MinimalModel(b.rules()))
        << "seed " << seed;
    const RuleBase bigger = b.With(Rule::Fact(L("a")));
    const LiteralSet small = MinimalModel(b);
    const LiteralSet large = MinimalModel(bigger);
    EXPECT_TRUE(std::includes(large.begin(), large.end(), small.begin(),
                              small.end()))
        << "seed " << seed;
  }
}

TEST(ThreeValuedTest, NegationSwapsTAndF) {
  EXPECT_EQ(Negate(TruthValue::kTrue), TruthValue::kFalse);
  EXPECT_EQ(Negate(TruthValue::kFalse), TruthValue::kTrue);
  EXPECT_EQ(Negate(TruthValue::kBoth), TruthValue::kBoth);
  EXPECT_EQ(TruthValueSymbol(TruthValue::kBoth), 'b');
}

TEST(ThreeValuedTest, RuleIsMaxOfNegatedBodyAndHead) {
  const RuleBase b = LoadFixture("b3");
  ThreeValuedInterpretation v(b.signature());
  EXPECT_EQ(v.CountBoth(), 0u);
  // a = t, b = t: a -> !b evaluates to f.
  EXPECT_EQ(Eval3(v, testing::R("a -> !b.")), TruthValue::kFalse);
  EXPECT_FALSE(Satisfies3(v, b));
  v.Set(Atom("b"), TruthValue::kBoth);
  EXPECT_EQ(Eval3(v, testing::R("a -> !b.")), TruthValue::kBoth);
  EXPECT_EQ(Eval3(v, testing::R("a -> b.")), TruthValue::kBoth);
  EXPECT_TRUE(Satisfies3(v, b));
  EXPECT_EQ(v.CountBoth(), 1u);
  v.Set(Atom("a"), TruthValue::kFalse);
  v.Set(Atom("b"), TruthValue::kTrue);
  EXPECT_EQ(Eval3(v, testing::R("a -> !b.")), TruthValue::kTrue);
}

TEST(ThreeValuedTest, UnknownAtomsThrow) {
  ThreeValuedInterpretation v(LoadFixture("b2").signature());
  EXPECT_THROW(v.Set(Atom("z"), TruthValue::kTrue), UnknownAtom);
  EXPECT_THROW(v.Get(Atom("z")), UnknownAtom);
}

}  // namespace
}  // namespace rbim
