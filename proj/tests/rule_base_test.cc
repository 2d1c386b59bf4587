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
#include "rbim/rule_base.h"

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "rbim/errors.h"
#include "rbim/generator.h"
#include "test_util.h"

namespace rbim {
namespace {

using ::rbim::testing::Base;
using ::rbim::testing::LoadFixture;
using ::rbim::testing::R;
using ::testing::ElementsAre;
using ::testing::IsEmpty;

TEST(AtomTest, RejectsNonIdentifiers) {
  EXPECT_NO_THROW(Atom("platinumCustomer"));
  EXPECT_NO_THROW(Atom("_x9"));
  EXPECT_THROW(Atom(""), InvalidAtom);
  EXPECT_THROW(Atom("9lives"), InvalidAtom);
  EXPECT_THROW(Atom("a-b"), InvalidAtom);
}

TEST(LiteralTest, ParseComplementAndOrder) {
  const Literal a = Literal::Parse("a");
  const Literal not_a = Literal::Parse("!a");
  EXPECT_TRUE(a.positive());
  EXPECT_FALSE(not_a.positive());
  EXPECT_EQ(a.Complement(), not_a);
  EXPECT_EQ(not_a.ToString(), "!a");
  EXPECT_LT(not_a, a);
  EXPECT_LT(a, Literal::Negative("b"));
}

TEST(RuleTest, BodyIsASet) {
  const Rule r({Literal::Positive("b"), Literal::Positive("a"),
                Literal::Positive("b")},
               Literal::Negative("c"));
  EXPECT_THAT(r.body(), ElementsAre(Literal::Positive("a"),
                                    Literal::Positive("b")));
  EXPECT_EQ(r.ToString(), "a, b -> !c.");
  EXPECT_FALSE(r.IsFact());
  EXPECT_TRUE(Rule::Fact(Literal::Positive("a")).IsFact());
}

TEST(RuleTest, AtomsAreSortedAndUnique) {
  EXPECT_THAT(R("b, !a -> !b.").Atoms(), ElementsAre(Atom("a"), Atom("b")));
}

TEST(RuleBaseTest, CanonicalOrderPutsFactsFirst) {
  const RuleBase b = Base("a -> b. !b. a.");
  EXPECT_THAT(b.rules(), ElementsAre(R("a."), R("!b."), R("a -> b.")));
  EXPECT_THAT(b.signature(), ElementsAre(Atom("a"), Atom("b")));
}

TEST(RuleBaseTest, DuplicatesCollapse) {
  EXPECT_EQ(Base("a. a. a -> b. a->b.").size(), 2u);
}

TEST(RuleBaseTest, FactsAndRulesPartitionB5) {
  const RuleBase b5 = LoadFixture("b5");
  EXPECT_THAT(Facts(b5), ElementsAre(R("a."), R("!b.")));
  EXPECT_THAT(RulesOnly(b5), ElementsAre(R("a -> b.")));
}

TEST(RuleBaseTest, FactsOfB1) {
  EXPECT_THAT(Facts(LoadFixture("b1")),
              ElementsAre(R("mentalCondition."), R("platinumCustomer.")));
}

TEST(RuleBaseTest, EmptyBase) {
  const RuleBase empty;
  EXPECT_TRUE(empty.empty());
  EXPECT_THAT(Facts(empty), IsEmpty());
  EXPECT_THAT(RulesOnly(empty), IsEmpty());
}

TEST(RuleBaseTest, SetOperations) {
  const RuleBase b3 = LoadFixture("b3");
  const RuleBase b4 = LoadFixture("b4");
  EXPECT_TRUE(b3.IsSubsetOf(b4));
  EXPECT_FALSE(b4.IsSubsetOf(b3));
  EXPECT_EQ(b3.With(R("c.")).With(R("!c.")), b4);
  EXPECT_EQ(b4.Without(R("c.")).Without(R("!c.")), b3);
  EXPECT_EQ(b3.Union(Base("c. !c.")), b4);
  EXPECT_EQ(b3.IndexOf(R("a.")), 0u);
  EXPECT_FALSE(b3.IndexOf(R("c.")).has_value());
  EXPECT_TRUE(b3.Contains(R("a -> !b.")));
}

TEST(RuleBaseTest, FactsAndRulesPartitionGeneratedBases) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const RuleBase b = GenerateRuleBase(testing::SmallConfig(seed));
    const auto facts = Facts(b);
    const auto rules = RulesOnly(b);
    EXPECT_EQ(facts.size() + rules.size(), b.size());
    std::vector<Rule> joined = facts;
    joined.insert(joined.end(), rules.begin(), rules.end());
    EXPECT_EQ(RuleBase(joined), b) << "seed " << seed;
  }
}

}  // namespace
}  // namespace rbim
