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
#include "rbim/mis.h"

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "rbim/errors.h"
#include "rbim/generator.h"
#include "rbim/indexed_base.h"
#include "rbim/semantics.h"
#include "test_util.h"

namespace rbim {
namespace {

using ::rbim::testing::Base;
using ::rbim::testing::LoadFixture;
using ::rbim::testing::R;
using ::testing::ElementsAre;
using ::testing::IsEmpty;
using ::testing::UnorderedElementsAreArray;

std::set<std::vector<Rule>> AsSet(const MISet& family) {
  std::set<std::vector<Rule>> out;
  for (const RuleBase& m : family) out.insert(m.rules());
  return out;
}

TEST(EnumerateMITest, B2) {
  EXPECT_THAT(EnumerateMI(LoadFixture("b2")), ElementsAre(Base("a. !a.")));
  EXPECT_THAT(EnumerateMIWithoutFacts(LoadFixture("b2")), IsEmpty());
}

TEST(EnumerateMITest, B3AndB4) {
  const RuleBase b3 = LoadFixture("b3");
  EXPECT_THAT(EnumerateMIWithoutFacts(b3), ElementsAre(b3));
  EXPECT_THAT(EnumerateMI(LoadFixture("b4")),
              ElementsAre(Base("c. !c."), b3));
  EXPECT_THAT(EnumerateMIWithoutFacts(LoadFixture("b4")), ElementsAre(b3));
}

TEST(EnumerateMITest, B1IsOneFourElementSet) {
  const RuleBase b1 = LoadFixture("b1");
  EXPECT_THAT(EnumerateMI(b1), ElementsAre(b1));
}

TEST(EnumerateMITest, B1Prime) {
  EXPECT_THAT(
      EnumerateMI(LoadFixture("b1prime")),
      ElementsAre(
          Base("platinumCustomer. mentalCondition. "
               "mentalCondition -> !platinumCustomer."),
          Base("customer. mentalCondition. customer -> contractuallyCapable. "
               "mentalCondition -> !contractuallyCapable.")));
}

TEST(EnumerateMITest, ConsistentAndEmptyBases) {
  EXPECT_THAT(EnumerateMI(LoadFixture("b6")), IsEmpty());
  EXPECT_THAT(EnumerateMI(RuleBase()), IsEmpty());
}

TEST(EnumerateMITest, SizeLimit) {
  Limits limits;
  limits.max_subset_elements = 3;
  EXPECT_THROW(EnumerateMI(LoadFixture("b4"), limits), SizeLimitExceeded);
  EXPECT_NO_THROW(EnumerateMI(LoadFixture("b3"), limits));
  limits.max_subset_elements = 1000;
  GeneratorConfig big;
  big.atom_count = 12;
  big.fact_count = 10;
  big.rule_count = 21;
  EXPECT_THROW(EnumerateMI(GenerateRuleBase(big), limits), SizeLimitExceeded);
}

TEST(IsPureFactSetTest, Examples) {
  EXPECT_TRUE(IsPureFactSet(Base("a. !a.")));
  EXPECT_FALSE(IsPureFactSet(LoadFixture("b5")));
  EXPECT_FALSE(IsPureFactSet(RuleBase()));
  EXPECT_FALSE(IsPureFactSet(Base("a. a -> !a.")));
}

TEST(FreeFormulasTest, Examples) {
  const RuleBase b6 = LoadFixture("b6");
  EXPECT_THAT(FreeFormulas(b6), ElementsAre(R("a."), R("d."), R("a -> b."),
                                            R("a -> c.")));
  EXPECT_THAT(FreeFormulas(LoadFixture("b4")), IsEmpty());
  EXPECT_THAT(FreeFormulas(LoadFixture("b1prime")), IsEmpty());
  EXPECT_THAT(FreeFormulas(Base("a. !a. b -> c.")), ElementsAre(R("b -> c.")));
}

TEST(IndexedBaseTest, WithinFiltersByContainment) {
  IndexedBase indexed(LoadFixture("b4"));
  const ElementMask b3 = indexed.MaskOf(LoadFixture("b3"));
  ASSERT_EQ(indexed.MinimalInconsistent().size(), 2u);
  EXPECT_THAT(indexed.MinimalInconsistentWithin(b3), ElementsAre(b3));
  EXPECT_EQ(indexed.ProblematicWithin(indexed.full_mask()),
            indexed.full_mask());
  EXPECT_EQ(indexed.ProblematicWithoutFactsWithin(indexed.full_mask()), b3);
  EXPECT_THROW(indexed.IndexOf(R("z.")), ElementNotInBase);
}

class GeneratedMITest : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(GeneratedMITest, MatchesOracleAndInvariants) {
  GeneratorConfig config = testing::SmallConfig(GetParam());
  config.fact_count = 3 + GetParam() % 2;
  config.rule_count = 4;
  const RuleBase b = GenerateRuleBase(config);
  const MISet mi = EnumerateMI(b);
  EXPECT_THAT(AsSet(mi), UnorderedElementsAreArray(oracle::MinimalInconsistent(b)));
  EXPECT_THAT(AsSet(EnumerateMIWithoutFacts(b)),
              UnorderedElementsAreArray(
                  oracle::MinimalInconsistentWithoutFacts(b)));
  for (std::size_t i = 0; i < mi.size(); ++i) {
    EXPECT_FALSE(IsConsistent(mi[i]));
    for (const Rule& x : mi[i]) EXPECT_TRUE(IsConsistent(mi[i].Without(x)));
    for (std::size_t j = 0; j < mi.size(); ++j) {
      if (i != j) EXPECT_FALSE(mi[i].IsSubsetOf(mi[j]));
    }
    if (i > 0) EXPECT_LE(mi[i - 1].size(), mi[i].size());
  }
  for (const RuleBase& m : EnumerateMIWithoutFacts(b)) {
    EXPECT_NE(std::find(mi.begin(), mi.end(), m), mi.end());
  }
}

// Adding the complement of alpha as a fact only creates pure fact sets when
// the atom of alpha occurs in no rule.
TEST_P(GeneratedMITest, FactFilterIdentity) {
  const RuleBase b = GenerateRuleBase(testing::SmallConfig(GetParam()));
  for (const Atom& atom : b.signature()) {
    const bool in_rule = std::any_of(b.begin(), b.end(), [&](const Rule& r) {
      const auto atoms = r.Atoms();
      return !r.IsFact() &&
             std::find(atoms.begin(), atoms.end(), atom) != atoms.end();
    });
    if (in_rule) continue;
    for (bool positive : {false, true}) {
      const Rule added = Rule::Fact(Literal(atom, !positive));
      EXPECT_EQ(EnumerateMIWithoutFacts(b),
                EnumerateMIWithoutFacts(b.With(added)))
          << "seed " << GetParam() << " added " << added.ToString();
    }
  }
}

// With only "no rule concludes alpha" the identity fails: the added fact can
// fire a rule body.
TEST(FactFilterIdentityTest, HeadOnlyConditionIsNotEnough) {
  const RuleBase b = Base("!d. !c -> d.");
  EXPECT_THAT(EnumerateMIWithoutFacts(b), IsEmpty());
  EXPECT_THAT(EnumerateMIWithoutFacts(b.With(R("!c."))),
              ElementsAre(Base("!c. !d. !c -> d.")));
}

INSTANTIATE_TEST_SUITE_P(Seeds, GeneratedMITest, ::testing::Range<std::uint64_t>(0, 100));

}  // namespace
}  // namespace rbim
