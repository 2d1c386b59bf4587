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
#include "rbim/postulates.h"

#include <algorithm>
#include <set>
#include <string>

#include "rbim/errors.h"
#include "rbim/indexed_base.h"
#include "rbim/parser.h"
#include "rbim/semantics.h"
#include "rbim/shapley.h"

namespace rbim {

namespace {

constexpr std::string_view kFeHeadOnly = "FE(head-only)";
constexpr int kRuleDraws = 16;

std::string Show(const Rational& value) { return FormatFraction(value); }

PostulateCheck Make(std::string_view postulate,
                    const InconsistencyMeasure& measure, const RuleBase& base) {
  PostulateCheck check;
  check.postulate = std::string(postulate);
  check.measure = std::string(measure.name());
  check.base = base;
  return check;
}

Verdict Holds(bool condition) {
  return condition ? Verdict::kHolds : Verdict::kViolated;
}

bool IsFreeIn(const RuleBase& base, const Rule& element, const Limits& limits) {
  IndexedBase indexed(base, limits);
  const ElementMask bit = IndexedBase::Bit(indexed.IndexOf(element));
  return !(indexed.ProblematicWithin(indexed.full_mask()) & bit);
}

// An atom name outside the signature of base.
Atom FreshAtom(const RuleBase& base) {
  const auto& signature = base.signature();
  for (std::size_t i = 0;; ++i) {
    Atom candidate(GeneratedAtomName(i));
    if (!std::binary_search(signature.begin(), signature.end(), candidate)) {
      return candidate;
    }
  }
}

std::set<Atom> RuleAtoms(const RuleBase& base) {
  std::set<Atom> atoms;
  for (const Rule& r : base) {
    if (r.IsFact()) continue;
    for (const Atom& a : r.Atoms()) atoms.insert(a);
  }
  return atoms;
}

bool FePremiseHolds(const RuleBase& base, const Literal& alpha,
                    FactElisionPremise premise) {
  for (const Rule& r : base) {
    if (r.IsFact()) continue;
    if (premise == FactElisionPremise::kHeadOnly) {
      if (r.head() == alpha) return false;
    } else {
      const auto atoms = r.Atoms();
      if (std::find(atoms.begin(), atoms.end(), alpha.atom()) != atoms.end()) {
        return false;
      }
    }
  }
  return true;
}

// Deterministic free formula candidates: facts over the signature plus one
// fresh atom, then single-literal-body rules over the same atoms.
std::optional<Rule> ChooseFreeFormula(const RuleBase& base,
                                      const Limits& limits) {
  std::vector<Atom> atoms = base.signature();
  atoms.push_back(FreshAtom(base));
  std::vector<Rule> candidates;
  for (const Atom& a : atoms) {
    for (bool positive : {false, true}) {
      candidates.push_back(Rule::Fact(Literal(a, positive)));
    }
  }
  for (const Atom& b : atoms) {
    for (bool body_positive : {false, true}) {
      for (const Atom& h : atoms) {
        for (bool head_positive : {false, true}) {
          candidates.push_back(Rule({Literal(b, body_positive)},
                                    Literal(h, head_positive)));
        }
      }
    }
  }
  for (const Rule& c : candidates) {
    if (base.Contains(c)) continue;
    const RuleBase extended = base.With(c);
    if (extended.size() > std::min(limits.max_subset_elements,
                                   kMaxSubsetElementsHardCap)) {
      return std::nullopt;
    }
    if (IsFreeIn(extended, c, limits)) return c;
  }
  return std::nullopt;
}

}  // namespace

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kViolated:
      return "violated";
    case Verdict::kInapplicable:
      return "inapplicable";
  }
  return "unknown";
}

bool IsRuleConsistent(const RuleBase& base, const Limits& limits) {
  IndexedBase indexed(base, limits);
  const ElementMask facts = indexed.fact_mask();
  const ElementMask rules = indexed.rule_mask();
  // Consistency is monotone, so it suffices to check the maximal consistent
  // fact subsets; enumerating all consistent ones is simpler and equivalent.
  ElementMask subset = facts;
  while (true) {
    if (!indexed.IsPureFactSet(subset) &&
        !indexed.IsConsistent(rules | subset)) {
      return false;
    }
    if (subset == 0) return true;
    subset = (subset - 1) & facts;
  }
}

PostulateCheck CheckRC(const InconsistencyMeasure& measure,
                       const RuleBase& base, const Limits& limits) {
  PostulateCheck check = Make("RC", measure, base);
  const Rational value = measure.Evaluate(base, limits);
  const bool rule_consistent = IsRuleConsistent(base, limits);
  check.verdict = Holds((value == 0) == rule_consistent);
  check.detail = "I(B) = " + Show(value) + ", rule-consistent = " +
                 (rule_consistent ? "true" : "false");
  return check;
}

PostulateCheck CheckFE(const InconsistencyMeasure& measure,
                       const RuleBase& base, const Literal& alpha,
                       const Limits& limits, FactElisionPremise premise) {
  PostulateCheck check = Make(
      premise == FactElisionPremise::kHeadOnly ? kFeHeadOnly : "FE", measure,
      base);
  const Rule added = Rule::Fact(alpha.Complement());
  check.formula = added;
  if (!FePremiseHolds(base, alpha, premise)) {
    check.detail = "premise fails for alpha = " + alpha.ToString();
    return check;
  }
  const Rational before = measure.Evaluate(base, limits);
  const Rational after = measure.Evaluate(base.With(added), limits);
  check.verdict = Holds(before == after);
  check.detail = "alpha = " + alpha.ToString() + ", I(B) = " + Show(before) +
                 ", I(B + " + added.ToString() + ") = " + Show(after);
  return check;
}

PostulateCheck CheckRE(const InconsistencyMeasure& measure,
                       const RuleBase& base, const Rule& rule,
                       const Limits& limits) {
  PostulateCheck check = Make("RE", measure, base);
  check.formula = rule;
  if (rule.IsFact()) {
    check.detail = "'" + rule.ToString() + "' is a fact";
    return check;
  }
  if (base.Contains(rule)) {
    check.detail = "rule already in B";
    return check;
  }
  const RuleBase with_rule = base.With(rule);
  if (IsFreeIn(with_rule, rule, limits)) {
    check.detail = "rule is free in B + rule";
    return check;
  }
  const Rule head = Rule::Fact(rule.head());
  const Rational with_rule_value = measure.Evaluate(with_rule, limits);
  const Rational with_head_value = measure.Evaluate(base.With(head), limits);
  check.verdict = Holds(with_rule_value > with_head_value);
  check.detail = "I(B + " + rule.ToString() + ") = " + Show(with_rule_value) +
                 ", I(B + " + head.ToString() + ") = " + Show(with_head_value);
  return check;
}

PostulateCheck CheckCO(const InconsistencyMeasure& measure,
                       const RuleBase& base, const Limits& limits) {
  PostulateCheck check = Make("CO", measure, base);
  const Rational value = measure.Evaluate(base, limits);
  const bool consistent = IsConsistent(base);
  check.verdict = Holds((value == 0) == consistent);
  check.detail = "I(B) = " + Show(value) +
                 ", consistent = " + (consistent ? "true" : "false");
  return check;
}

PostulateCheck CheckMO(const InconsistencyMeasure& measure,
                       const RuleBase& base, const RuleBase& superset,
                       const Limits& limits) {
  PostulateCheck check = Make("MO", measure, base);
  check.other_base = superset;
  if (!base.IsSubsetOf(superset)) {
    check.detail = "B is not a subset of B'";
    return check;
  }
  const Rational small = measure.Evaluate(base, limits);
  const Rational large = measure.Evaluate(superset, limits);
  check.verdict = Holds(small <= large);
  check.detail = "I(B) = " + Show(small) + ", I(B') = " + Show(large);
  return check;
}

PostulateCheck CheckIN(const InconsistencyMeasure& measure,
                       const RuleBase& base, const Rule& alpha,
                       const Limits& limits) {
  PostulateCheck check = Make("IN", measure, base);
  check.formula = alpha;
  if (!base.Contains(alpha) || !IsFreeIn(base, alpha, limits)) {
    check.detail = "'" + alpha.ToString() + "' is not free in B";
    return check;
  }
  const Rational with = measure.Evaluate(base, limits);
  const Rational without = measure.Evaluate(base.Without(alpha), limits);
  check.verdict = Holds(with == without);
  check.detail = "I(B) = " + Show(with) + ", I(B - " + alpha.ToString() +
                 ") = " + Show(without);
  return check;
}

std::vector<PostulateCheck> CheckShapleyProperties(
    const InconsistencyMeasure& measure, const RuleBase& base,
    const std::optional<Rule>& free_formula, const Limits& limits) {
  const CoalitionGame game(measure, base, limits);
  const IndexedBase& indexed = game.indexed();
  const Rational value = game.Value(indexed.full_mask());
  const ShapleyVector classical = game.ShapleyValues();
  const ShapleyVector adjusted = game.AdjustedShapleyValues();
  const Rational max_adjusted = Max(adjusted);
  const ElementMask involved = indexed.ProblematicWithin(indexed.full_mask());

  std::vector<PostulateCheck> checks;
  auto add = [&](std::string_view name) -> PostulateCheck& {
    checks.push_back(Make(name, measure, base));
    return checks.back();
  };

  {
    PostulateCheck& c = add("Distribution");
    const Rational sum = Sum(classical);
    const Rational sum_adjusted = Sum(adjusted);
    c.verdict = Holds(sum == value && sum_adjusted == value);
    c.detail = "I(B) = " + Show(value) + ", sum S = " + Show(sum) +
               ", sum S* = " + Show(sum_adjusted);
  }
  {
    PostulateCheck& c = add("Minimality");
    bool applicable = true;
    bool ok = true;
    std::string failing;
    for (std::size_t i = 0; i < indexed.size(); ++i) {
      if (involved & IndexedBase::Bit(i)) continue;
      const Rule& alpha = indexed.element(i);
      if (CheckIN(measure, base, alpha, limits).verdict != Verdict::kHolds) {
        applicable = false;
        break;
      }
      if (classical[i].value != 0 || adjusted[i].value != 0) {
        ok = false;
        failing = alpha.ToString();
      }
    }
    if (!applicable) {
      c.detail = "measure violates IN on B";
    } else {
      c.verdict = Holds(ok);
      c.detail = ok ? "every free formula scores 0"
                    : "free formula " + failing + " scores non-zero";
    }
  }
  {
    PostulateCheck& c = add("Fact-Minimality");
    bool ok = true;
    for (const ShapleyEntry& e : adjusted) {
      if (e.element.IsFact() && e.value != 0) ok = false;
    }
    c.verdict = Holds(ok);
    c.detail = ok ? "every fact scores 0" : "a fact scores non-zero";
  }
  {
    PostulateCheck& c = add("Rule-Involvement");
    if (CheckRC(measure, base, limits).verdict != Verdict::kHolds) {
      c.detail = "measure violates RC on B";
    } else {
      bool ok = true;
      std::string failing;
      for (std::size_t i = 0; i < indexed.size(); ++i) {
        const ElementMask bit = IndexedBase::Bit(i);
        if (!(indexed.rule_mask() & bit) || !(involved & bit)) continue;
        const Rule& r = indexed.element(i);
        const Rational bound = RuleInvolvementLowerBound(base, r, limits);
        if (adjusted[i].value <= 0 || adjusted[i].value < bound) {
          ok = false;
          failing = r.ToString() + " has S* = " + Show(adjusted[i].value) +
                    ", bound " + Show(bound);
        }
      }
      c.verdict = Holds(ok);
      c.detail = ok ? "every non-free rule meets its bound" : failing;
    }
  }
  {
    PostulateCheck& c = add("Rule Consistency'");
    const bool rule_consistent = IsRuleConsistent(base, limits);
    c.verdict = Holds((max_adjusted == 0) == rule_consistent);
    c.detail = "max S* = " + Show(max_adjusted) + ", rule-consistent = " +
               (rule_consistent ? "true" : "false");
  }
  {
    PostulateCheck& c = add("Free formula independence'");
    const std::optional<Rule> alpha =
        free_formula ? free_formula : ChooseFreeFormula(base, limits);
    c.formula = alpha;
    if (!alpha) {
      c.detail = "no free formula candidate";
    } else if (base.Contains(*alpha)) {
      c.detail = "'" + alpha->ToString() + "' already in B";
    } else {
      const RuleBase extended = base.With(*alpha);
      if (!IsFreeIn(extended, *alpha, limits)) {
        c.detail = "'" + alpha->ToString() + "' is not free in B + alpha";
      } else if (CheckIN(measure, extended, *alpha, limits).verdict !=
                 Verdict::kHolds) {
        c.detail = "measure violates IN on B + alpha";
      } else {
        const Rational extended_max =
            MaxAdjustedShapleyValue(measure, extended, limits);
        c.verdict = Holds(extended_max == max_adjusted);
        c.detail = "max S*(B) = " + Show(max_adjusted) + ", max S*(B + " +
                   alpha->ToString() + ") = " + Show(extended_max);
      }
    }
  }
  {
    PostulateCheck& c = add("Upper Bound");
    c.verdict = Holds(max_adjusted <= value);
    c.detail = "max S* = " + Show(max_adjusted) + ", I(B) = " + Show(value);
  }
  return checks;
}

PostulateCheck Recheck(const PostulateCheck& check, const Limits& limits) {
  const InconsistencyMeasure& measure = MeasureByName(check.measure);
  const std::string& p = check.postulate;
  if (p == "RC") return CheckRC(measure, check.base, limits);
  if (p == "CO") return CheckCO(measure, check.base, limits);
  if (p == "FE" || p == kFeHeadOnly) {
    if (!check.formula) return check;
    const auto premise = p == "FE" ? FactElisionPremise::kSafeForRules
                                   : FactElisionPremise::kHeadOnly;
    return CheckFE(measure, check.base, check.formula->head().Complement(),
                   limits, premise);
  }
  if (p == "RE") {
    if (!check.formula) return check;
    return CheckRE(measure, check.base, *check.formula, limits);
  }
  if (p == "MO") {
    if (!check.other_base) return check;
    return CheckMO(measure, check.base, *check.other_base, limits);
  }
  if (p == "IN") {
    if (!check.formula) return check;
    return CheckIN(measure, check.base, *check.formula, limits);
  }
  for (PostulateCheck& c :
       CheckShapleyProperties(measure, check.base, check.formula, limits)) {
    if (c.postulate == p) return c;
  }
  throw UnknownPostulate("unknown postulate '" + p + "'");
}

Postulate PostulateByName(std::string_view name) {
  for (Postulate p : {Postulate::kRC, Postulate::kFE, Postulate::kRE,
                      Postulate::kCO, Postulate::kMO, Postulate::kIN}) {
    if (PostulateName(p) == name) return p;
  }
  throw UnknownPostulate("unknown postulate '" + std::string(name) +
                         "'; expected RC, FE, RE, CO, MO or IN");
}

std::string_view PostulateName(Postulate postulate) {
  switch (postulate) {
    case Postulate::kRC:
      return "RC";
    case Postulate::kFE:
      return "FE";
    case Postulate::kRE:
      return "RE";
    case Postulate::kCO:
      return "CO";
    case Postulate::kMO:
      return "MO";
    case Postulate::kIN:
      return "IN";
  }
  return "?";
}

std::vector<PostulateCheck> FixedInstances(const InconsistencyMeasure& measure,
                                           Postulate postulate,
                                           const Limits& limits) {
  std::vector<PostulateCheck> out;
  switch (postulate) {
    case Postulate::kRC:
      out.push_back(CheckRC(measure, ParseRuleBase("a. !a."), limits));
      break;
    case Postulate::kFE:
      out.push_back(CheckFE(measure,
                            ParseRuleBase("a. a -> b. a -> !b. c."),
                            Literal::Positive("c"), limits));
      break;
    case Postulate::kRE:
      out.push_back(CheckRE(measure, ParseRuleBase("a. b. a -> !a."),
                            ParseRule("b -> !b."), limits));
      out.push_back(CheckRE(measure, ParseRuleBase("a. !c. b -> c."),
                            ParseRule("a -> b."), limits));
      break;
    case Postulate::kCO:
      out.push_back(CheckCO(measure, ParseRuleBase("a. !a."), limits));
      out.push_back(CheckCO(measure, ParseRuleBase("a. a -> b. !b."), limits));
      break;
    case Postulate::kMO:
      out.push_back(CheckMO(measure, ParseRuleBase("a. a -> b. a -> !b."),
                            ParseRuleBase("a. a -> b. a -> !b. c. !c."),
                            limits));
      break;
    case Postulate::kIN:
      out.push_back(CheckIN(measure, ParseRuleBase("a. a -> b. a -> !b. d."),
                            ParseRule("d."), limits));
      break;
  }
  return out;
}

PostulateCheck RandomInstance(const InconsistencyMeasure& measure,
                              Postulate postulate,
                              const GeneratorConfig& config,
                              const Limits& limits) {
  Prng prng(config.seed);
  const RuleBase base = GenerateRuleBase(config, prng);
  switch (postulate) {
    case Postulate::kRC:
      return CheckRC(measure, base, limits);
    case Postulate::kCO:
      return CheckCO(measure, base, limits);
    case Postulate::kFE: {
      const std::set<Atom> used = RuleAtoms(base);
      std::vector<Atom> atoms;
      for (const Atom& a : base.signature()) {
        if (!used.contains(a)) atoms.push_back(a);
      }
      atoms.push_back(FreshAtom(base));
      const Atom& atom = atoms[prng.Below(atoms.size())];
      const bool positive = prng.Bernoulli(1, 2);
      return CheckFE(measure, base, Literal(atom, positive), limits);
    }
    case Postulate::kRE: {
      for (int i = 0; i < kRuleDraws; ++i) {
        const Rule rule = RandomRule(config, prng);
        if (base.Contains(rule)) continue;
        if (IsFreeIn(base.With(rule), rule, limits)) continue;
        return CheckRE(measure, base, rule, limits);
      }
      PostulateCheck check = Make("RE", measure, base);
      check.detail = "no applicable rule drawn";
      return check;
    }
    case Postulate::kMO: {
      std::vector<Rule> kept;
      for (const Rule& r : base) {
        if (prng.Bernoulli(1, 2)) kept.push_back(r);
      }
      return CheckMO(measure, RuleBase(std::move(kept)), base, limits);
    }
    case Postulate::kIN: {
      const std::vector<Rule> free = FreeFormulas(base, limits);
      if (free.empty()) {
        PostulateCheck check = Make("IN", measure, base);
        check.detail = "no free formula";
        return check;
      }
      return CheckIN(measure, base, free[prng.Below(free.size())], limits);
    }
  }
  throw UnknownPostulate("unknown postulate");
}

CampaignResult RunCampaign(const InconsistencyMeasure& measure,
                           Postulate postulate, std::size_t budget,
                           const GeneratorConfig& config,
                           const Limits& limits, bool include_fixed) {
  CampaignResult result;
  result.measure = std::string(measure.name());
  result.postulate = std::string(PostulateName(postulate));
  result.seed = config.seed;
  result.budget = budget;
  auto tally = [&](PostulateCheck check) {
    switch (check.verdict) {
      case Verdict::kHolds:
        ++result.holds;
        break;
      case Verdict::kInapplicable:
        ++result.inapplicable;
        break;
      case Verdict::kViolated:
        ++result.violated;
        if (!result.first_violation) result.first_violation = std::move(check);
        break;
    }
  };
  if (include_fixed) {
    for (PostulateCheck& check : FixedInstances(measure, postulate, limits)) {
      ++result.fixed_instances;
      tally(std::move(check));
    }
  }
  GeneratorConfig instance = config;
  for (std::size_t i = 0; i < budget; ++i) {
    instance.seed = config.seed + i;
    tally(RandomInstance(measure, postulate, instance, limits));
  }
  return result;
}

std::optional<PostulateCheck> SearchCounterexample(
    const InconsistencyMeasure& measure, Postulate postulate,
    std::size_t budget, const GeneratorConfig& config, const Limits& limits) {
  return RunCampaign(measure, postulate, budget, config, limits)
      .first_violation;
}

}  // namespace rbim
