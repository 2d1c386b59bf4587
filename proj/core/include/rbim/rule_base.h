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

// Data model for business rule bases: atoms, literals, rules l1,...,lm -> l0
// and finite sets of such rules. All types are immutable values with a
// canonical total order, so sets of them serialize byte-stably.

#ifndef RBIM_RULE_BASE_H_
#define RBIM_RULE_BASE_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rbim {

// A propositional atom. The name must match [A-Za-z_][A-Za-z0-9_]*.
class Atom {
 public:
  // Throws InvalidAtom if the name is not an identifier.
  explicit Atom(std::string name);

  const std::string& name() const { return name_; }

  static bool IsValidName(std::string_view name);

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;

 private:
  std::string name_;
};

// An atom or its negation. Ordered by atom name, negative before positive.
class Literal {
 public:
  Literal(Atom atom, bool positive) : atom_(std::move(atom)), positive_(positive) {}

  // "a" or "!a".
  static Literal Parse(std::string_view text);
  static Literal Positive(std::string name) { return {Atom(std::move(name)), true}; }
  static Literal Negative(std::string name) { return {Atom(std::move(name)), false}; }

  const Atom& atom() const { return atom_; }
  bool positive() const { return positive_; }
  Literal Complement() const { return {atom_, !positive_}; }

  std::string ToString() const;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);

 private:
  Atom atom_;
  bool positive_;
};

// body -> head. A rule with an empty body is a fact. The body is a set: it is
// stored sorted and without duplicates.
class Rule {
 public:
  Rule(std::vector<Literal> body, Literal head);

  static Rule Fact(Literal head) { return Rule({}, std::move(head)); }

  const std::vector<Literal>& body() const { return body_; }
  const Literal& head() const { return head_; }
  bool IsFact() const { return body_.empty(); }

  // Every atom mentioned by the rule, sorted, without duplicates.
  std::vector<Atom> Atoms() const;

  // DSL rendering: "a." or "a, !b -> c."
  std::string ToString() const;

  friend bool operator==(const Rule&, const Rule&) = default;
  // Canonical order: facts before rules, then by head, then by body.
  friend std::strong_ordering operator<=>(const Rule& a, const Rule& b);

 private:
  std::vector<Literal> body_;
  Literal head_;
};

// A finite set of rules. Elements are kept in canonical order; the signature
// is exactly the set of atoms occurring in the elements.
class RuleBase {
 public:
  RuleBase() = default;
  explicit RuleBase(std::vector<Rule> rules);
  RuleBase(std::initializer_list<Rule> rules)
      : RuleBase(std::vector<Rule>(rules)) {}

  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<Atom>& signature() const { return signature_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }

  auto begin() const { return rules_.begin(); }
  auto end() const { return rules_.end(); }

  bool Contains(const Rule& rule) const;
  // Position of the rule in canonical order.
  std::optional<std::size_t> IndexOf(const Rule& rule) const;
  bool IsSubsetOf(const RuleBase& other) const;

  // F(B) and R(B): the bodyless elements and the remaining ones.
  std::vector<Rule> Facts() const;
  std::vector<Rule> RulesOnly() const;

  RuleBase With(const Rule& rule) const;
  RuleBase Without(const Rule& rule) const;
  RuleBase Union(const RuleBase& other) const;

  friend bool operator==(const RuleBase&, const RuleBase&) = default;

 private:
  std::vector<Rule> rules_;
  std::vector<Atom> signature_;
};

// Free-function spellings of the fact/rule partition.
std::vector<Rule> Facts(const RuleBase& base);
std::vector<Rule> RulesOnly(const RuleBase& base);

}  // namespace rbim

#endif  // RBIM_RULE_BASE_H_
