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

#include <algorithm>
#include <utility>

#include "rbim/errors.h"

namespace rbim {

namespace {

bool IsIdentifierStart(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool IsIdentifierChar(char c) {
  return IsIdentifierStart(c) || (c >= '0' && c <= '9');
}

}  // namespace

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!IsValidName(name_)) {
    throw InvalidAtom("invalid atom name '" + name_ + "'");
  }
}

bool Atom::IsValidName(std::string_view name) {
  if (name.empty() || !IsIdentifierStart(name.front())) return false;
  return std::all_of(name.begin(), name.end(), IsIdentifierChar);
}

Literal Literal::Parse(std::string_view text) {
  if (!text.empty() && text.front() == '!') {
    return {Atom(std::string(text.substr(1))), false};
  }
  return {Atom(std::string(text)), true};
}

std::string Literal::ToString() const {
  return positive_ ? atom_.name() : "!" + atom_.name();
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  if (auto c = a.atom_ <=> b.atom_; c != 0) return c;
  return a.positive_ <=> b.positive_;
}

Rule::Rule(std::vector<Literal> body, Literal head)
    : body_(std::move(body)), head_(std::move(head)) {
  std::sort(body_.begin(), body_.end());
  body_.erase(std::unique(body_.begin(), body_.end()), body_.end());
}

std::vector<Atom> Rule::Atoms() const {
  std::vector<Atom> atoms;
  atoms.reserve(body_.size() + 1);
  for (const Literal& l : body_) atoms.push_back(l.atom());
  atoms.push_back(head_.atom());
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

std::string Rule::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < body_.size(); ++i) {
    if (i > 0) out += ", ";
    out += body_[i].ToString();
  }
  if (!body_.empty()) out += " -> ";
  out += head_.ToString();
  out += '.';
  return out;
}

std::strong_ordering operator<=>(const Rule& a, const Rule& b) {
  // Facts sort first.
  if (a.IsFact() != b.IsFact()) {
    return a.IsFact() ? std::strong_ordering::less
                      : std::strong_ordering::greater;
  }
  if (auto c = a.head_ <=> b.head_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.body_.begin(), a.body_.end(), b.body_.begin(), b.body_.end());
}

RuleBase::RuleBase(std::vector<Rule> rules) : rules_(std::move(rules)) {
  std::sort(rules_.begin(), rules_.end());
  rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
  for (const Rule& r : rules_) {
    for (const Literal& l : r.body()) signature_.push_back(l.atom());
    signature_.push_back(r.head().atom());
  }
  std::sort(signature_.begin(), signature_.end());
  signature_.erase(std::unique(signature_.begin(), signature_.end()),
                   signature_.end());
}

bool RuleBase::Contains(const Rule& rule) const {
  return std::binary_search(rules_.begin(), rules_.end(), rule);
}

std::optional<std::size_t> RuleBase::IndexOf(const Rule& rule) const {
  auto it = std::lower_bound(rules_.begin(), rules_.end(), rule);
  if (it == rules_.end() || *it != rule) return std::nullopt;
  return static_cast<std::size_t>(it - rules_.begin());
}

bool RuleBase::IsSubsetOf(const RuleBase& other) const {
  return std::includes(other.rules_.begin(), other.rules_.end(),
                       rules_.begin(), rules_.end());
}

std::vector<Rule> RuleBase::Facts() const {
  std::vector<Rule> out;
  std::copy_if(rules_.begin(), rules_.end(), std::back_inserter(out),
               [](const Rule& r) { return r.IsFact(); });
  return out;
}

std::vector<Rule> RuleBase::RulesOnly() const {
  std::vector<Rule> out;
  std::copy_if(rules_.begin(), rules_.end(), std::back_inserter(out),
               [](const Rule& r) { return !r.IsFact(); });
  return out;
}

RuleBase RuleBase::With(const Rule& rule) const {
  std::vector<Rule> rules = rules_;
  rules.push_back(rule);
  return RuleBase(std::move(rules));
}

RuleBase RuleBase::Without(const Rule& rule) const {
  std::vector<Rule> rules;
  rules.reserve(rules_.size());
  for (const Rule& r : rules_) {
    if (r != rule) rules.push_back(r);
  }
  return RuleBase(std::move(rules));
}

RuleBase RuleBase::Union(const RuleBase& other) const {
  std::vector<Rule> rules = rules_;
  rules.insert(rules.end(), other.rules_.begin(), other.rules_.end());
  return RuleBase(std::move(rules));
}

std::vector<Rule> Facts(const RuleBase& base) { return base.Facts(); }
std::vector<Rule> RulesOnly(const RuleBase& base) { return base.RulesOnly(); }

}  // namespace rbim
