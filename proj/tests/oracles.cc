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
#include "oracles.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rbim::oracle {

namespace {

std::vector<Rule> Pick(const std::vector<Rule>& all, unsigned long mask) {
  std::vector<Rule> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (mask & (1ul << i)) out.push_back(all[i]);
  }
  return out;
}

bool HasComplementaryFacts(const std::vector<Rule>& rules) {
  for (const Rule& x : rules) {
    for (const Rule& y : rules) {
      if (x.IsFact() && y.IsFact() && x.head() == y.head().Complement()) {
        return true;
      }
    }
  }
  return false;
}

Rational Fact(std::size_t n) {
  Rational out = 1;
  for (std::size_t i = 2; i <= n; ++i) out *= static_cast<long long>(i);
  return out;
}

// 0 = f, 1 = b, 2 = t.
int Value(const std::map<Atom, int>& v, const Literal& l) {
  const int x = v.at(l.atom());
  return l.positive() ? x : 2 - x;
}

}  // namespace

LiteralSet MinimalModel(const std::vector<Rule>& rules) {
  LiteralSet model;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : rules) {
      const bool fires = std::all_of(
          r.body().begin(), r.body().end(),
          [&](const Literal& l) { return model.contains(l); });
      if (fires && model.insert(r.head()).second) changed = true;
    }
  }
  return model;
}

bool IsConsistent(const std::vector<Rule>& rules) {
  const LiteralSet model = MinimalModel(rules);
  return std::none_of(model.begin(), model.end(), [&](const Literal& l) {
    return model.contains(l.Complement());
  });
}

std::set<std::vector<Rule>> MinimalInconsistent(const RuleBase& base) {
  const std::vector<Rule>& all = base.rules();
  if (all.size() > 20) throw std::invalid_argument("oracle base too large");
  std::set<std::vector<Rule>> out;
  for (unsigned long mask = 0; mask < (1ul << all.size()); ++mask) {
    const std::vector<Rule> subset = Pick(all, mask);
    if (IsConsistent(subset)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < subset.size() && minimal; ++i) {
      std::vector<Rule> smaller = subset;
      smaller.erase(smaller.begin() + static_cast<long>(i));
      if (!IsConsistent(smaller)) minimal = false;
    }
    if (minimal) out.insert(subset);
  }
  return out;
}

std::set<std::vector<Rule>> MinimalInconsistentWithoutFacts(
    const RuleBase& base) {
  std::set<std::vector<Rule>> out;
  for (const auto& m : MinimalInconsistent(base)) {
    if (!HasComplementaryFacts(m)) out.insert(m);
  }
  return out;
}

std::size_t Contension(const std::vector<Rule>& rules) {
  std::set<Atom> atom_set;
  for (const Rule& r : rules) {
    atom_set.insert(r.head().atom());
    for (const Literal& l : r.body()) atom_set.insert(l.atom());
  }
  const std::vector<Atom> atoms(atom_set.begin(), atom_set.end());
  std::vector<int> digits(atoms.size(), 0);
  std::size_t best = atoms.size();
  while (true) {
    std::map<Atom, int> v;
    std::size_t both = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      v[atoms[i]] = digits[i];
      if (digits[i] == 1) ++both;
    }
    const bool satisfied =
        std::all_of(rules.begin(), rules.end(), [&](const Rule& r) {
          int value = Value(v, r.head());
          for (const Literal& l : r.body()) {
            value = std::max(value, 2 - Value(v, l));
          }
          return value >= 1;
        });
    if (satisfied) best = std::min(best, both);
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == 2) digits[i++] = 0;
    if (i == digits.size()) break;
    ++digits[i];
  }
  return best;
}

Rational Measure(std::string_view name, const RuleBase& base) {
  const bool rule_based = name.starts_with("rb-");
  const auto family = rule_based ? MinimalInconsistentWithoutFacts(base)
                                 : MinimalInconsistent(base);
  std::set<Rule> involved;
  for (const auto& m : family) involved.insert(m.begin(), m.end());
  const std::string_view kind = rule_based ? name.substr(3) : name;
  if (kind == "drastic") return family.empty() ? 0 : 1;
  if (kind == "mi") return static_cast<long long>(family.size());
  if (kind == "problematic") {
    return static_cast<long long>(std::count_if(
        involved.begin(), involved.end(),
        [&](const Rule& r) { return !rule_based || !r.IsFact(); }));
  }
  if (kind == "contension") {
    const std::vector<Rule> rules =
        rule_based ? std::vector<Rule>(involved.begin(), involved.end())
                   : base.rules();
    return static_cast<long long>(Contension(rules));
  }
  throw std::invalid_argument("unknown measure " + std::string(name));
}

std::vector<Rational> PermutationShapley(const Game& game,
                                         const RuleBase& base) {
  const std::vector<Rule>& all = base.rules();
  const std::size_t n = all.size();
  std::map<unsigned long, Rational> memo;
  auto value = [&](unsigned long mask) {
    auto it = memo.find(mask);
    if (it == memo.end()) {
      it = memo.emplace(mask, game(RuleBase(Pick(all, mask)))).first;
    }
    return it->second;
  };
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Rational> sums(n);
  do {
    unsigned long mask = 0;
    for (std::size_t i : order) {
      const Rational before = value(mask);
      mask |= 1ul << i;
      sums[i] += value(mask) - before;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  const Rational count = Fact(n);
  for (Rational& s : sums) s /= count;
  return sums;
}

std::vector<Rational> DefinitionAdjustedShapley(const Game& game,
                                                const RuleBase& base) {
  const std::vector<Rule>& all = base.rules();
  const std::size_t n = all.size();
  std::vector<Rational> out(n);
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    const RuleBase coalition(Pick(all, mask));
    const std::size_t b = coalition.size();
    const Rational weight = Fact(b - 1) * Fact(n - b) / Fact(n);
    const Rational whole = game(coalition);
    auto payoff = [&](const Rule& alpha) {
      return weight * (whole - game(coalition.Without(alpha)));
    };
    std::set<Rule> involved;
    for (const auto& m : MinimalInconsistent(coalition)) {
      involved.insert(m.begin(), m.end());
    }
    Rational fact_payoff = 0;
    long long blamable = 0;
    for (const Rule& r : coalition) {
      if (r.IsFact()) {
        fact_payoff += payoff(r);
      } else if (involved.contains(r)) {
        ++blamable;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Rule& r = all[i];
      if (r.IsFact() || !(mask & (1ul << i))) continue;
      out[i] += payoff(r);
      if (involved.contains(r)) out[i] += fact_payoff / blamable;
    }
  }
  return out;
}

}  // namespace rbim::oracle
