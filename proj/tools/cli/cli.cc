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
#include "cli/cli.h"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rbim/errors.h"
#include "rbim/generator.h"
#include "rbim/measures.h"
#include "rbim/mis.h"
#include "rbim/parser.h"
#include "rbim/postulates.h"
#include "rbim/rational.h"
#include "rbim/shapley.h"

namespace rbim::cli {

namespace {

using Json = nlohmann::json;

struct Options {
  std::string input;
  bool json = false;
  std::vector<std::string> measures;
  bool classical_shapley = false;
  bool hide_facts = false;
  std::size_t budget = 1000;
  std::uint64_t seed = 0;
  Limits limits;
  // check
  std::string measure_name;
  std::string postulate_name;
  // generate
  GeneratorConfig generator;
  std::string negation_probability = "1/2";
};

class NoInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadInput(const std::string& path, std::istream& in) {
  std::stringstream text;
  if (path == "-") {
    text << in.rdbuf();
    return text.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw NoInput("cannot open '" + path + "'");
  text << file.rdbuf();
  return text.str();
}

std::vector<const InconsistencyMeasure*> Resolve(
    const std::vector<std::string>& names,
    std::span<const InconsistencyMeasure* const> fallback) {
  std::vector<const InconsistencyMeasure*> out;
  for (const std::string& n : names) out.push_back(&MeasureByName(n));
  if (out.empty()) out.assign(fallback.begin(), fallback.end());
  return out;
}

Json Value(const Rational& q) {
  return Json{{"fraction", FormatFraction(q)}, {"decimal", FormatDecimal(q)}};
}

Json Elements(const RuleBase& base) {
  Json out = Json::array();
  for (const Rule& r : base) out.push_back(r.ToString());
  return out;
}

Json Family(const MISet& family) {
  Json out = Json::array();
  for (const RuleBase& m : family) out.push_back(Elements(m));
  return out;
}

Json Entries(const std::vector<ShapleyEntry>& entries, bool hide_facts) {
  Json out = Json::array();
  for (const ShapleyEntry& e : entries) {
    if (hide_facts && e.element.IsFact()) continue;
    Json item = Value(e.value);
    item["element"] = e.element.ToString();
    out.push_back(std::move(item));
  }
  return out;
}

Json Digest(const RuleBase& base) {
  const std::string canonical = FormatRuleBase(base);
  return Json{{"canonical", canonical},
              {"sha256", Sha256Hex(canonical)},
              {"elements", base.size()},
              {"atoms", base.signature().size()}};
}

Json LimitsJson(const Limits& limits) {
  return Json{{"max_subset_elements", limits.max_subset_elements},
              {"max_contension_atoms", limits.max_contension_atoms}};
}

Json Envelope(std::string_view command) {
  return Json{{"schema", 1}, {"command", std::string(command)}};
}

void PrintJson(std::ostream& out, const Json& json) {
  out << json.dump(2) << "\n";
}

std::string Pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

void PrintFamily(std::ostream& out, const std::string& title,
                 const MISet& family) {
  out << title << " (" << family.size() << ")\n";
  for (const RuleBase& m : family) {
    out << "  {";
    for (std::size_t i = 0; i < m.size(); ++i) {
      out << (i ? " " : "") << m.rules()[i].ToString();
    }
    out << "}\n";
  }
}

void PrintMeasures(std::ostream& out,
                   const std::map<std::string, Rational>& values) {
  out << Pad("measure", 16) << Pad("value", 8) << "decimal\n";
  for (const InconsistencyMeasure* m : AllMeasures()) {
    auto it = values.find(std::string(m->name()));
    if (it == values.end()) continue;
    out << Pad(it->first, 16) << Pad(FormatFraction(it->second), 8)
        << FormatDecimal(it->second) << "\n";
  }
}

void PrintVector(std::ostream& out, const std::string& title,
                 const ShapleyVector& values, bool hide_facts) {
  out << title << "\n";
  for (const ShapleyEntry& e : values) {
    if (hide_facts && e.element.IsFact()) continue;
    out << "  " << Pad(FormatFraction(e.value), 8)
        << Pad(FormatDecimal(e.value), 10) << e.element.ToString() << "\n";
  }
}

void PrintRanking(std::ostream& out, const CulpabilityRanking& ranking,
                  bool hide_facts) {
  out << Pad("rank", 6) << Pad("value", 8) << Pad("decimal", 10)
      << "element\n";
  std::size_t rank = 0;
  for (const ShapleyEntry& e : ranking) {
    if (hide_facts && e.element.IsFact()) continue;
    out << Pad(std::to_string(++rank), 6) << Pad(FormatFraction(e.value), 8)
        << Pad(FormatDecimal(e.value), 10) << e.element.ToString() << "\n";
  }
}

int Measures(const Options& o, std::istream& in, std::ostream& out) {
  const RuleBase base = ParseRuleBase(ReadInput(o.input, in));
  std::map<std::string, Rational> values;
  IndexedBase indexed(base, o.limits);
  for (const InconsistencyMeasure* m : Resolve(o.measures, AllMeasures())) {
    values[std::string(m->name())] =
        m->EvaluateSubset(indexed, indexed.full_mask());
  }
  if (o.json) {
    Json json = Envelope("measures");
    json["input"] = Digest(base);
    json["limits"] = LimitsJson(o.limits);
    for (const auto& [name, value] : values) json["measures"][name] = Value(value);
    PrintJson(out, json);
  } else {
    PrintMeasures(out, values);
  }
  return kExitOk;
}

int Shapley(const Options& o, std::istream& in, std::ostream& out) {
  const RuleBase base = ParseRuleBase(ReadInput(o.input, in));
  Json json = Envelope("shapley");
  json["input"] = Digest(base);
  json["limits"] = LimitsJson(o.limits);
  json["shapley"] = Json::object();
  for (const InconsistencyMeasure* m :
       Resolve(o.measures, RuleBasedMeasures())) {
    const CoalitionGame game(*m, base, o.limits);
    const std::string name(m->name());
    const ShapleyVector adjusted = game.AdjustedShapleyValues();
    Json entry{{"adjusted", Entries(adjusted, o.hide_facts)},
               {"max_adjusted", Value(Max(adjusted))}};
    if (o.classical_shapley) {
      entry["classical"] = Entries(game.ShapleyValues(), o.hide_facts);
    }
    json["shapley"][name] = std::move(entry);
    if (!o.json) {
      if (o.classical_shapley) {
        PrintVector(out, "Shapley values (" + name + ")",
                    game.ShapleyValues(), o.hide_facts);
      }
      PrintVector(out, "adjusted Shapley values (" + name + ")", adjusted,
                  o.hide_facts);
    }
  }
  if (o.json) PrintJson(out, json);
  return kExitOk;
}

int Rank(const Options& o, std::istream& in, std::ostream& out) {
  const RuleBase base = ParseRuleBase(ReadInput(o.input, in));
  const InconsistencyMeasure& m =
      MeasureByName(o.measures.empty() ? "rb-drastic" : o.measures.front());
  const CulpabilityRanking ranking = RankByCulpability(m, base, o.limits);
  if (o.json) {
    Json json = Envelope("rank");
    json["input"] = Digest(base);
    json["measure"] = std::string(m.name());
    json["ranking"] = Entries(ranking, o.hide_facts);
    PrintJson(out, json);
  } else {
    out << "culpability ranking (" << m.name() << ")\n";
    PrintRanking(out, ranking, o.hide_facts);
  }
  return kExitOk;
}

int Analyze(const Options& o, std::istream& in, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const RuleBase base = ParseRuleBase(ReadInput(o.input, in));
  const MeasureReport report = MeasureAll(base, o.limits);
  const auto shapley_measures = Resolve(o.measures, RuleBasedMeasures());

  Json json = Envelope("analyze");
  json["input"] = Digest(base);
  json["limits"] = LimitsJson(o.limits);
  json["mi"] = Family(report.mi);
  json["mi_without_facts"] = Family(report.mi_without_facts);
  for (const auto& [name, value] : report.values) {
    json["measures"][name] = Value(value);
  }
  json["shapley"] = Json::object();

  if (!o.json) {
    out << "rule base: " << base.size() << " elements ("
        << Facts(base).size() << " facts, " << RulesOnly(base).size()
        << " rules), " << base.signature().size() << " atoms\n"
        << "sha256: " << Sha256Hex(FormatRuleBase(base)) << "\n\n";
    PrintFamily(out, "minimal inconsistent subsets", report.mi);
    PrintFamily(out, "minimal inconsistent subsets without pure fact sets",
                report.mi_without_facts);
    out << "\n";
    PrintMeasures(out, report.values);
  }
  for (const InconsistencyMeasure* m : shapley_measures) {
    const CoalitionGame game(*m, base, o.limits);
    const std::string name(m->name());
    const ShapleyVector adjusted = game.AdjustedShapleyValues();
    const CulpabilityRanking ranking = RankByCulpability(adjusted);
    Json entry{{"adjusted", Entries(adjusted, o.hide_facts)},
               {"max_adjusted", Value(Max(adjusted))},
               {"ranking", Entries(ranking, o.hide_facts)}};
    if (o.classical_shapley) {
      entry["classical"] = Entries(game.ShapleyValues(), o.hide_facts);
    }
    json["shapley"][name] = std::move(entry);
    if (!o.json) {
      out << "\n";
      if (o.classical_shapley) {
        PrintVector(out, "Shapley values (" + name + ")",
                    game.ShapleyValues(), o.hide_facts);
      }
      PrintVector(out, "adjusted Shapley values (" + name + ")", adjusted,
                  o.hide_facts);
      out << "culpability ranking (" << name << ")\n";
      PrintRanking(out, ranking, o.hide_facts);
    }
  }
  if (o.json) {
    PrintJson(out, json);
  } else {
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(1) << elapsed.count();
    out << "\nelapsed: " << ms.str() << " ms\n";
  }
  return kExitOk;
}

Json CheckJson(const PostulateCheck& c) {
  Json json{{"postulate", c.postulate},
            {"measure", c.measure},
            {"verdict", std::string(VerdictName(c.verdict))},
            {"base", Elements(c.base)},
            {"detail", c.detail}};
  if (c.formula) json["formula"] = c.formula->ToString();
  if (c.other_base) json["other_base"] = Elements(*c.other_base);
  return json;
}

int Check(const Options& o, std::ostream& out) {
  const InconsistencyMeasure& m = MeasureByName(o.measure_name);
  const Postulate p = PostulateByName(o.postulate_name);
  GeneratorConfig config;
  config.seed = o.seed;
  const CampaignResult r = RunCampaign(m, p, o.budget, config, o.limits);
  if (o.json) {
    Json json = Envelope("check");
    json["measure"] = r.measure;
    json["postulate"] = r.postulate;
    json["seed"] = r.seed;
    json["budget"] = r.budget;
    json["prng"] = r.prng;
    json["fixed_instances"] = r.fixed_instances;
    json["holds"] = r.holds;
    json["violated"] = r.violated;
    json["inapplicable"] = r.inapplicable;
    json["first_violation"] =
        r.first_violation ? CheckJson(*r.first_violation) : Json(nullptr);
    PrintJson(out, json);
    return kExitOk;
  }
  out << r.measure << " " << r.postulate << ": " << r.fixed_instances
      << " fixed + " << r.budget << " generated instances (seed " << r.seed
      << ", " << r.prng << ")\n"
      << "holds " << r.holds << ", inapplicable " << r.inapplicable << "\n"
      << r.violated << (r.violated == 1 ? " violation" : " violations")
      << "\n";
  if (r.first_violation) {
    const PostulateCheck& w = *r.first_violation;
    out << "first witness:\n" << FormatRuleBase(w.base);
    if (w.formula) out << "formula: " << w.formula->ToString() << "\n";
    if (w.other_base) {
      out << "superset:\n" << FormatRuleBase(*w.other_base);
    }
    out << w.detail << "\n";
  } else {
    out << "no violation in " << r.fixed_instances + r.budget
        << " instances (evidence, not proof)\n";
  }
  return kExitOk;
}

int Generate(const Options& o, std::ostream& out) {
  GeneratorConfig config = o.generator;
  config.seed = o.seed;
  const Rational p = ParseRational(o.negation_probability);
  if (p < 0 || p > 1) {
    throw std::invalid_argument("negation probability must lie in [0, 1]");
  }
  config.negation_numerator =
      numerator(p).convert_to<std::uint64_t>();
  config.negation_denominator =
      denominator(p).convert_to<std::uint64_t>();
  out << FormatRuleBase(GenerateRuleBase(config));
  return kExitOk;
}

void AddLimits(CLI::App* app, Options& o) {
  app->add_option("--limit-subsets", o.limits.max_subset_elements,
                  "Largest base for subset enumeration (cost 2^n)");
  app->add_option("--limit-atoms", o.limits.max_contension_atoms,
                  "Most atoms for the contension search (cost 3^n)");
}

}  // namespace

std::string Sha256Hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0')
        << static_cast<int>(digest[i]);
  }
  return hex.str();
}

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Inconsistency measures and culpability rankings for rule bases",
               "rbim"};
  app.require_subcommand(0, 1);

  auto file_command = [&](const char* name, const char* description) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("input", o.input, "Rule base file, or - for stdin")
        ->required();
    sub->add_flag("--json", o.json, "Emit JSON");
    AddLimits(sub, o);
    return sub;
  };

  CLI::App* analyze = file_command("analyze", "Full report");
  analyze->add_option("--measure", o.measures,
                      "Measure for Shapley analysis (repeatable)");
  analyze->add_flag("--classical-shapley", o.classical_shapley,
                    "Also print classical Shapley values");
  analyze->add_flag("--hide-facts", o.hide_facts, "Omit facts from vectors");

  CLI::App* measures = file_command("measures", "Inconsistency values");
  measures->add_option("--measure", o.measures, "Measure (repeatable)");

  CLI::App* shapley = file_command("shapley", "Shapley vectors");
  shapley->add_option("--measure", o.measures, "Measure (repeatable)");
  shapley->add_flag("--classical-shapley", o.classical_shapley,
                    "Also print classical Shapley values");
  shapley->add_flag("--hide-facts", o.hide_facts, "Omit facts");

  CLI::App* rank = file_command("rank", "Culpability ranking");
  rank->add_option("--measure", o.measures, "Measure (default rb-drastic)");
  rank->add_flag("--hide-facts", o.hide_facts, "Omit facts");

  CLI::App* check = app.add_subcommand("check", "Postulate campaign");
  check->add_option("measure", o.measure_name, "Measure name")->required();
  check->add_option("postulate", o.postulate_name,
                    "RC, FE, RE, CO, MO or IN")
      ->required();
  check->add_option("--budget", o.budget, "Generated instances")
      ->capture_default_str();
  check->add_option("--seed", o.seed, "First seed")->capture_default_str();
  check->add_flag("--json", o.json, "Emit JSON");
  AddLimits(check, o);

  CLI::App* generate = app.add_subcommand("generate", "Random rule base");
  generate->add_option("--atoms", o.generator.atom_count)
      ->capture_default_str();
  generate->add_option("--facts", o.generator.fact_count)
      ->capture_default_str();
  generate->add_option("--rules", o.generator.rule_count)
      ->capture_default_str();
  generate->add_option("--max-body", o.generator.max_body_size)
      ->capture_default_str();
  generate->add_option("--negation-probability", o.negation_probability,
                       "p/q")
      ->capture_default_str();
  generate->add_option("--seed", o.seed)->capture_default_str();

  std::vector<const char*> argv = {"rbim"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "rbim: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return Analyze(o, in, out);
    if (measures->parsed()) return Measures(o, in, out);
    if (shapley->parsed()) return Shapley(o, in, out);
    if (rank->parsed()) return Rank(o, in, out);
    if (check->parsed()) return Check(o, out);
    if (generate->parsed()) return Generate(o, out);
    err << app.help();
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "rbim: " << (o.input == "-" ? "<stdin>" : o.input) << ":"
        << e.what() << "\n";
    return kExitParseError;
  } catch (const SizeLimitExceeded& e) {
    err << "rbim: " << e.what() << "\n";
    return kExitSizeLimit;
  } catch (const UnknownMeasure& e) {
    err << "rbim: " << e.what() << "\n";
    return kExitUnknownName;
  } catch (const UnknownPostulate& e) {
    err << "rbim: " << e.what() << "\n";
    return kExitUnknownName;
  } catch (const ShapeInfeasible& e) {
    err << "rbim: " << e.what() << "\n";
    return kExitShapeInfeasible;
  } catch (const NoInput& e) {
    err << "rbim: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const std::invalid_argument& e) {
    err << "rbim: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace rbim::cli
