// Copyright 2026 The argagree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "argagree/scenario_format.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "argagree/error.h"

namespace argagree {
namespace {

struct FactShape {
  FactKind kind;
  std::string_view name;
  std::size_t arity;
};

constexpr FactShape kShapes[] = {
    {FactKind::kArg, "arg", 1},       {FactKind::kAtt, "att", 2},
    {FactKind::kTopic, "topic", 1},   {FactKind::kValue, "value", 1},
    {FactKind::kVal, "val", 2},       {FactKind::kPref, "pref", 3},
    {FactKind::kAgent, "agent", 2},   {FactKind::kSemantics, "semantics", 1},
    {FactKind::kAgents, "agents", 1},
};

std::string Located(SourcePosition at, const std::string& message) {
  return std::to_string(at.line) + ":" + std::to_string(at.column) + ": " +
         message;
}

Error ParseFailure(SourcePosition at, const std::string& message) {
  return Error(ErrorCategory::kParse, "parse.syntax", Located(at, message));
}

Error Invalid(const std::string& code, SourcePosition at,
              const std::string& message) {
  return ValidationError(code, Located(at, message));
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  // Skips whitespace and comments; false at end of input.
  bool SkipBlank() {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        Advance();
      } else {
        return true;
      }
    }
    return false;
  }

  SourcePosition position() const { return at_; }

  std::string Identifier(std::string_view what) {
    SkipBlank();
    const SourcePosition start = at_;
    std::string out;
    while (pos_ < text_.size() && IsIdentifier(text_.substr(pos_, 1))) {
      out += text_[pos_];
      Advance();
    }
    if (out.empty()) {
      throw ParseFailure(start, "expected " + std::string(what) + Found());
    }
    return out;
  }

  void Expect(char symbol) {
    SkipBlank();
    if (pos_ >= text_.size() || text_[pos_] != symbol) {
      throw ParseFailure(at_,
                         std::string("expected '") + symbol + "'" + Found());
    }
    Advance();
  }

  bool Peek(char symbol) {
    SkipBlank();
    return pos_ < text_.size() && text_[pos_] == symbol;
  }

 private:
  std::string Found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++at_.line;
      at_.column = 1;
    } else {
      ++at_.column;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  SourcePosition at_;
};

bool IsIndex(std::string_view token) {
  return !token.empty() && token.size() <= 9 &&
         std::all_of(token.begin(), token.end(),
                     [](char ch) { return ch >= '0' && ch <= '9'; });
}

void CheckOperands(const Fact& fact) {
  auto require_index = [&](std::size_t i) {
    if (!IsIndex(fact.operands[i])) {
      throw ParseFailure(fact.position,
                         "'" + fact.operands[i] + "' is not an agent index");
    }
  };
  auto require_semantics = [&](std::size_t i) {
    if (!ParseSemantics(fact.operands[i])) {
      throw ParseFailure(fact.position,
                         "unknown semantics '" + fact.operands[i] + "'");
    }
  };
  switch (fact.kind) {
    case FactKind::kPref:
      require_index(0);
      break;
    case FactKind::kAgent:
      require_index(0);
      require_semantics(1);
      break;
    case FactKind::kSemantics:
      require_semantics(0);
      break;
    case FactKind::kAgents:
      require_index(0);
      if (std::stoul(fact.operands[0]) == 0) {
        throw ParseFailure(fact.position, "agent count must be positive");
      }
      break;
    default:
      break;
  }
}

std::size_t ToIndex(const std::string& token) { return std::stoul(token); }

}  // namespace

std::string_view FactName(FactKind kind) {
  for (const FactShape& shape : kShapes) {
    if (shape.kind == kind) return shape.name;
  }
  return "?";
}

ScenarioDocument ParseScenario(std::string_view text) {
  ScenarioDocument document;
  std::set<std::pair<FactKind, std::vector<std::string>>> seen;
  Lexer lexer(text);
  while (lexer.SkipBlank()) {
    const SourcePosition start = lexer.position();
    const std::string name = lexer.Identifier("a fact name");
    const auto shape =
        std::find_if(std::begin(kShapes), std::end(kShapes),
                     [&](const FactShape& s) { return s.name == name; });
    if (shape == std::end(kShapes)) {
      throw ParseFailure(start, "unknown fact '" + name + "'");
    }
    Fact fact{shape->kind, {}, start};
    lexer.Expect('(');
    fact.operands.push_back(lexer.Identifier("an identifier"));
    while (lexer.Peek(',')) {
      lexer.Expect(',');
      fact.operands.push_back(lexer.Identifier("an identifier"));
    }
    lexer.Expect(')');
    lexer.Expect('.');
    if (fact.operands.size() != shape->arity) {
      throw ParseFailure(
          start, "'" + name + "' takes " + std::to_string(shape->arity) +
                     (shape->arity == 1 ? " operand" : " operands") + ", got " +
                     std::to_string(fact.operands.size()));
    }
    CheckOperands(fact);
    if (!seen.emplace(fact.kind, fact.operands).second) {
      throw ParseFailure(start, "duplicate fact '" + name + "'");
    }
    document.facts.push_back(std::move(fact));
  }
  return document;
}

std::string SerializeScenario(const ScenarioDocument& document) {
  std::string out;
  for (const Fact& fact : document.facts) {
    out += FactName(fact.kind);
    out += '(';
    for (std::size_t i = 0; i < fact.operands.size(); ++i) {
      if (i > 0) out += ',';
      out += fact.operands[i];
    }
    out += ").\n";
  }
  return out;
}

Scenario BuildScenario(const ScenarioDocument& document) {
  std::vector<const Fact*> by_kind[std::size(kShapes)];
  for (const Fact& fact : document.facts) {
    by_kind[static_cast<std::size_t>(fact.kind)].push_back(&fact);
  }
  auto facts = [&](FactKind kind) -> const std::vector<const Fact*>& {
    return by_kind[static_cast<std::size_t>(kind)];
  };

  const bool aas = !facts(FactKind::kAgent).empty();
  const bool vaas = !facts(FactKind::kSemantics).empty();
  if (aas && vaas) {
    throw Invalid("scenario.mixed_styles",
                  facts(FactKind::kSemantics).front()->position,
                  "agent(...) and semantics(...) cannot be combined");
  }
  if (!vaas) {
    for (FactKind kind : {FactKind::kValue, FactKind::kVal, FactKind::kPref,
                          FactKind::kAgents}) {
      if (!facts(kind).empty()) {
        throw Invalid("scenario.value_fact_without_semantics",
                      facts(kind).front()->position,
                      std::string(FactName(kind)) +
                          "(...) requires a semantics(...) fact");
      }
    }
  }
  if (!aas && !vaas && !facts(FactKind::kTopic).empty()) {
    throw Invalid("scenario.topic_without_agents",
                  facts(FactKind::kTopic).front()->position,
                  "topic(...) requires agent(...) or semantics(...) facts");
  }

  std::vector<std::string> arguments;
  std::set<std::string> declared;
  for (const Fact* fact : facts(FactKind::kArg)) {
    arguments.push_back(fact->operands[0]);
    declared.insert(fact->operands[0]);
  }
  auto require_argument = [&](const Fact& fact, const std::string& id) {
    if (!declared.contains(id)) {
      throw Invalid("scenario.unknown_argument", fact.position,
                    "unknown argument '" + id + "'");
    }
  };
  std::vector<Attack> attacks;
  for (const Fact* fact : facts(FactKind::kAtt)) {
    require_argument(*fact, fact->operands[0]);
    require_argument(*fact, fact->operands[1]);
    if (vaas && fact->operands[0] == fact->operands[1]) {
      throw Invalid("vaf.self_attack", fact->position,
                    "argument '" + fact->operands[0] + "' attacks itself");
    }
    attacks.push_back({fact->operands[0], fact->operands[1]});
  }
  std::vector<std::string> topic;
  for (const Fact* fact : facts(FactKind::kTopic)) {
    require_argument(*fact, fact->operands[0]);
    topic.push_back(fact->operands[0]);
  }
  ArgFramework af(std::move(arguments), std::move(attacks));

  if (aas) {
    std::map<std::size_t, SemanticsKind> agents;
    for (const Fact* fact : facts(FactKind::kAgent)) {
      const std::size_t index = ToIndex(fact->operands[0]);
      if (!agents.emplace(index, *ParseSemantics(fact->operands[1])).second) {
        throw Invalid("scenario.duplicate_agent", fact->position,
                      "agent " + fact->operands[0] + " defined twice");
      }
    }
    AgreementScenario scenario{std::move(af), ArgSet(std::move(topic)), {}};
    for (const auto& [index, sem] : agents) {
      if (index != scenario.agents.size()) {
        throw Invalid("scenario.agent_gap",
                      facts(FactKind::kAgent).front()->position,
                      "agent indices must run 0..n-1 (missing " +
                          std::to_string(scenario.agents.size()) + ")");
      }
      scenario.agents.push_back(sem);
    }
    return scenario;
  }
  if (!vaas) return af;

  const auto& semantics = facts(FactKind::kSemantics);
  if (semantics.size() > 1) {
    throw Invalid("scenario.duplicate_semantics", semantics[1]->position,
                  "semantics(...) given more than once");
  }
  const auto& count_facts = facts(FactKind::kAgents);
  if (count_facts.size() > 1) {
    throw Invalid("scenario.duplicate_agents", count_facts[1]->position,
                  "agents(...) given more than once");
  }
  std::set<std::string> values;
  for (const Fact* fact : facts(FactKind::kValue)) {
    values.insert(fact->operands[0]);
  }
  auto require_value = [&](const Fact& fact, const std::string& v) {
    if (!values.contains(v)) {
      throw Invalid("scenario.unknown_value", fact.position,
                    "undeclared value '" + v + "'");
    }
  };
  std::map<std::string, std::string> valuation;
  for (const Fact* fact : facts(FactKind::kVal)) {
    require_argument(*fact, fact->operands[0]);
    require_value(*fact, fact->operands[1]);
    if (!valuation.emplace(fact->operands[0], fact->operands[1]).second) {
      throw Invalid("scenario.duplicate_valuation", fact->position,
                    "argument '" + fact->operands[0] + "' valued twice");
    }
  }
  std::size_t agent_count = 1;
  if (!count_facts.empty()) {
    agent_count = ToIndex(count_facts[0]->operands[0]);
  } else {
    for (const Fact* fact : facts(FactKind::kPref)) {
      agent_count = std::max(agent_count, ToIndex(fact->operands[0]) + 1);
    }
  }
  std::vector<PreferenceRelation> preferences(agent_count);
  std::vector<SourcePosition> first_pref(agent_count);
  for (const Fact* fact : facts(FactKind::kPref)) {
    const std::size_t index = ToIndex(fact->operands[0]);
    if (index >= agent_count) {
      throw Invalid("scenario.agent_out_of_range", fact->position,
                    "agent " + fact->operands[0] + " exceeds agents(" +
                        std::to_string(agent_count) + ")");
    }
    require_value(*fact, fact->operands[1]);
    require_value(*fact, fact->operands[2]);
    if (preferences[index].empty()) first_pref[index] = fact->position;
    preferences[index].emplace(fact->operands[1], fact->operands[2]);
  }
  for (std::size_t i = 0; i < agent_count; ++i) {
    try {
      ValidatePreferenceRelation(preferences[i], values);
    } catch (const Error& e) {
      throw Invalid(e.code(), first_pref[i],
                    "agent " + std::to_string(i) + ": " + e.what());
    }
  }
  const SourcePosition at = semantics.front()->position;
  try {
    ValueFramework vaf(std::move(af), std::move(values), std::move(valuation),
                       std::move(preferences));
    ValueScenario scenario{std::move(vaf), ArgSet(std::move(topic)),
                           *ParseSemantics(semantics.front()->operands[0])};
    return scenario;
  } catch (const Error& e) {
    throw Invalid(e.code(), at, e.what());
  }
}

namespace {

void Add(ScenarioDocument& document, FactKind kind,
         std::vector<std::string> operands) {
  document.facts.push_back({kind, std::move(operands), {}});
}

void AddFramework(ScenarioDocument& document, const ArgFramework& af) {
  for (const std::string& id : af.arguments())
    Add(document, FactKind::kArg, {id});
  for (const Attack& attack : af.attacks()) {
    Add(document, FactKind::kAtt, {attack.from, attack.to});
  }
}

}  // namespace

ScenarioDocument ToDocument(const ArgFramework& af) {
  ScenarioDocument document;
  AddFramework(document, af);
  return document;
}

ScenarioDocument ToDocument(const AgreementScenario& scenario) {
  ScenarioDocument document;
  AddFramework(document, scenario.af);
  for (const std::string& id : scenario.topic) {
    Add(document, FactKind::kTopic, {id});
  }
  for (std::size_t i = 0; i < scenario.agents.size(); ++i) {
    Add(document, FactKind::kAgent,
        {std::to_string(i), std::string(SemanticsName(scenario.agents[i]))});
  }
  return document;
}

ScenarioDocument ToDocument(const ValueScenario& scenario) {
  ScenarioDocument document;
  const ValueFramework& vaf = scenario.vaf;
  AddFramework(document, vaf.af());
  for (const std::string& id : scenario.topic) {
    Add(document, FactKind::kTopic, {id});
  }
  for (const std::string& v : vaf.values())
    Add(document, FactKind::kValue, {v});
  for (const auto& [argument, value] : vaf.valuation()) {
    Add(document, FactKind::kVal, {argument, value});
  }
  Add(document, FactKind::kSemantics,
      {std::string(SemanticsName(scenario.sem))});
  Add(document, FactKind::kAgents, {std::to_string(vaf.agent_count())});
  for (std::size_t i = 0; i < vaf.agent_count(); ++i) {
    for (const auto& [u, w] : vaf.preferences()[i]) {
      Add(document, FactKind::kPref, {std::to_string(i), u, w});
    }
  }
  return document;
}

}  // namespace argagree
