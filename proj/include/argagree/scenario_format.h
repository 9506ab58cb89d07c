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

#ifndef ARGAGREE_SCENARIO_FORMAT_H_
#define ARGAGREE_SCENARIO_FORMAT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "argagree/agreement.h"
#include "argagree/framework.h"
#include "argagree/vaf.h"

namespace argagree {

enum class FactKind {
  kArg,        // arg(id)
  kAtt,        // att(id,id)
  kTopic,      // topic(id)
  kValue,      // value(vid)
  kVal,        // val(id,vid)
  kPref,       // pref(agent,vid,vid)
  kAgent,      // agent(agent,semantics)
  kSemantics,  // semantics(semantics)
  kAgents,     // agents(count); value-based files only
};

std::string_view FactName(FactKind kind);

struct SourcePosition {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Fact {
  FactKind kind = FactKind::kArg;
  std::vector<std::string> operands;
  SourcePosition position;

  // Positions are diagnostics only.
  friend bool operator==(const Fact& a, const Fact& b) {
    return a.kind == b.kind && a.operands == b.operands;
  }
};

struct ScenarioDocument {
  std::vector<Fact> facts;

  friend bool operator==(const ScenarioDocument&,
                         const ScenarioDocument&) = default;
};

// Throws a parse error with "line:column" for lexical, syntax, arity and
// duplicate-fact problems.
ScenarioDocument ParseScenario(std::string_view text);
// One fact per line, in document order.
std::string SerializeScenario(const ScenarioDocument& document);

// No agent(...) or semantics(...) facts: a bare framework.
using Scenario = std::variant<ArgFramework, AgreementScenario, ValueScenario>;

// Throws a validation error, located where possible, for unknown
// identifiers, mixed styles and invariant violations.
Scenario BuildScenario(const ScenarioDocument& document);

ScenarioDocument ToDocument(const ArgFramework& af);
ScenarioDocument ToDocument(const AgreementScenario& scenario);
ScenarioDocument ToDocument(const ValueScenario& scenario);

}  // namespace argagree

#endif  // ARGAGREE_SCENARIO_FORMAT_H_
