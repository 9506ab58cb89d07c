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

#ifndef ARGAGREE_TESTS_SUPPORT_FIXTURES_H_
#define ARGAGREE_TESTS_SUPPORT_FIXTURES_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "argagree/agreement.h"
#include "argagree/framework.h"
#include "argagree/semantics.h"
#include "argagree/vaf.h"
#include "support/printers.h"

namespace argagree::testing {

inline ArgFramework Af(std::vector<std::string> args,
                       std::vector<Attack> attacks = {}) {
  return ArgFramework(std::move(args), std::move(attacks));
}

// Self-attacking d and e; e and {b,c} attack each other.
inline ArgFramework RunningExampleAf() {
  return Af({"a", "b", "c", "d", "e"}, {{"b", "e"},
                                        {"c", "e"},
                                        {"d", "a"},
                                        {"d", "d"},
                                        {"e", "b"},
                                        {"e", "c"},
                                        {"e", "e"}});
}

inline const std::vector<SemanticsKind> kStagePreferredGrounded = {
    SemanticsKind::kStage, SemanticsKind::kPreferred, SemanticsKind::kGrounded};

inline AgreementScenario RunningExampleScenario() {
  return {RunningExampleAf(), {"a", "b", "c"}, kStagePreferredGrounded};
}

inline AgreementScenario AttackFreeScenario() {
  return {Af({"a", "b", "c"}), {"a", "b", "c"}, kStagePreferredGrounded};
}

// Chain a -> b -> c and two expansions by d.
inline ArgFramework ChainAf() {
  return Af({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}
inline ArgFramework ChainWithBackAttack() {
  return Af({"a", "b", "c", "d"},
            {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"d", "a"}});
}
inline ArgFramework ChainWithNewAttacker() {
  return Af({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"d", "a"}});
}

// Mutual attack, then a self-attacking c attacked by b.
inline ArgFramework MutualAttackAf() {
  return Af({"a", "b"}, {{"a", "b"}, {"b", "a"}});
}
inline ArgFramework MutualAttackWithSink() {
  return Af({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "c"}});
}

inline ArgFramework ThreeCycleAf() {
  return Af({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
}
inline ArgFramework ThreeCyclePlusAttacker() {
  return Af({"a", "b", "c", "d"},
            {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "b"}});
}

inline ArgFramework LoneArgumentAf() { return Af({"a"}); }
// b and c attack a and each other.
inline ArgFramework TwoRivalAttackers() {
  return Af({"a", "b", "c"}, {{"b", "a"}, {"b", "c"}, {"c", "a"}, {"c", "b"}});
}

inline std::map<std::string, std::string> Valuation(
    const std::vector<std::string>& args) {
  std::map<std::string, std::string> out;
  for (const std::string& a : args) out[a] = a + "_v";
  return out;
}

inline std::set<std::string> ValuesOf(const std::vector<std::string>& args) {
  std::set<std::string> out;
  for (const std::string& a : args) out.insert(a + "_v");
  return out;
}

// Three agents over a <-> b, c -> b, d -> c.
inline ValueScenario ThreeAgentValueScenario() {
  const std::vector<std::string> args = {"a", "b", "c", "d"};
  ValueFramework vaf(Af(args, {{"a", "b"}, {"b", "a"}, {"c", "b"}, {"d", "c"}}),
                     ValuesOf(args), Valuation(args),
                     {{{"a_v", "b_v"}}, {{"b_v", "a_v"}}, {{"c_v", "d_v"}}});
  return {std::move(vaf), {"a", "b", "c", "d"}, SemanticsKind::kPreferred};
}

// Two agents over the chain, preferring a_v and b_v respectively.
inline ValueFramework ChainValueFramework() {
  const std::vector<std::string> args = {"a", "b", "c"};
  return ValueFramework(ChainAf(), ValuesOf(args), Valuation(args),
                        {{{"a_v", "b_v"}}, {{"b_v", "a_v"}}});
}

inline ValueFramework ChainValueExpansion(
    std::vector<PreferenceRelation> preferences) {
  const std::vector<std::string> args = {"a", "b", "c", "d"};
  return ValueFramework(ChainWithNewAttacker(), ValuesOf(args), Valuation(args),
                        std::move(preferences));
}

// a <-> b, b -> c with opposing preferences over a_v and b_v.
inline ValueScenario OpposedValueScenario() {
  const std::vector<std::string> args = {"a", "b", "c"};
  ValueFramework vaf(Af(args, {{"a", "b"}, {"b", "a"}, {"b", "c"}}),
                     ValuesOf(args), Valuation(args),
                     {{{"a_v", "b_v"}}, {{"b_v", "a_v"}}});
  return {std::move(vaf), {"a", "b"}, SemanticsKind::kPreferred};
}

// Adds d -> a; the second agent also prefers d_v over a_v.
inline ValueScenario OpposedValueExpansion() {
  const std::vector<std::string> args = {"a", "b", "c", "d"};
  ValueFramework vaf(Af(args, {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"d", "a"}}),
                     ValuesOf(args), Valuation(args),
                     {{{"a_v", "b_v"}}, {{"b_v", "a_v"}, {"d_v", "a_v"}}});
  return {std::move(vaf), {"a", "b", "d"}, SemanticsKind::kPreferred};
}

}  // namespace argagree::testing

#endif  // ARGAGREE_TESTS_SUPPORT_FIXTURES_H_
