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

#include "argagree/vaf.h"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "argagree/error.h"

namespace argagree {

void ValidatePreferenceRelation(const PreferenceRelation& relation,
                                const std::set<std::string>& values) {
  for (const auto& [u, w] : relation) {
    if (!values.contains(u) || !values.contains(w)) {
      throw ValidationError(
          "vaf.preference_unknown_value",
          "preference (" + u + "," + w + ") mentions an undeclared value");
    }
    if (u == w) {
      throw ValidationError("vaf.preference_reflexive",
                            "preference (" + u + "," + u + ") is reflexive");
    }
  }
  for (const auto& [u, w] : relation) {
    if (relation.contains({w, u})) {
      throw ValidationError("vaf.preference_symmetric",
                            "preferences (" + u + "," + w + ") and (" + w +
                                "," + u + ") are both present");
    }
  }
  for (const auto& [u, w] : relation) {
    for (auto it = relation.lower_bound({w, ""});
         it != relation.end() && it->first == w; ++it) {
      if (!relation.contains({u, it->second})) {
        throw ValidationError("vaf.preference_not_transitive",
                              "preferences (" + u + "," + w + ") and (" + w +
                                  "," + it->second + ") lack (" + u + "," +
                                  it->second + ")");
      }
    }
  }
}

ValueFramework::ValueFramework(ArgFramework af, std::set<std::string> values,
                               std::map<std::string, std::string> valuation,
                               std::vector<PreferenceRelation> preferences)
    : af_(std::move(af)),
      values_(std::move(values)),
      valuation_(std::move(valuation)),
      preferences_(std::move(preferences)) {
  for (const Attack& attack : af_.attacks()) {
    if (attack.from == attack.to) {
      throw ValidationError("vaf.self_attack",
                            "argument '" + attack.from + "' attacks itself");
    }
  }
  if (values_.empty()) {
    throw ValidationError("vaf.no_values", "value set is empty");
  }
  for (const std::string& v : values_) {
    if (!IsIdentifier(v)) {
      throw ValidationError("vaf.bad_identifier",
                            "invalid value identifier '" + v + "'");
    }
  }
  for (const auto& [argument, value] : valuation_) {
    if (!af_.contains(argument)) {
      throw ValidationError("vaf.valuation_unknown_argument",
                            "valuation of unknown argument '" + argument + "'");
    }
    if (!values_.contains(value)) {
      throw ValidationError("vaf.valuation_unknown_value",
                            "argument '" + argument +
                                "' mapped to undeclared value '" + value + "'");
    }
  }
  for (const std::string& argument : af_.arguments()) {
    if (!valuation_.contains(argument)) {
      throw ValidationError("vaf.valuation_incomplete",
                            "argument '" + argument + "' has no value");
    }
  }
  if (preferences_.empty()) {
    throw ValidationError("vaf.no_agents",
                          "at least one preference relation is required");
  }
  for (const PreferenceRelation& relation : preferences_) {
    ValidatePreferenceRelation(relation, values_);
  }
}

const std::string& ValueFramework::ValueOf(std::string_view argument) const {
  auto it = valuation_.find(std::string(argument));
  if (it == valuation_.end()) {
    throw DomainError("af.not_member",
                      "'" + std::string(argument) + "' is not an argument");
  }
  return it->second;
}

void ValueScenario::Validate() const {
  for (const std::string& id : topic) {
    if (!vaf.af().contains(id)) {
      throw ValidationError("aas.topic_not_argument",
                            "topic member '" + id + "' is not an argument");
    }
  }
}

namespace {

void RequireAgent(const ValueFramework& vaf, std::size_t index) {
  if (index >= vaf.agent_count()) {
    throw DomainError("vaf.agent_out_of_range",
                      "agent index " + std::to_string(index) +
                          " out of range (agents: " +
                          std::to_string(vaf.agent_count()) + ")");
  }
}

}  // namespace

ArgFramework SubjectiveFramework(const ValueFramework& vaf,
                                 std::size_t agent_index) {
  RequireAgent(vaf, agent_index);
  const PreferenceRelation& prefs = vaf.preferences()[agent_index];
  std::vector<Attack> kept;
  for (const Attack& attack : vaf.af().attacks()) {
    if (!prefs.contains({vaf.ValueOf(attack.to), vaf.ValueOf(attack.from)})) {
      kept.push_back(attack);
    }
  }
  return ArgFramework(vaf.af().arguments(), std::move(kept));
}

AgreementProfile ToAgreementProfile(const ValueScenario& scenario,
                                    const SearchLimits& limits) {
  scenario.Validate();
  AgreementProfile profile{scenario.topic, {}};
  for (std::size_t i = 0; i < scenario.vaf.agent_count(); ++i) {
    profile.agents.push_back(
        Enumerate(SubjectiveFramework(scenario.vaf, i), scenario.sem, limits));
  }
  return profile;
}

Degree ValueDegree(const ValueScenario& scenario, DegreeKind dkind,
                   SimilarityKind skind, const SearchLimits& limits) {
  return DegreeOfAgreement(ToAgreementProfile(scenario, limits), dkind, skind,
                           limits);
}

Degree ValueTwoAgentSatisfaction(const ValueScenario& scenario,
                                 std::size_t first, std::size_t second,
                                 SimilarityKind skind,
                                 const SearchLimits& limits) {
  RequireAgent(scenario.vaf, first);
  RequireAgent(scenario.vaf, second);
  scenario.Validate();
  return TwoAgentSatisfaction(
      Enumerate(SubjectiveFramework(scenario.vaf, first), scenario.sem, limits),
      Enumerate(SubjectiveFramework(scenario.vaf, second), scenario.sem,
                limits),
      scenario.topic, skind);
}

ValueFramework StripValue(const ValueFramework& vaf, std::string_view value) {
  if (!vaf.values().contains(std::string(value))) {
    throw DomainError("vaf.unknown_value",
                      "'" + std::string(value) + "' is not a value");
  }
  std::vector<PreferenceRelation> stripped;
  for (const PreferenceRelation& relation : vaf.preferences()) {
    PreferenceRelation kept;
    for (const ValuePair& pair : relation) {
      if (pair.first != value && pair.second != value) kept.insert(pair);
    }
    stripped.push_back(std::move(kept));
  }
  return ValueFramework(vaf.af(), vaf.values(), vaf.valuation(),
                        std::move(stripped));
}

Rational ValueImpact(const ValueScenario& scenario, std::string_view value,
                     DegreeKind dkind, SimilarityKind skind,
                     const SearchLimits& limits) {
  const ValueScenario stripped{StripValue(scenario.vaf, value), scenario.topic,
                               scenario.sem};
  return ValueDegree(scenario, dkind, skind, limits).value() -
         ValueDegree(stripped, dkind, skind, limits).value();
}

Rational ValueSatisfactionImpact(const ValueScenario& scenario,
                                 std::string_view value, std::size_t first,
                                 std::size_t second, SimilarityKind skind,
                                 const SearchLimits& limits) {
  const ValueScenario stripped{StripValue(scenario.vaf, value), scenario.topic,
                               scenario.sem};
  return ValueTwoAgentSatisfaction(scenario, first, second, skind, limits)
             .value() -
         ValueTwoAgentSatisfaction(stripped, first, second, skind, limits)
             .value();
}

ExpansionFailure DiagnoseValueExpansion(const ValueFramework& before,
                                        const ValueFramework& after,
                                        bool normal) {
  if (auto f = DiagnoseExpansion(before.af(), after.af(), normal);
      f != ExpansionFailure::kNone) {
    return f;
  }
  if (!std::includes(after.values().begin(), after.values().end(),
                     before.values().begin(), before.values().end())) {
    return ExpansionFailure::kValuesRemoved;
  }
  for (const auto& [argument, value] : before.valuation()) {
    if (after.ValueOf(argument) != value) {
      return ExpansionFailure::kValuationChanged;
    }
  }
  if (before.agent_count() != after.agent_count()) {
    return ExpansionFailure::kAgentCountChanged;
  }
  for (std::size_t i = 0; i < before.agent_count(); ++i) {
    const PreferenceRelation& old_prefs = before.preferences()[i];
    const PreferenceRelation& new_prefs = after.preferences()[i];
    if (!std::includes(new_prefs.begin(), new_prefs.end(), old_prefs.begin(),
                       old_prefs.end())) {
      return ExpansionFailure::kPreferencesRemoved;
    }
  }
  if (normal) {
    for (std::size_t i = 0; i < before.agent_count(); ++i) {
      for (const ValuePair& pair : after.preferences()[i]) {
        if (before.values().contains(pair.first) &&
            before.values().contains(pair.second) &&
            !before.preferences()[i].contains(pair)) {
          return ExpansionFailure::kPreferenceBetweenOld;
        }
      }
    }
  }
  return ExpansionFailure::kNone;
}

bool IsValueNormalExpansion(const ValueFramework& before,
                            const ValueFramework& after) {
  return DiagnoseValueExpansion(before, after, true) == ExpansionFailure::kNone;
}

ExpansionFailure DiagnoseValueNormalExpansion(const ValueScenario& before,
                                              const ValueScenario& after) {
  if (auto f = DiagnoseValueExpansion(before.vaf, after.vaf, true);
      f != ExpansionFailure::kNone) {
    return f;
  }
  if (!before.topic.IsSubsetOf(after.topic)) {
    return ExpansionFailure::kTopicShrunk;
  }
  for (const std::string& id : Difference(after.topic, before.topic)) {
    if (before.vaf.af().contains(id)) return ExpansionFailure::kTopicAddsOld;
  }
  if (before.sem != after.sem) return ExpansionFailure::kSemanticsChanged;
  return ExpansionFailure::kNone;
}

bool IsValueNormalExpansion(const ValueScenario& before,
                            const ValueScenario& after) {
  return DiagnoseValueNormalExpansion(before, after) == ExpansionFailure::kNone;
}

Degree ValueAgreementDelta(const ValueScenario& before,
                           const ValueScenario& after, DegreeKind dkind,
                           SimilarityKind skind, const SearchLimits& limits) {
  return AbsDifference(ValueDegree(before, dkind, skind, limits),
                       ValueDegree(after, dkind, skind, limits));
}

}  // namespace argagree
