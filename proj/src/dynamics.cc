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

#include "argagree/dynamics.h"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "argagree/error.h"
#include "bit_graph.h"

namespace argagree {

using internal::Bits;

std::string_view ExpansionFailureName(ExpansionFailure failure) {
  switch (failure) {
    case ExpansionFailure::kNone:
      return "none";
    case ExpansionFailure::kIdentical:
      return "identical";
    case ExpansionFailure::kArgumentsRemoved:
      return "arguments_removed";
    case ExpansionFailure::kAttacksRemoved:
      return "attacks_removed";
    case ExpansionFailure::kAttackBetweenOld:
      return "attack_between_old";
    case ExpansionFailure::kTopicShrunk:
      return "topic_shrunk";
    case ExpansionFailure::kTopicAddsOld:
      return "topic_adds_old";
    case ExpansionFailure::kAgentsChanged:
      return "agents_changed";
    case ExpansionFailure::kSemanticsChanged:
      return "semantics_changed";
    case ExpansionFailure::kValuesRemoved:
      return "values_removed";
    case ExpansionFailure::kValuationChanged:
      return "valuation_changed";
    case ExpansionFailure::kAgentCountChanged:
      return "agent_count_changed";
    case ExpansionFailure::kPreferencesRemoved:
      return "preferences_removed";
    case ExpansionFailure::kPreferenceBetweenOld:
      return "preference_between_old";
  }
  return "unknown";
}

ExpansionFailure DiagnoseExpansion(const ArgFramework& before,
                                   const ArgFramework& after, bool normal) {
  if (before == after) return ExpansionFailure::kIdentical;
  for (const std::string& id : before.arguments()) {
    if (!after.contains(id)) return ExpansionFailure::kArgumentsRemoved;
  }
  for (const Attack& attack : before.attacks()) {
    if (!after.HasAttack(attack.from, attack.to)) {
      return ExpansionFailure::kAttacksRemoved;
    }
  }
  if (normal) {
    for (const Attack& attack : after.attacks()) {
      if (before.contains(attack.from) && before.contains(attack.to) &&
          !before.HasAttack(attack.from, attack.to)) {
        return ExpansionFailure::kAttackBetweenOld;
      }
    }
  }
  return ExpansionFailure::kNone;
}

bool IsExpansion(const ArgFramework& before, const ArgFramework& after) {
  return DiagnoseExpansion(before, after, false) == ExpansionFailure::kNone;
}

bool IsNormalExpansion(const ArgFramework& before, const ArgFramework& after) {
  return DiagnoseExpansion(before, after, true) == ExpansionFailure::kNone;
}

ExpansionFailure DiagnoseNormalExpansion(const AgreementScenario& before,
                                         const AgreementScenario& after) {
  if (auto f = DiagnoseExpansion(before.af, after.af, true);
      f != ExpansionFailure::kNone) {
    return f;
  }
  if (!before.topic.IsSubsetOf(after.topic)) {
    return ExpansionFailure::kTopicShrunk;
  }
  for (const std::string& id : Difference(after.topic, before.topic)) {
    if (before.af.contains(id)) return ExpansionFailure::kTopicAddsOld;
  }
  if (before.agents != after.agents) return ExpansionFailure::kAgentsChanged;
  return ExpansionFailure::kNone;
}

bool IsNormalExpansion(const AgreementScenario& before,
                       const AgreementScenario& after) {
  return DiagnoseNormalExpansion(before, after) == ExpansionFailure::kNone;
}

std::string_view PrincipleName(PrincipleKind kind) {
  return kind == PrincipleKind::kWeakCautiousMonotony ? "cm" : "srm";
}

std::optional<PrincipleKind> ParsePrinciple(std::string_view token) {
  if (token == "cm") return PrincipleKind::kWeakCautiousMonotony;
  if (token == "srm") return PrincipleKind::kStrongRelaxedMonotony;
  return std::nullopt;
}

namespace {

void RequireNormalExpansion(const ArgFramework& before,
                            const ArgFramework& after) {
  const ExpansionFailure failure = DiagnoseExpansion(before, after, true);
  if (failure != ExpansionFailure::kNone) {
    throw DomainError("dynamics.not_normal_expansion",
                      "pair is not a normal expansion (" +
                          std::string(ExpansionFailureName(failure)) + ")");
  }
}

std::optional<Attack> NewAttackOn(const ArgFramework& before,
                                  const ArgFramework& after,
                                  const ArgSet& extension) {
  for (const Attack& attack : after.attacks()) {
    if (!before.contains(attack.from) && extension.contains(attack.to)) {
      return attack;
    }
  }
  return std::nullopt;
}

// Arguments of `after` that strongly attack `set`.
std::vector<std::string> StrongAttackers(const ArgFramework& after,
                                         const ArgSet& set,
                                         const SearchLimits& limits) {
  const internal::BitGraph graph = internal::MakeBitGraph(after, limits);
  const Bits target = internal::ToBits(after, set);
  std::vector<std::string> out;
  for (std::size_t a = 0; a < graph.size; ++a) {
    if ((graph.targets[a] & target) == 0) continue;
    const bool defendable =
        !internal::ForEachConflictFree(graph, 0, [&](Bits candidate) {
          return !internal::StronglyDefendsBits(graph, candidate, a);
        });
    if (defendable) out.push_back(after.name(a));
  }
  return out;
}

struct Condition {
  bool value = true;
  std::optional<Attack> new_attack;
  std::optional<std::string> strong_attacker;
};

Condition EvaluateCondition(const ArgFramework& before,
                            const ArgFramework& after, const ArgSet& extension,
                            const ExtensionSet& after_extensions,
                            PrincipleKind principle,
                            const SearchLimits& limits) {
  Condition out;
  if (principle == PrincipleKind::kWeakCautiousMonotony) {
    out.new_attack = NewAttackOn(before, after, extension);
    out.value = !out.new_attack.has_value();
    return out;
  }
  const std::vector<std::string> strong =
      StrongAttackers(after, extension, limits);
  for (const ArgSet& e : after_extensions) {
    for (const std::string& a : strong) {
      if (e.contains(a)) {
        out.value = false;
        out.strong_attacker = a;
        return out;
      }
    }
  }
  return out;
}

std::optional<ArgSet> FirstSuperset(const ArgSet& extension,
                                    const ExtensionSet& candidates) {
  for (const ArgSet& candidate : candidates) {
    if (extension.IsSubsetOf(candidate)) return candidate;
  }
  return std::nullopt;
}

}  // namespace

bool CmCondition(const ArgFramework& before, const ArgFramework& after,
                 const ArgSet& extension) {
  RequireNormalExpansion(before, after);
  before.RequireSubset(extension, "extension");
  return !NewAttackOn(before, after, extension).has_value();
}

bool IsStrongAttacker(const ArgFramework& before, const ArgFramework& after,
                      std::string_view argument, const ArgSet& set,
                      const SearchLimits& limits) {
  if (!IsExpansion(before, after)) {
    throw DomainError("dynamics.not_expansion", "pair is not an expansion");
  }
  before.RequireSubset(set, "attacked set");
  after.RequireMember(argument, "attacker");
  const std::vector<std::string> strong = StrongAttackers(after, set, limits);
  return std::find(strong.begin(), strong.end(), argument) != strong.end();
}

bool SrmCondition(const ArgFramework& before, const ArgFramework& after,
                  const ArgSet& extension, SemanticsKind sem,
                  const SearchLimits& limits) {
  RequireNormalExpansion(before, after);
  before.RequireSubset(extension, "extension");
  return EvaluateCondition(before, after, extension,
                           Enumerate(after, sem, limits),
                           PrincipleKind::kStrongRelaxedMonotony, limits)
      .value;
}

PrincipleVerdict CheckPrinciple(const ArgFramework& before,
                                const ArgFramework& after, SemanticsKind sem,
                                PrincipleKind principle,
                                const SearchLimits& limits) {
  RequireNormalExpansion(before, after);
  const ExtensionSet after_extensions = Enumerate(after, sem, limits);
  PrincipleVerdict verdict;
  for (const ArgSet& e : Enumerate(before, sem, limits)) {
    Condition condition = EvaluateCondition(before, after, e, after_extensions,
                                            principle, limits);
    ExtensionWitness witness{
        e, condition.value, FirstSuperset(e, after_extensions),
        std::move(condition.new_attack), std::move(condition.strong_attacker)};
    if (witness.condition && !witness.superset) verdict.holds = false;
    verdict.witnesses.push_back(std::move(witness));
  }
  return verdict;
}

ExtensionSet EnforcePrinciple(const ArgFramework& before,
                              const ArgFramework& after, const ArgSet& topic,
                              SemanticsKind sem, PrincipleKind principle,
                              const SearchLimits& limits) {
  RequireNormalExpansion(before, after);
  after.RequireSubset(topic, "topic");
  const ExtensionSet original = Enumerate(after, sem, limits);
  const internal::BitGraph graph = internal::MakeBitGraph(after, limits);
  ExtensionSet result = original;

  for (const ArgSet& e : Enumerate(before, sem, limits)) {
    if (FirstSuperset(e, result)) continue;
    if (!EvaluateCondition(before, after, e, original, principle, limits)
             .value) {
      continue;
    }
    const Bits forced = internal::ToBits(after, e);
    if (!graph.ConflictFree(forced)) {
      throw Error(ErrorCategory::kDomain, "enforce.infeasible",
                  "no conflict-free superset of " + ToString(e));
    }
    std::optional<ArgSet> best;
    Degree best_score;
    std::size_t best_overlap = 0;
    internal::ForEachConflictFree(graph, forced, [&](Bits bits) {
      ArgSet candidate = internal::FromBits(after, bits);
      const Degree score =
          Satisfaction(original, topic, candidate, SimilarityKind::kHamming);
      const std::size_t overlap = Intersection(candidate, topic).size();
      const bool better = !best || score > best_score ||
                          (score == best_score &&
                           (overlap > best_overlap ||
                            (overlap == best_overlap && candidate < *best)));
      if (better) {
        best = std::move(candidate);
        best_score = score;
        best_overlap = overlap;
      }
      return true;
    });
    result.push_back(*best);
  }
  Canonicalize(result);
  return result;
}

Degree MinAgreementLowerBound(std::size_t topic_size) {
  if (topic_size == 0) {
    throw DomainError("bounds.empty_topic", "topic size must be positive");
  }
  const auto n = static_cast<std::int64_t>(topic_size);
  return Degree(n / 2, n);
}

Degree DeltaUpperBound(const ArgSet& topic_before, std::size_t topic_after_size,
                       std::size_t common_core_size) {
  if (topic_after_size == 0) {
    throw DomainError("bounds.empty_topic", "topic size must be positive");
  }
  if (common_core_size > topic_before.size()) {
    throw DomainError("bounds.core_too_large",
                      "core larger than the initial topic");
  }
  const auto n = static_cast<std::int64_t>(topic_after_size);
  const Rational bound =
      1 - Rational(n / 2 + static_cast<std::int64_t>(common_core_size), n);
  return Degree(bound < 0 ? Rational(0) : bound);
}

ArgSet MaxCommonCore(const std::vector<ExtensionSet>& agents,
                     const SearchLimits& limits) {
  if (agents.empty()) {
    throw DomainError("bounds.no_agents", "no agents");
  }
  std::size_t combinations = 1;
  for (const ExtensionSet& extensions : agents) {
    if (extensions.empty()) {
      throw DomainError("agreement.no_extensions", "empty extension set");
    }
    combinations *= extensions.size();
    if (combinations > limits.max_combinations) {
      throw ResourceError("search.combination_cap",
                          "too many extension combinations (cap " +
                              std::to_string(limits.max_combinations) + ")");
    }
  }
  std::vector<std::size_t> choice(agents.size(), 0);
  std::optional<ArgSet> best;
  while (true) {
    ArgSet core = agents[0][choice[0]];
    for (std::size_t i = 1; i < agents.size(); ++i) {
      core = Intersection(core, agents[i][choice[i]]);
    }
    if (!best || core.size() > best->size() ||
        (core.size() == best->size() && core < *best)) {
      best = std::move(core);
    }
    std::size_t i = 0;
    while (i < agents.size() && ++choice[i] == agents[i].size()) {
      choice[i++] = 0;
    }
    if (i == agents.size()) break;
  }
  return *best;
}

ArgSet MaxCommonExtensionCore(const ArgFramework& af,
                              const std::vector<SemanticsKind>& agents,
                              const SearchLimits& limits) {
  std::vector<ExtensionSet> extensions;
  for (SemanticsKind agent : agents) {
    extensions.push_back(Enumerate(af, agent, limits));
  }
  return MaxCommonCore(extensions, limits);
}

}  // namespace argagree
