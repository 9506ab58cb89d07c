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

#ifndef ARGAGREE_DYNAMICS_H_
#define ARGAGREE_DYNAMICS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argagree/agreement.h"
#include "argagree/arg_set.h"
#include "argagree/framework.h"
#include "argagree/rational.h"
#include "argagree/semantics.h"

namespace argagree {

bool IsExpansion(const ArgFramework& before, const ArgFramework& after);
// Expansion adding no attack between two pre-existing arguments.
bool IsNormalExpansion(const ArgFramework& before, const ArgFramework& after);

// First failing conjunct of a scenario normal expansion, in checking order.
enum class ExpansionFailure {
  kNone,
  kIdentical,         // frameworks are equal
  kArgumentsRemoved,  // some old argument is missing
  kAttacksRemoved,    // some old attack is missing
  kAttackBetweenOld,  // new attack between two old arguments
  kTopicShrunk,       // old topic not contained in the new one
  kTopicAddsOld,      // new topic member was already an argument
  kAgentsChanged,     // semantics sequence differs
  kSemanticsChanged,  // shared semantics differs
  kValuesRemoved,     // some old value is missing
  kValuationChanged,  // an old argument changed value
  kAgentCountChanged,
  kPreferencesRemoved,   // some old preference pair is missing
  kPreferenceBetweenOld  // new preference between two old values
};

// Snake-case token, e.g. "topic_adds_old".
std::string_view ExpansionFailureName(ExpansionFailure failure);

// kNone when `after` is an expansion (normal when `normal` is set).
ExpansionFailure DiagnoseExpansion(const ArgFramework& before,
                                   const ArgFramework& after, bool normal);
ExpansionFailure DiagnoseNormalExpansion(const AgreementScenario& before,
                                         const AgreementScenario& after);
bool IsNormalExpansion(const AgreementScenario& before,
                       const AgreementScenario& after);

enum class PrincipleKind { kWeakCautiousMonotony, kStrongRelaxedMonotony };

// "cm", "srm"
std::string_view PrincipleName(PrincipleKind kind);
std::optional<PrincipleKind> ParsePrinciple(std::string_view token);

// The following require a normal expansion and throw a domain error
// otherwise.

// No new argument attacks `extension`.
bool CmCondition(const ArgFramework& before, const ArgFramework& after,
                 const ArgSet& extension);
// Requires only an expansion.
bool IsStrongAttacker(const ArgFramework& before, const ArgFramework& after,
                      std::string_view argument, const ArgSet& set,
                      const SearchLimits& limits = {});
bool SrmCondition(const ArgFramework& before, const ArgFramework& after,
                  const ArgSet& extension, SemanticsKind sem,
                  const SearchLimits& limits = {});

struct ExtensionWitness {
  ArgSet extension;
  bool condition = false;
  // First extension of the expansion containing `extension`.
  std::optional<ArgSet> superset;
  // Evidence when the condition is false.
  std::optional<Attack> new_attack;
  std::optional<std::string> strong_attacker;
};

struct PrincipleVerdict {
  bool holds = true;
  std::vector<ExtensionWitness> witnesses;
};

PrincipleVerdict CheckPrinciple(const ArgFramework& before,
                                const ArgFramework& after, SemanticsKind sem,
                                PrincipleKind principle,
                                const SearchLimits& limits = {});

// Extension set of `after` extended so that every extension of `before`
// with a true condition is covered. Repairs maximize Hamming satisfaction
// over `topic`, then topic overlap, then come lexicographically first.
ExtensionSet EnforcePrinciple(const ArgFramework& before,
                              const ArgFramework& after, const ArgSet& topic,
                              SemanticsKind sem, PrincipleKind principle,
                              const SearchLimits& limits = {});

// floor(n/2)/n; n = 0 is a domain error.
Degree MinAgreementLowerBound(std::size_t topic_size);

// 1 - (floor(|T'|/2) + core)/|T'|, clamped at 0.
Degree DeltaUpperBound(const ArgSet& topic_before, std::size_t topic_after_size,
                       std::size_t common_core_size);

// Largest intersection over one extension per agent; ties go to the
// lexicographically smallest intersection.
ArgSet MaxCommonCore(const std::vector<ExtensionSet>& agents,
                     const SearchLimits& limits = {});
ArgSet MaxCommonExtensionCore(const ArgFramework& af,
                              const std::vector<SemanticsKind>& agents,
                              const SearchLimits& limits = {});

}  // namespace argagree

#endif  // ARGAGREE_DYNAMICS_H_
