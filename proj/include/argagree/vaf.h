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

#ifndef ARGAGREE_VAF_H_
#define ARGAGREE_VAF_H_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argagree/agreement.h"
#include "argagree/arg_set.h"
#include "argagree/dynamics.h"
#include "argagree/framework.h"
#include "argagree/rational.h"
#include "argagree/semantics.h"

namespace argagree {

// (u, w): value u is preferred over value w.
using ValuePair = std::pair<std::string, std::string>;
using PreferenceRelation = std::set<ValuePair>;

// Validated value-based framework: no self-attacks, total valuation onto
// declared values, and every relation a strict partial order.
class ValueFramework {
 public:
  // Throws a validation error whose code names the violated constraint.
  ValueFramework(ArgFramework af, std::set<std::string> values,
                 std::map<std::string, std::string> valuation,
                 std::vector<PreferenceRelation> preferences);

  const ArgFramework& af() const { return af_; }
  const std::set<std::string>& values() const { return values_; }
  const std::map<std::string, std::string>& valuation() const {
    return valuation_;
  }
  const std::vector<PreferenceRelation>& preferences() const {
    return preferences_;
  }
  std::size_t agent_count() const { return preferences_.size(); }
  const std::string& ValueOf(std::string_view argument) const;

  friend bool operator==(const ValueFramework&,
                         const ValueFramework&) = default;

 private:
  ArgFramework af_;
  std::set<std::string> values_;
  std::map<std::string, std::string> valuation_;
  std::vector<PreferenceRelation> preferences_;
};

// Throws the same errors as the constructor for a lone relation.
void ValidatePreferenceRelation(const PreferenceRelation& relation,
                                const std::set<std::string>& values);

struct ValueScenario {
  ValueFramework vaf;
  ArgSet topic;
  SemanticsKind sem = SemanticsKind::kPreferred;

  void Validate() const;
};

// Drops attack (a, b) when the agent prefers val(b) over val(a).
ArgFramework SubjectiveFramework(const ValueFramework& vaf,
                                 std::size_t agent_index);

// One extension set per agent, each computed on its subjective framework.
AgreementProfile ToAgreementProfile(const ValueScenario& scenario,
                                    const SearchLimits& limits = {});

Degree ValueDegree(const ValueScenario& scenario, DegreeKind dkind,
                   SimilarityKind skind, const SearchLimits& limits = {});
Degree ValueTwoAgentSatisfaction(const ValueScenario& scenario,
                                 std::size_t first, std::size_t second,
                                 SimilarityKind skind,
                                 const SearchLimits& limits = {});

// Removes every preference pair mentioning `value` from every agent.
ValueFramework StripValue(const ValueFramework& vaf, std::string_view value);

// Degree before stripping minus degree after; signed.
Rational ValueImpact(const ValueScenario& scenario, std::string_view value,
                     DegreeKind dkind, SimilarityKind skind,
                     const SearchLimits& limits = {});
// Both agents see the stripped relations.
Rational ValueSatisfactionImpact(const ValueScenario& scenario,
                                 std::string_view value, std::size_t first,
                                 std::size_t second, SimilarityKind skind,
                                 const SearchLimits& limits = {});

ExpansionFailure DiagnoseValueExpansion(const ValueFramework& before,
                                        const ValueFramework& after,
                                        bool normal);
bool IsValueNormalExpansion(const ValueFramework& before,
                            const ValueFramework& after);
ExpansionFailure DiagnoseValueNormalExpansion(const ValueScenario& before,
                                              const ValueScenario& after);
bool IsValueNormalExpansion(const ValueScenario& before,
                            const ValueScenario& after);

Degree ValueAgreementDelta(const ValueScenario& before,
                           const ValueScenario& after, DegreeKind dkind,
                           SimilarityKind skind,
                           const SearchLimits& limits = {});

}  // namespace argagree

#endif  // ARGAGREE_VAF_H_
