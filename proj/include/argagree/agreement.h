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

#ifndef ARGAGREE_AGREEMENT_H_
#define ARGAGREE_AGREEMENT_H_

#include <optional>
#include <string_view>
#include <vector>

#include "argagree/arg_set.h"
#include "argagree/framework.h"
#include "argagree/rational.h"
#include "argagree/semantics.h"

namespace argagree {

enum class SimilarityKind { kIntersection, kComplement, kHamming };
enum class DegreeKind { kMin, kMean, kMedian };

inline constexpr DegreeKind kAllDegreeKinds[] = {
    DegreeKind::kMin, DegreeKind::kMean, DegreeKind::kMedian};

// "i", "c", "h"
std::string_view SimilarityName(SimilarityKind kind);
std::optional<SimilarityKind> ParseSimilarity(std::string_view token);
// "min", "mean", "med"
std::string_view DegreeKindName(DegreeKind kind);
std::optional<DegreeKind> ParseDegreeKind(std::string_view token);

struct AgreementScenario {
  ArgFramework af;
  ArgSet topic;
  std::vector<SemanticsKind> agents;

  // Throws a validation error unless topic ⊆ args and agents is nonempty.
  void Validate() const;
};

// Per-agent extension sets over a shared topic. Every degree computation
// runs on this form, whichever way the extension sets were obtained.
struct AgreementProfile {
  ArgSet topic;
  std::vector<ExtensionSet> agents;
};

AgreementProfile Realize(const AgreementScenario& scenario,
                         const SearchLimits& limits = {});

Degree Similarity(SimilarityKind kind, const ArgSet& e, const ArgSet& s,
                  const ArgSet& topic);

// Best similarity between `s` and any of `extensions`.
Degree Satisfaction(const ExtensionSet& extensions, const ArgSet& topic,
                    const ArgSet& s, SimilarityKind kind);
Degree Satisfaction(const ArgFramework& af, const ArgSet& topic,
                    SemanticsKind agent, const ArgSet& s, SimilarityKind kind,
                    const SearchLimits& limits = {});

Degree TwoAgentSatisfaction(const ExtensionSet& first,
                            const ExtensionSet& second, const ArgSet& topic,
                            SimilarityKind kind);
Degree TwoAgentSatisfaction(const ArgFramework& af, const ArgSet& topic,
                            SemanticsKind first, SemanticsKind second,
                            SimilarityKind kind,
                            const SearchLimits& limits = {});

struct AgreementResult {
  Degree degree;
  // Smallest, then lexicographically first, maximizing topic subset.
  ArgSet witness;
};

// Exhaustive over all subsets of the topic. Throws a resource error when
// the topic exceeds `limits.max_topic`.
AgreementResult DegreeWithWitness(const AgreementProfile& profile,
                                  DegreeKind dkind, SimilarityKind skind,
                                  const SearchLimits& limits = {});

Degree DegreeOfAgreement(const AgreementProfile& profile, DegreeKind dkind,
                         SimilarityKind skind, const SearchLimits& limits = {});
Degree DegreeOfAgreement(const AgreementScenario& scenario, DegreeKind dkind,
                         SimilarityKind skind, const SearchLimits& limits = {});

Degree AgreementDelta(const AgreementScenario& before,
                      const AgreementScenario& after, DegreeKind dkind,
                      SimilarityKind skind, const SearchLimits& limits = {});

// Aggregate used by the degree of the given kind; `values` nonempty.
Rational Aggregate(DegreeKind kind, std::vector<Degree> values);

// Even-length input yields the mean of the two middle values.
Degree Median(std::vector<Degree> values);

}  // namespace argagree

#endif  // ARGAGREE_AGREEMENT_H_
