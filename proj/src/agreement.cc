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

#include "argagree/agreement.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "argagree/error.h"

namespace argagree {

std::string_view SimilarityName(SimilarityKind kind) {
  switch (kind) {
    case SimilarityKind::kIntersection:
      return "i";
    case SimilarityKind::kComplement:
      return "c";
    case SimilarityKind::kHamming:
      return "h";
  }
  return "?";
}

std::optional<SimilarityKind> ParseSimilarity(std::string_view token) {
  for (SimilarityKind kind :
       {SimilarityKind::kIntersection, SimilarityKind::kComplement,
        SimilarityKind::kHamming}) {
    if (SimilarityName(kind) == token) return kind;
  }
  return std::nullopt;
}

std::string_view DegreeKindName(DegreeKind kind) {
  switch (kind) {
    case DegreeKind::kMin:
      return "min";
    case DegreeKind::kMean:
      return "mean";
    case DegreeKind::kMedian:
      return "med";
  }
  return "?";
}

std::optional<DegreeKind> ParseDegreeKind(std::string_view token) {
  for (DegreeKind kind : kAllDegreeKinds) {
    if (DegreeKindName(kind) == token) return kind;
  }
  return std::nullopt;
}

void AgreementScenario::Validate() const {
  if (agents.empty()) {
    throw ValidationError("aas.no_agents", "scenario needs at least one agent");
  }
  for (const std::string& id : topic) {
    if (!af.contains(id)) {
      throw ValidationError("aas.topic_not_argument",
                            "topic member '" + id + "' is not an argument");
    }
  }
}

AgreementProfile Realize(const AgreementScenario& scenario,
                         const SearchLimits& limits) {
  scenario.Validate();
  AgreementProfile profile{scenario.topic, {}};
  for (SemanticsKind agent : scenario.agents) {
    profile.agents.push_back(Enumerate(scenario.af, agent, limits));
  }
  return profile;
}

namespace {

using Mask = std::uint64_t;

int Count(Mask m) { return std::popcount(m); }

Rational Ratio(int num, int den) {
  return den == 0 ? Rational(1) : Rational(num, den);
}

// Similarity on characteristic vectors over a topic of `size` elements.
Rational MaskSimilarity(SimilarityKind kind, Mask e, Mask s, int size) {
  const Mask full = size == 64 ? ~Mask{0} : (Mask{1} << size) - 1;
  switch (kind) {
    case SimilarityKind::kIntersection:
      return Ratio(Count(e & s), Count(e | s));
    case SimilarityKind::kComplement: {
      const Mask ec = full & ~e;
      const Mask sc = full & ~s;
      return Ratio(Count(ec & sc), Count(ec | sc));
    }
    case SimilarityKind::kHamming:
      return Ratio(size - Count((e ^ s) & full), size);
  }
  return Rational(0);
}

Mask Project(const ArgSet& set, const ArgSet& topic) {
  Mask out = 0;
  std::size_t i = 0;
  for (const std::string& id : topic) {
    if (set.contains(id)) out |= Mask{1} << i;
    ++i;
  }
  return out;
}

// True when `a` precedes `b` among witnesses: fewer members, then the one
// holding the lowest differing element.
bool WitnessBefore(Mask a, Mask b) {
  if (Count(a) != Count(b)) return Count(a) < Count(b);
  const Mask diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

std::vector<std::vector<Mask>> ProjectProfile(const AgreementProfile& profile) {
  std::vector<std::vector<Mask>> out;
  for (const ExtensionSet& extensions : profile.agents) {
    if (extensions.empty()) {
      throw DomainError("agreement.no_extensions",
                        "agent has an empty extension set");
    }
    std::vector<Mask> masks;
    for (const ArgSet& e : extensions)
      masks.push_back(Project(e, profile.topic));
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    out.push_back(std::move(masks));
  }
  return out;
}

ArgSet Unproject(Mask mask, const ArgSet& topic) {
  std::vector<std::string> members;
  std::size_t i = 0;
  for (const std::string& id : topic) {
    if ((mask >> i) & 1) members.push_back(id);
    ++i;
  }
  return ArgSet(std::move(members));
}

// Integer scores share the denominator |T|, so aggregates compare exactly
// on scaled numerators.
std::pair<std::int64_t, Mask> MaximizeHamming(
    const std::vector<std::vector<Mask>>& agents, int size, DegreeKind kind) {
  const Mask full = (Mask{1} << size) - 1;
  std::vector<std::int64_t> scores(agents.size());
  std::int64_t best = -1;
  Mask witness = 0;
  for (Mask s = 0;; ++s) {
    for (std::size_t i = 0; i < agents.size(); ++i) {
      int top = 0;
      for (Mask e : agents[i]) top = std::max(top, size - Count(e ^ s));
      scores[i] = top;
    }
    std::int64_t key = 0;
    switch (kind) {
      case DegreeKind::kMin:
        key = *std::min_element(scores.begin(), scores.end());
        break;
      case DegreeKind::kMean:
        for (std::int64_t v : scores) key += v;
        break;
      case DegreeKind::kMedian: {
        const std::size_t mid = scores.size() / 2;
        std::nth_element(scores.begin(), scores.begin() + mid, scores.end());
        key = scores[mid];
        if (scores.size() % 2 == 0) {
          key += *std::max_element(scores.begin(), scores.begin() + mid);
        } else {
          key *= 2;
        }
        break;
      }
    }
    if (key > best || (key == best && WitnessBefore(s, witness))) {
      best = key;
      witness = s;
    }
    if (s == full) break;
  }
  return {best, witness};
}

}  // namespace

Degree Similarity(SimilarityKind kind, const ArgSet& e, const ArgSet& s,
                  const ArgSet& topic) {
  const ArgSet e_in = Intersection(topic, e);
  const ArgSet s_in = Intersection(topic, s);
  const int size = static_cast<int>(topic.size());
  const int both_in = static_cast<int>(Intersection(e_in, s_in).size());
  const int either_in = static_cast<int>(Union(e_in, s_in).size());
  const int both_out = size - either_in;
  switch (kind) {
    case SimilarityKind::kIntersection:
      return Degree(Ratio(both_in, either_in));
    case SimilarityKind::kComplement:
      return Degree(Ratio(both_out, size - both_in));
    case SimilarityKind::kHamming:
      return Degree(Ratio(both_in + both_out, size));
  }
  return Degree::Zero();
}

Degree Satisfaction(const ExtensionSet& extensions, const ArgSet& topic,
                    const ArgSet& s, SimilarityKind kind) {
  if (extensions.empty()) {
    throw DomainError("agreement.no_extensions", "empty extension set");
  }
  Degree best = Degree::Zero();
  for (const ArgSet& e : extensions) {
    best = std::max(best, Similarity(kind, e, s, topic));
  }
  return best;
}

Degree Satisfaction(const ArgFramework& af, const ArgSet& topic,
                    SemanticsKind agent, const ArgSet& s, SimilarityKind kind,
                    const SearchLimits& limits) {
  af.RequireSubset(topic, "topic");
  return Satisfaction(Enumerate(af, agent, limits), topic, s, kind);
}

Degree TwoAgentSatisfaction(const ExtensionSet& first,
                            const ExtensionSet& second, const ArgSet& topic,
                            SimilarityKind kind) {
  if (second.empty()) {
    throw DomainError("agreement.no_extensions", "empty extension set");
  }
  Degree best = Degree::Zero();
  for (const ArgSet& e : second) {
    best = std::max(best, Satisfaction(first, topic, e, kind));
  }
  return best;
}

Degree TwoAgentSatisfaction(const ArgFramework& af, const ArgSet& topic,
                            SemanticsKind first, SemanticsKind second,
                            SimilarityKind kind, const SearchLimits& limits) {
  af.RequireSubset(topic, "topic");
  return TwoAgentSatisfaction(Enumerate(af, first, limits),
                              Enumerate(af, second, limits), topic, kind);
}

Rational Aggregate(DegreeKind kind, std::vector<Degree> values) {
  if (values.empty()) {
    throw DomainError("agreement.empty_sequence", "no values to aggregate");
  }
  switch (kind) {
    case DegreeKind::kMin:
      return std::min_element(values.begin(), values.end())->value();
    case DegreeKind::kMean: {
      Rational sum(0);
      for (const Degree& d : values) sum += d.value();
      return sum / static_cast<std::int64_t>(values.size());
    }
    case DegreeKind::kMedian:
      return Median(std::move(values)).value();
  }
  return Rational(0);
}

Degree Median(std::vector<Degree> values) {
  if (values.empty()) {
    throw DomainError("agreement.empty_sequence", "median of empty sequence");
  }
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return Degree((values[mid - 1].value() + values[mid].value()) / 2);
}

AgreementResult DegreeWithWitness(const AgreementProfile& profile,
                                  DegreeKind dkind, SimilarityKind skind,
                                  const SearchLimits& limits) {
  if (profile.agents.empty()) {
    throw DomainError("agreement.no_agents", "profile has no agents");
  }
  const std::size_t cap = std::min<std::size_t>(limits.max_topic, 62);
  if (profile.topic.size() > cap) {
    throw ResourceError("search.topic_cap",
                        "topic has " + std::to_string(profile.topic.size()) +
                            " arguments, above the powerset cap of " +
                            std::to_string(cap));
  }
  const auto agents = ProjectProfile(profile);
  const int size = static_cast<int>(profile.topic.size());
  const auto n = static_cast<std::int64_t>(agents.size());

  if (skind == SimilarityKind::kHamming && size > 0) {
    const auto [key, witness] = MaximizeHamming(agents, size, dkind);
    std::int64_t den = size;
    if (dkind == DegreeKind::kMean) den *= n;
    if (dkind == DegreeKind::kMedian) den *= 2;
    return {Degree(Rational(key, den)), Unproject(witness, profile.topic)};
  }

  const Mask full = size == 0 ? 0 : (Mask{1} << size) - 1;
  Rational best(-1);
  Mask witness = 0;
  std::vector<Degree> scores(agents.size());
  for (Mask s = 0;; ++s) {
    for (std::size_t i = 0; i < agents.size(); ++i) {
      Rational top(0);
      for (Mask e : agents[i])
        top = std::max(top, MaskSimilarity(skind, e, s, size));
      scores[i] = Degree(top);
    }
    const Rational value = Aggregate(dkind, scores);
    if (value > best || (value == best && WitnessBefore(s, witness))) {
      best = value;
      witness = s;
    }
    if (s == full) break;
  }
  return {Degree(best), Unproject(witness, profile.topic)};
}

Degree DegreeOfAgreement(const AgreementProfile& profile, DegreeKind dkind,
                         SimilarityKind skind, const SearchLimits& limits) {
  return DegreeWithWitness(profile, dkind, skind, limits).degree;
}

Degree DegreeOfAgreement(const AgreementScenario& scenario, DegreeKind dkind,
                         SimilarityKind skind, const SearchLimits& limits) {
  return DegreeOfAgreement(Realize(scenario, limits), dkind, skind, limits);
}

Degree AgreementDelta(const AgreementScenario& before,
                      const AgreementScenario& after, DegreeKind dkind,
                      SimilarityKind skind, const SearchLimits& limits) {
  return AbsDifference(DegreeOfAgreement(before, dkind, skind, limits),
                       DegreeOfAgreement(after, dkind, skind, limits));
}

}  // namespace argagree
