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

#include "argagree/semantics.h"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "argagree/error.h"
#include "bit_graph.h"

namespace argagree {
namespace internal {

BitGraph MakeBitGraph(const ArgFramework& af, const SearchLimits& limits) {
  const std::size_t cap =
      std::min(limits.max_arguments, SearchLimits::kHardArgumentLimit);
  if (af.size() > cap) {
    throw ResourceError("search.argument_cap",
                        "framework has " + std::to_string(af.size()) +
                            " arguments, above the enumeration cap of " +
                            std::to_string(cap));
  }
  BitGraph graph;
  graph.size = af.size();
  graph.all = graph.size == 64 ? ~Bits{0} : Bit(graph.size) - 1;
  graph.attackers.assign(graph.size, 0);
  graph.targets.assign(graph.size, 0);
  for (std::size_t i = 0; i < graph.size; ++i) {
    for (std::size_t j : af.targets(i)) {
      graph.targets[i] |= Bit(j);
      graph.attackers[j] |= Bit(i);
      if (i == j) graph.self_attacking |= Bit(i);
    }
  }
  return graph;
}

Bits ToBits(const ArgFramework& af, const ArgSet& set) {
  Bits out = 0;
  for (const std::string& id : set) {
    const auto index = af.IndexOf(id);
    if (!index) {
      throw DomainError("af.not_member", "'" + id + "' is not an argument");
    }
    out |= Bit(*index);
  }
  return out;
}

ArgSet FromBits(const ArgFramework& af, Bits bits) {
  std::vector<std::string> members;
  members.reserve(static_cast<std::size_t>(Count(bits)));
  for (Bits rest = bits; rest != 0; rest &= rest - 1) {
    members.push_back(
        af.name(static_cast<std::size_t>(std::countr_zero(rest))));
  }
  return ArgSet(std::move(members));
}

namespace {

bool StronglyDefendsMemo(const BitGraph& graph, Bits set, std::size_t argument,
                         std::map<std::pair<Bits, std::size_t>, bool>& memo) {
  const auto key = std::make_pair(set, argument);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const Bits rest = set & ~Bit(argument);
  bool result = true;
  for (Bits attackers = graph.attackers[argument]; attackers != 0 && result;
       attackers &= attackers - 1) {
    const std::size_t attacker = std::countr_zero(attackers);
    bool countered = false;
    for (Bits counters = graph.attackers[attacker] & rest; counters != 0;
         counters &= counters - 1) {
      if (StronglyDefendsMemo(graph, rest, std::countr_zero(counters), memo)) {
        countered = true;
        break;
      }
    }
    result = countered;
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

bool StronglyDefendsBits(const BitGraph& graph, Bits set,
                         std::size_t argument) {
  std::map<std::pair<Bits, std::size_t>, bool> memo;
  return StronglyDefendsMemo(graph, set, argument, memo);
}

std::vector<Bits> MaximalSets(std::vector<Bits> sets) {
  std::sort(sets.begin(), sets.end(), [](Bits a, Bits b) {
    return Count(a) != Count(b) ? Count(a) > Count(b) : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  // A set below some other set is below a maximal one seen earlier.
  std::vector<Bits> maximal;
  for (Bits candidate : sets) {
    const bool dominated = std::any_of(
        maximal.begin(), maximal.end(),
        [&](Bits m) { return (candidate & ~m) == 0 && candidate != m; });
    if (!dominated) maximal.push_back(candidate);
  }
  return maximal;
}

}  // namespace internal

using internal::Bit;
using internal::BitGraph;
using internal::Bits;

std::string_view SemanticsName(SemanticsKind kind) {
  switch (kind) {
    case SemanticsKind::kComplete:
      return "complete";
    case SemanticsKind::kPreferred:
      return "preferred";
    case SemanticsKind::kGrounded:
      return "grounded";
    case SemanticsKind::kNaive:
      return "naive";
    case SemanticsKind::kStage:
      return "stage";
  }
  return "unknown";
}

std::optional<SemanticsKind> ParseSemantics(std::string_view token) {
  for (SemanticsKind kind : kAllSemantics) {
    if (SemanticsName(kind) == token) return kind;
  }
  return std::nullopt;
}

ArgSet AttacksSet(const ArgFramework& af, const ArgSet& set) {
  af.RequireSubset(set, "attacking set");
  std::vector<std::string> out;
  for (const Attack& attack : af.attacks()) {
    if (set.contains(attack.from)) out.push_back(attack.to);
  }
  return ArgSet(std::move(out));
}

bool IsConflictFree(const ArgFramework& af, const ArgSet& set) {
  af.RequireSubset(set, "candidate set");
  return std::none_of(
      af.attacks().begin(), af.attacks().end(), [&](const Attack& attack) {
        return set.contains(attack.from) && set.contains(attack.to);
      });
}

bool IsAcceptable(const ArgFramework& af, std::string_view argument,
                  const ArgSet& set) {
  af.RequireMember(argument, "argument");
  const ArgSet plus = AttacksSet(af, set);
  const std::size_t index = *af.IndexOf(argument);
  return std::all_of(
      af.attackers(index).begin(), af.attackers(index).end(),
      [&](std::size_t attacker) { return plus.contains(af.name(attacker)); });
}

bool IsAdmissible(const ArgFramework& af, const ArgSet& set) {
  if (!IsConflictFree(af, set)) return false;
  return std::all_of(set.begin(), set.end(), [&](const std::string& member) {
    return IsAcceptable(af, member, set);
  });
}

bool StronglyDefends(const ArgFramework& af, const ArgSet& set,
                     std::string_view argument, const SearchLimits& limits) {
  af.RequireMember(argument, "defended argument");
  const BitGraph graph = internal::MakeBitGraph(af, limits);
  return internal::StronglyDefendsBits(graph, internal::ToBits(af, set),
                                       *af.IndexOf(argument));
}

namespace {

std::vector<Bits> CompleteSets(const BitGraph& graph) {
  std::vector<Bits> out;
  internal::ForEachConflictFree(graph, 0, [&](Bits set) {
    const Bits plus = graph.Plus(set);
    if ((graph.Minus(set) & ~plus) == 0 && (graph.Defended(plus) & ~set) == 0) {
      out.push_back(set);
    }
    return true;
  });
  return out;
}

std::vector<Bits> EnumerateBits(const BitGraph& graph, SemanticsKind kind) {
  switch (kind) {
    case SemanticsKind::kComplete:
      return CompleteSets(graph);
    case SemanticsKind::kPreferred:
      return internal::MaximalSets(CompleteSets(graph));
    case SemanticsKind::kGrounded: {
      const std::vector<Bits> complete = CompleteSets(graph);
      // Complete extensions always exist; the least one is below all others.
      return {*std::min_element(
          complete.begin(), complete.end(), [](Bits a, Bits b) {
            return internal::Count(a) < internal::Count(b);
          })};
    }
    case SemanticsKind::kNaive: {
      std::vector<Bits> out;
      internal::ForEachConflictFree(graph, 0, [&](Bits set) {
        const Bits blocked =
            graph.self_attacking | set | graph.Plus(set) | graph.Minus(set);
        if ((graph.all & ~blocked) == 0) out.push_back(set);
        return true;
      });
      return out;
    }
    case SemanticsKind::kStage: {
      std::vector<std::pair<Bits, Bits>> by_range;
      std::vector<Bits> ranges;
      internal::ForEachConflictFree(graph, 0, [&](Bits set) {
        const Bits range = set | graph.Plus(set);
        by_range.emplace_back(set, range);
        ranges.push_back(range);
        return true;
      });
      const std::vector<Bits> maximal =
          internal::MaximalSets(std::move(ranges));
      std::vector<Bits> out;
      for (const auto& [set, range] : by_range) {
        if (std::find(maximal.begin(), maximal.end(), range) != maximal.end()) {
          out.push_back(set);
        }
      }
      return out;
    }
  }
  return {};
}

}  // namespace

ExtensionSet Enumerate(const ArgFramework& af, SemanticsKind kind,
                       const SearchLimits& limits) {
  const BitGraph graph = internal::MakeBitGraph(af, limits);
  ExtensionSet out;
  for (Bits set : EnumerateBits(graph, kind)) {
    out.push_back(internal::FromBits(af, set));
  }
  Canonicalize(out);
  return out;
}

ArgSet GroundedFixpoint(const ArgFramework& af) {
  const std::size_t n = af.size();
  std::vector<bool> in(n, false);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<bool> attacked(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (!in[i]) continue;
      for (std::size_t j : af.targets(i)) attacked[j] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (in[i]) continue;
      const auto& attackers = af.attackers(i);
      if (std::all_of(attackers.begin(), attackers.end(),
                      [&](std::size_t b) { return attacked[b]; })) {
        in[i] = true;
        changed = true;
      }
    }
  }
  std::vector<std::string> members;
  for (std::size_t i = 0; i < n; ++i) {
    if (in[i]) members.push_back(af.name(i));
  }
  return ArgSet(std::move(members));
}

}  // namespace argagree
