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

#ifndef ARGAGREE_SRC_BIT_GRAPH_H_
#define ARGAGREE_SRC_BIT_GRAPH_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "argagree/arg_set.h"
#include "argagree/framework.h"
#include "argagree/semantics.h"

namespace argagree::internal {

using Bits = std::uint64_t;

inline Bits Bit(std::size_t index) { return Bits{1} << index; }
inline int Count(Bits bits) { return std::popcount(bits); }

// Bit i stands for the framework's i-th argument in lexicographic order.
struct BitGraph {
  std::size_t size = 0;
  Bits all = 0;
  Bits self_attacking = 0;
  std::vector<Bits> attackers;
  std::vector<Bits> targets;

  Bits Plus(Bits set) const {
    Bits out = 0;
    for (Bits rest = set; rest != 0; rest &= rest - 1) {
      out |= targets[std::countr_zero(rest)];
    }
    return out;
  }
  Bits Minus(Bits set) const {
    Bits out = 0;
    for (Bits rest = set; rest != 0; rest &= rest - 1) {
      out |= attackers[std::countr_zero(rest)];
    }
    return out;
  }
  bool ConflictFree(Bits set) const { return (Plus(set) & set) == 0; }
  // Arguments all of whose attackers are in `plus`.
  Bits Defended(Bits plus) const {
    Bits out = 0;
    for (std::size_t i = 0; i < size; ++i) {
      if ((attackers[i] & ~plus) == 0) out |= Bit(i);
    }
    return out;
  }
};

// Throws a resource error above `limits.max_arguments`.
BitGraph MakeBitGraph(const ArgFramework& af, const SearchLimits& limits);

// Members must belong to `af`.
Bits ToBits(const ArgFramework& af, const ArgSet& set);
ArgSet FromBits(const ArgFramework& af, Bits bits);

// Calls visit(set) for every conflict-free superset of `forced`, which must
// itself be conflict-free. Stops early when visit returns false; returns
// false in that case.
template <typename Visit>
bool ForEachConflictFree(const BitGraph& graph, Bits forced, Visit&& visit) {
  Bits blocked = graph.self_attacking | forced;
  for (Bits rest = forced; rest != 0; rest &= rest - 1) {
    const std::size_t i = std::countr_zero(rest);
    blocked |= graph.attackers[i] | graph.targets[i];
  }
  auto recurse = [&](auto& self, std::size_t next, Bits set,
                     Bits blocked_now) -> bool {
    if (next == graph.size) return visit(set);
    if (!self(self, next + 1, set, blocked_now)) return false;
    if ((blocked_now & Bit(next)) == 0) {
      return self(self, next + 1, set | Bit(next),
                  blocked_now | Bit(next) | graph.attackers[next] |
                      graph.targets[next]);
    }
    return true;
  };
  return recurse(recurse, 0, forced, blocked);
}

// Recursive strong defence of `argument` by `set`.
bool StronglyDefendsBits(const BitGraph& graph, Bits set, std::size_t argument);

// Keeps only the sets not strictly contained in another member.
std::vector<Bits> MaximalSets(std::vector<Bits> sets);

}  // namespace argagree::internal

#endif  // ARGAGREE_SRC_BIT_GRAPH_H_
