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

#ifndef ARGAGREE_SEMANTICS_H_
#define ARGAGREE_SEMANTICS_H_

#include <cstddef>
#include <optional>
#include <string_view>

#include "argagree/arg_set.h"
#include "argagree/framework.h"

namespace argagree {

enum class SemanticsKind { kComplete, kPreferred, kGrounded, kNaive, kStage };

inline constexpr SemanticsKind kAllSemantics[] = {
    SemanticsKind::kComplete, SemanticsKind::kPreferred,
    SemanticsKind::kGrounded, SemanticsKind::kNaive, SemanticsKind::kStage};

// Lowercase token: "complete", "preferred", ...
std::string_view SemanticsName(SemanticsKind kind);
std::optional<SemanticsKind> ParseSemantics(std::string_view token);

struct SearchLimits {
  static constexpr std::size_t kHardArgumentLimit = 64;

  // Frameworks larger than this are rejected by subset searches.
  std::size_t max_arguments = 22;
  // Topics larger than this are rejected by powerset maximization.
  std::size_t max_topic = 20;
  // Bound on the number of extension combinations inspected.
  std::size_t max_combinations = 1'000'000;
};

// Arguments attacked by some member of `set`.
ArgSet AttacksSet(const ArgFramework& af, const ArgSet& set);
bool IsConflictFree(const ArgFramework& af, const ArgSet& set);
bool IsAcceptable(const ArgFramework& af, std::string_view argument,
                  const ArgSet& set);
bool IsAdmissible(const ArgFramework& af, const ArgSet& set);
bool StronglyDefends(const ArgFramework& af, const ArgSet& set,
                     std::string_view argument,
                     const SearchLimits& limits = {});

// Sorted by cardinality, then lexicographically. Throws a resource error
// when the framework exceeds `limits.max_arguments`.
ExtensionSet Enumerate(const ArgFramework& af, SemanticsKind kind,
                       const SearchLimits& limits = {});

// Least fixpoint of the characteristic function. No size limit.
ArgSet GroundedFixpoint(const ArgFramework& af);

}  // namespace argagree

#endif  // ARGAGREE_SEMANTICS_H_
