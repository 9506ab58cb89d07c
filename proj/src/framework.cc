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

#include "argagree/framework.h"

#include <algorithm>
#include <string>
#include <utility>

#include "argagree/error.h"

namespace argagree {

ArgFramework::ArgFramework(std::vector<std::string> arguments,
                           std::vector<Attack> attacks)
    : names_(std::move(arguments)), attacks_(std::move(attacks)) {
  for (const std::string& id : names_) {
    if (!IsIdentifier(id)) {
      throw ValidationError("af.bad_identifier",
                            "invalid argument identifier '" + id + "'");
    }
  }
  std::sort(names_.begin(), names_.end());
  if (auto dup = std::adjacent_find(names_.begin(), names_.end());
      dup != names_.end()) {
    throw ValidationError("af.duplicate_argument",
                          "duplicate argument '" + *dup + "'");
  }
  std::sort(attacks_.begin(), attacks_.end());
  if (auto dup = std::adjacent_find(attacks_.begin(), attacks_.end());
      dup != attacks_.end()) {
    throw ValidationError(
        "af.duplicate_attack",
        "duplicate attack (" + dup->from + "," + dup->to + ")");
  }
  attackers_.resize(names_.size());
  targets_.resize(names_.size());
  for (const Attack& attack : attacks_) {
    const auto from = IndexOf(attack.from);
    const auto to = IndexOf(attack.to);
    if (!from || !to) {
      throw ValidationError("af.unknown_argument",
                            "attack (" + attack.from + "," + attack.to +
                                ") mentions an unknown argument");
    }
    targets_[*from].push_back(*to);
    attackers_[*to].push_back(*from);
  }
}

bool ArgFramework::contains(std::string_view id) const {
  return IndexOf(id).has_value();
}

std::optional<std::size_t> ArgFramework::IndexOf(std::string_view id) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), id);
  if (it == names_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

bool ArgFramework::HasAttack(std::string_view from, std::string_view to) const {
  const Attack probe{std::string(from), std::string(to)};
  return std::binary_search(attacks_.begin(), attacks_.end(), probe);
}

void ArgFramework::RequireSubset(const ArgSet& set,
                                 std::string_view what) const {
  for (const std::string& id : set) RequireMember(id, what);
}

void ArgFramework::RequireMember(std::string_view id,
                                 std::string_view what) const {
  if (!contains(id)) {
    throw DomainError(
        "af.not_member",
        std::string(what) + ": '" + std::string(id) + "' is not an argument");
  }
}

}  // namespace argagree
