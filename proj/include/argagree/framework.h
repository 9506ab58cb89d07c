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

#ifndef ARGAGREE_FRAMEWORK_H_
#define ARGAGREE_FRAMEWORK_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argagree/arg_set.h"

namespace argagree {

struct Attack {
  std::string from;
  std::string to;

  friend bool operator==(const Attack&, const Attack&) = default;
  friend auto operator<=>(const Attack&, const Attack&) = default;
};

// Immutable attack graph. Arguments are indexed in lexicographic order.
class ArgFramework {
 public:
  ArgFramework() = default;

  // Throws a validation error on malformed identifiers, duplicate
  // arguments or attacks, and attacks with unknown endpoints.
  ArgFramework(std::vector<std::string> arguments, std::vector<Attack> attacks);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& arguments() const { return names_; }
  ArgSet argument_set() const { return ArgSet(names_); }
  // Sorted.
  const std::vector<Attack>& attacks() const { return attacks_; }

  bool contains(std::string_view id) const;
  std::optional<std::size_t> IndexOf(std::string_view id) const;
  const std::string& name(std::size_t index) const { return names_[index]; }

  bool HasAttack(std::string_view from, std::string_view to) const;
  const std::vector<std::size_t>& attackers(std::size_t index) const {
    return attackers_[index];
  }
  const std::vector<std::size_t>& targets(std::size_t index) const {
    return targets_[index];
  }

  // Throws a domain error naming the first member outside the framework.
  void RequireSubset(const ArgSet& set, std::string_view what) const;
  void RequireMember(std::string_view id, std::string_view what) const;

  friend bool operator==(const ArgFramework& a, const ArgFramework& b) {
    return a.names_ == b.names_ && a.attacks_ == b.attacks_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Attack> attacks_;
  std::vector<std::vector<std::size_t>> attackers_;
  std::vector<std::vector<std::size_t>> targets_;
};

}  // namespace argagree

#endif  // ARGAGREE_FRAMEWORK_H_
