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

#ifndef ARGAGREE_ARG_SET_H_
#define ARGAGREE_ARG_SET_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace argagree {

// Nonempty token over [a-zA-Z0-9_].
bool IsIdentifier(std::string_view token);

// Sorted, duplicate-free set of identifiers. Comparison is lexicographic
// over the ordered member sequence.
class ArgSet {
 public:
  using const_iterator = std::vector<std::string>::const_iterator;

  ArgSet() = default;
  ArgSet(std::initializer_list<std::string> members);
  explicit ArgSet(std::vector<std::string> members);

  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  const std::vector<std::string>& members() const { return members_; }

  bool contains(std::string_view id) const;
  bool IsSubsetOf(const ArgSet& other) const;
  void Insert(std::string id);

  friend bool operator==(const ArgSet&, const ArgSet&) = default;
  friend auto operator<=>(const ArgSet& a, const ArgSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<std::string> members_;
};

ArgSet Union(const ArgSet& a, const ArgSet& b);
ArgSet Intersection(const ArgSet& a, const ArgSet& b);
ArgSet Difference(const ArgSet& a, const ArgSet& b);

// "{a,b,c}"
std::string ToString(const ArgSet& set);

// Orders by cardinality, then lexicographically.
struct CanonicalOrder {
  bool operator()(const ArgSet& a, const ArgSet& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using ExtensionSet = std::vector<ArgSet>;

// Sorts into canonical order and drops duplicates.
void Canonicalize(ExtensionSet& extensions);

}  // namespace argagree

#endif  // ARGAGREE_ARG_SET_H_
