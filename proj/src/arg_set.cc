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

#include "argagree/arg_set.h"

#include <algorithm>
#include <iterator>
#include <string>
#include <utility>

namespace argagree {

bool IsIdentifier(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
           (ch >= '0' && ch <= '9') || ch == '_';
  });
}

ArgSet::ArgSet(std::initializer_list<std::string> members)
    : ArgSet(std::vector<std::string>(members)) {}

ArgSet::ArgSet(std::vector<std::string> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ArgSet::contains(std::string_view id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

bool ArgSet::IsSubsetOf(const ArgSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

void ArgSet::Insert(std::string id) {
  auto it = std::lower_bound(members_.begin(), members_.end(), id);
  if (it == members_.end() || *it != id) members_.insert(it, std::move(id));
}

ArgSet Union(const ArgSet& a, const ArgSet& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return ArgSet(std::move(out));
}

ArgSet Intersection(const ArgSet& a, const ArgSet& b) {
  std::vector<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return ArgSet(std::move(out));
}

ArgSet Difference(const ArgSet& a, const ArgSet& b) {
  std::vector<std::string> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return ArgSet(std::move(out));
}

std::string ToString(const ArgSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ",";
    out += set.members()[i];
  }
  return out + "}";
}

void Canonicalize(ExtensionSet& extensions) {
  std::sort(extensions.begin(), extensions.end(), CanonicalOrder{});
  extensions.erase(std::unique(extensions.begin(), extensions.end()),
                   extensions.end());
}

}  // namespace argagree
