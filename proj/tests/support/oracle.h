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

#ifndef ARGAGREE_TESTS_SUPPORT_ORACLE_H_
#define ARGAGREE_TESTS_SUPPORT_ORACLE_H_

// Definition-level reference implementations on adjacency matrices. They
// share no code with the library and scan every subset.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "argagree/arg_set.h"
#include "argagree/framework.h"
#include "argagree/semantics.h"

namespace argagree::testing {

struct MiniAf {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> attacks;  // attacks[x][y]: x attacks y

  std::size_t size() const { return names.size(); }

  ArgFramework ToFramework() const {
    std::vector<Attack> list;
    for (std::size_t x = 0; x < size(); ++x) {
      for (std::size_t y = 0; y < size(); ++y) {
        if (attacks[x][y]) list.push_back({names[x], names[y]});
      }
    }
    return ArgFramework(names, std::move(list));
  }

  ArgSet ToSet(std::uint32_t mask) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i) {
      if ((mask >> i) & 1u) out.push_back(names[i]);
    }
    return ArgSet(std::move(out));
  }
};

inline std::string MiniName(std::size_t i) { return "x" + std::to_string(i); }

inline MiniAf RandomMiniAf(std::mt19937_64& rng, std::size_t n, double density,
                           bool self_attacks) {
  MiniAf af;
  std::bernoulli_distribution edge(density);
  for (std::size_t i = 0; i < n; ++i) af.names.push_back(MiniName(i));
  af.attacks.assign(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y && !self_attacks) continue;
      af.attacks[x][y] = edge(rng);
    }
  }
  return af;
}

// Appends `added` arguments. New attacks always involve a new argument.
inline MiniAf RandomNormalExpansion(std::mt19937_64& rng, const MiniAf& base,
                                    std::size_t added, double density,
                                    bool self_attacks) {
  MiniAf out = base;
  std::bernoulli_distribution edge(density);
  const std::size_t n = base.size() + added;
  for (std::size_t i = base.size(); i < n; ++i)
    out.names.push_back(MiniName(i));
  out.attacks.assign(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x < base.size() && y < base.size()) {
        out.attacks[x][y] = base.attacks[x][y];
      } else if (x != y || self_attacks) {
        out.attacks[x][y] = edge(rng);
      }
    }
  }
  return out;
}

class Oracle {
 public:
  explicit Oracle(const MiniAf& af) : af_(af), n_(af.size()) {}

  bool In(std::uint32_t s, std::size_t i) const { return (s >> i) & 1u; }

  bool ConflictFree(std::uint32_t s) const {
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        if (In(s, x) && In(s, y) && af_.attacks[x][y]) return false;
      }
    }
    return true;
  }

  bool Acceptable(std::size_t a, std::uint32_t s) const {
    for (std::size_t b = 0; b < n_; ++b) {
      if (!af_.attacks[b][a]) continue;
      bool defended = false;
      for (std::size_t c = 0; c < n_; ++c) {
        if (In(s, c) && af_.attacks[c][b]) defended = true;
      }
      if (!defended) return false;
    }
    return true;
  }

  bool Admissible(std::uint32_t s) const {
    if (!ConflictFree(s)) return false;
    for (std::size_t a = 0; a < n_; ++a) {
      if (In(s, a) && !Acceptable(a, s)) return false;
    }
    return true;
  }

  bool Complete(std::uint32_t s) const {
    if (!Admissible(s)) return false;
    for (std::size_t a = 0; a < n_; ++a) {
      if (!In(s, a) && Acceptable(a, s)) return false;
    }
    return true;
  }

  std::uint32_t Range(std::uint32_t s) const {
    std::uint32_t out = s;
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        if (In(s, x) && af_.attacks[x][y]) out |= 1u << y;
      }
    }
    return out;
  }

  std::vector<ArgSet> Extensions(SemanticsKind kind) const {
    std::vector<std::uint32_t> all;
    for (std::uint32_t s = 0; s < (1u << n_); ++s) all.push_back(s);
    auto subset = [](std::uint32_t a, std::uint32_t b) {
      return (a & ~b) == 0;
    };
    auto filter = [&](auto pred) {
      std::vector<std::uint32_t> out;
      for (std::uint32_t s : all) {
        if (pred(s)) out.push_back(s);
      }
      return out;
    };
    auto maximal = [&](const std::vector<std::uint32_t>& sets, auto key) {
      std::vector<std::uint32_t> out;
      for (std::uint32_t s : sets) {
        bool dominated = false;
        for (std::uint32_t t : sets) {
          if (key(s) != key(t) && subset(key(s), key(t))) dominated = true;
        }
        if (!dominated) out.push_back(s);
      }
      return out;
    };
    auto identity = [](std::uint32_t s) { return s; };
    std::vector<std::uint32_t> chosen;
    switch (kind) {
      case SemanticsKind::kComplete:
        chosen = filter([&](std::uint32_t s) { return Complete(s); });
        break;
      case SemanticsKind::kPreferred:
        chosen = maximal(filter([&](std::uint32_t s) { return Admissible(s); }),
                         identity);
        break;
      case SemanticsKind::kGrounded: {
        const auto complete =
            filter([&](std::uint32_t s) { return Complete(s); });
        for (std::uint32_t s : complete) {
          if (std::all_of(complete.begin(), complete.end(),
                          [&](std::uint32_t t) { return subset(s, t); })) {
            chosen.push_back(s);
          }
        }
        break;
      }
      case SemanticsKind::kNaive:
        chosen = maximal(
            filter([&](std::uint32_t s) { return ConflictFree(s); }), identity);
        break;
      case SemanticsKind::kStage:
        chosen =
            maximal(filter([&](std::uint32_t s) { return ConflictFree(s); }),
                    [&](std::uint32_t s) { return Range(s); });
        break;
    }
    std::vector<ArgSet> out;
    for (std::uint32_t s : chosen) out.push_back(af_.ToSet(s));
    Canonicalize(out);
    return out;
  }

 private:
  const MiniAf& af_;
  std::size_t n_;
};

// Hamming similarity from characteristic vectors over the topic.
inline std::pair<int, int> HammingByVectors(const ArgSet& e, const ArgSet& s,
                                            const ArgSet& topic) {
  std::vector<char> ve, vs;
  for (const std::string& t : topic) {
    ve.push_back(e.contains(t) ? '1' : '0');
    vs.push_back(s.contains(t) ? '1' : '0');
  }
  int distance = 0;
  for (std::size_t i = 0; i < ve.size(); ++i) distance += ve[i] != vs[i];
  return {static_cast<int>(topic.size()) - distance,
          static_cast<int>(topic.size())};
}

}  // namespace argagree::testing

#endif  // ARGAGREE_TESTS_SUPPORT_ORACLE_H_
