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

#ifndef ARGAGREE_TESTS_SUPPORT_PRINTERS_H_
#define ARGAGREE_TESTS_SUPPORT_PRINTERS_H_

#include <ostream>

#include "argagree/arg_set.h"
#include "argagree/rational.h"

namespace argagree {

inline void PrintTo(const Degree& d, std::ostream* os) { *os << ToString(d); }
inline void PrintTo(const ArgSet& s, std::ostream* os) { *os << ToString(s); }

}  // namespace argagree

#endif  // ARGAGREE_TESTS_SUPPORT_PRINTERS_H_
