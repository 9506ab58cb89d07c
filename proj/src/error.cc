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

#include "argagree/error.h"

namespace argagree {

std::string_view CategoryName(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kDomain:
      return "domain";
    case ErrorCategory::kValidation:
      return "validation";
    case ErrorCategory::kResource:
      return "resource";
    case ErrorCategory::kGeneration:
      return "generation";
    case ErrorCategory::kParse:
      return "parse";
    case ErrorCategory::kIo:
      return "io";
  }
  return "unknown";
}

}  // namespace argagree
