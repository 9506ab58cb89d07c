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

#ifndef ARGAGREE_ERROR_H_
#define ARGAGREE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace argagree {

enum class ErrorCategory {
  kDomain,      // precondition violated by the caller
  kValidation,  // malformed framework, preference relation or document
  kResource,    // configured search cap exceeded
  kGeneration,  // synthetic generation gave up
  kParse,       // scenario text could not be read
  kIo,
};

std::string_view CategoryName(ErrorCategory category);

// `code` is a stable dotted identifier such as "vaf.self_attack".
class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string code, const std::string& message)
      : std::runtime_error(message),
        category_(category),
        code_(std::move(code)) {}

  ErrorCategory category() const { return category_; }
  const std::string& code() const { return code_; }

 private:
  ErrorCategory category_;
  std::string code_;
};

inline Error DomainError(std::string code, const std::string& message) {
  return Error(ErrorCategory::kDomain, std::move(code), message);
}
inline Error ValidationError(std::string code, const std::string& message) {
  return Error(ErrorCategory::kValidation, std::move(code), message);
}
inline Error ResourceError(std::string code, const std::string& message) {
  return Error(ErrorCategory::kResource, std::move(code), message);
}

}  // namespace argagree

#endif  // ARGAGREE_ERROR_H_
