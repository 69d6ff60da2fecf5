// Copyright 2026 The lcquant Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace lcq {

/// Raised when an argument violates an operation's precondition. `where()`
/// names the operation, `condition()` the violated requirement.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string where, std::string condition)
      : std::invalid_argument(where + ": requires " + condition),
        where_(std::move(where)),
        condition_(std::move(condition)) {}

  const std::string& where() const noexcept { return where_; }
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string where_;
  std::string condition_;
};

inline void require(bool ok, const char* where, const char* condition) {
  if (!ok) throw PreconditionError(where, condition);
}

}  // namespace lcq
