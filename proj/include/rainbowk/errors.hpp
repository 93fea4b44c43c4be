// Copyright 2026 The rainbowk Authors
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

#ifndef RAINBOWK_ERRORS_HPP_
#define RAINBOWK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rainbowk {

// An exact search refused to start because the instance is over its
// configured size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rainbowk

#endif  // RAINBOWK_ERRORS_HPP_
