// Copyright 2026 The phaseshift Authors
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
#include <utility>

namespace phaseshift {

/// Raised when an argument violates the mathematical domain of an operation.
/// `rule()` holds the violated condition as written, e.g. "0 < eps <= 3/4".
class DomainError : public std::domain_error {
  public:
    DomainError(std::string rule, std::string detail)
        : std::domain_error(detail + " (requires " + rule + ")"),
          rule_(std::move(rule)), detail_(std::move(detail)) {}

    const std::string &rule() const noexcept { return rule_; }
    const std::string &detail() const noexcept { return detail_; }

  private:
    std::string rule_;
    std::string detail_;
};

/// Raised by the simulator when a requested problem exceeds the dense-matrix
/// size or recursion-depth caps.
class SizeError : public std::length_error {
  public:
    using std::length_error::length_error;
};

} // namespace phaseshift
