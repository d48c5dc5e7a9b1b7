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

/**
 * @file
 * Validated scalar domain types shared by every phaseshift module.
 *
 * Each type checks its invariant on construction and throws DomainError on
 * violation, so a value that exists is always in range.
 */

#pragma once

#include <numbers>
#include <string_view>

namespace phaseshift {

/// Equal selective phase shift, in radians, restricted to [0, pi].
class PhaseAngle {
  public:
    explicit PhaseAngle(double radians);

    static PhaseAngle from_degrees(double degrees);

    double radians() const noexcept { return radians_; }
    double degrees() const noexcept {
        return radians_ * 180.0 / std::numbers::pi;
    }

    friend bool operator==(PhaseAngle, PhaseAngle) = default;
    friend auto operator<=>(PhaseAngle, PhaseAngle) = default;

  private:
    double radians_;
};

/// Per-item failure probability eps = 1 - |U_ts|^2, in [0, 1].
class FailureProb {
  public:
    explicit FailureProb(double value);

    double value() const noexcept { return value_; }

    friend bool operator==(FailureProb, FailureProb) = default;
    friend auto operator<=>(FailureProb, FailureProb) = default;

  private:
    double value_;
};

/// Uniform failure-probability window (beta, alpha) with
/// 0 <= beta < alpha <= 3/4.
class EpsilonRange {
  public:
    EpsilonRange(double beta, double alpha);

    double beta() const noexcept { return beta_; }
    double alpha() const noexcept { return alpha_; }

  private:
    double beta_;
    double alpha_;
};

/// Sign of D(theta) - eps^3 against the pi/3 baseline.
enum class Classification { BelowCube, EqualCube, AboveCube };

std::string_view to_string(Classification c) noexcept;

} // namespace phaseshift
