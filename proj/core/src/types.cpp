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

#include "phaseshift/types.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "phaseshift/errors.hpp"

namespace phaseshift {

namespace {

std::string show(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

PhaseAngle::PhaseAngle(double radians) : radians_(radians) {
    if (!(radians >= 0.0 && radians <= std::numbers::pi)) {
        throw DomainError("0 <= theta <= pi",
                          "phase angle " + show(radians) + " rad out of range");
    }
}

PhaseAngle PhaseAngle::from_degrees(double degrees) {
    if (degrees == 180.0) {
        return PhaseAngle(std::numbers::pi);
    }
    return PhaseAngle(degrees * std::numbers::pi / 180.0);
}

FailureProb::FailureProb(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw DomainError("0 <= eps <= 1",
                          "failure probability " + show(value) +
                              " out of range");
    }
}

EpsilonRange::EpsilonRange(double beta, double alpha)
    : beta_(beta), alpha_(alpha) {
    if (!(beta >= 0.0)) {
        throw DomainError("0 <= beta < alpha <= 3/4",
                          "range lower end " + show(beta) + " is negative");
    }
    if (!(alpha < 1.0)) {
        throw DomainError("alpha < 1", "range upper end " + show(alpha) +
                                           " makes ln(1 - alpha) undefined");
    }
    if (!(beta < alpha)) {
        throw DomainError("0 <= beta < alpha <= 3/4",
                          "empty range " + show(beta) + ":" + show(alpha));
    }
    if (!(alpha <= 0.75)) {
        throw DomainError("0 <= beta < alpha <= 3/4",
                          "range upper end " + show(alpha) +
                              " exceeds the zero-deviation region");
    }
}

std::string_view to_string(Classification c) noexcept {
    switch (c) {
    case Classification::BelowCube:
        return "BelowCube";
    case Classification::EqualCube:
        return "EqualCube";
    case Classification::AboveCube:
        return "AboveCube";
    }
    return "?";
}

} // namespace phaseshift
