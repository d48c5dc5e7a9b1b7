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
 * Closed-form analysis of one equal-phase-shift search iteration
 * U R_s(theta) U^dag R_t(theta) U applied to |s>.
 *
 * With eps = 1 - |U_ts|^2 the probability of missing the target after one
 * iteration is
 *
 *     D(theta, eps) = eps * d^2,   d = 1 + 2 (cos theta - 1)(1 - eps).
 *
 * Everything here is a pure function of its arguments and safe to call
 * concurrently.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "phaseshift/types.hpp"

namespace phaseshift::analytics {

/// Absolute tolerance for clamping arccos arguments that fall just outside
/// [-1, 1].
inline constexpr double kArccosClampTol = 1e-12;

/// Recurrence values below this are flushed to exactly zero.
inline constexpr double kUnderflowFlush = 1e-300;

/// Amplitude factor d with D = eps * d^2.
double amplitude_factor(PhaseAngle theta, FailureProb eps);

/// Deviation D(theta) from the target after one iteration. In [0, 1].
double deviation(PhaseAngle theta, FailureProb eps);

/// Deviation from the unreduced modulus form
/// (1 - |u|^2) |e^{i theta} + |u|^2 (e^{i theta} - 1)^2|^2.
/// Throws DomainError if |uts| > 1 + 1e-12.
double deviation_raw(PhaseAngle theta, std::complex<double> uts);

/// D(theta) - eps^3, evaluated in factored form
/// eps (1 - eps)(2 cos theta - 1)[2 + (2 cos theta - 3)(1 - eps)].
double deviation_gap(PhaseAngle theta, FailureProb eps);

/// tau(theta) = 1 - 2 / (3 - 2 cos theta). For theta > pi/3, D < eps^3
/// exactly when eps > tau(theta). Nondecreasing, from -1 at 0 to 3/5 at pi.
double epsilon_threshold(PhaseAngle theta);

/// Relative tolerance used by classify() to call a gap EqualCube.
inline constexpr double kEqualCubeTol = 1e-12;

/// Sign of D - eps^3 with an EqualCube band of 1e-12 * max(1, eps^3).
/// Requires 0 < eps < 1.
Classification classify(PhaseAngle theta, FailureProb eps);

/// Largest theta such that every shift in (pi/3, theta] beats eps^3 whenever
/// eps > delta: arccos((1 - 3 delta) / (2 (1 - delta))). The argument stays in
/// [-1, 1] only for delta <= 3/5.
PhaseAngle phase_bound_for_delta(FailureProb delta);

/// Phase making D vanish: arccos(1 - 1 / (2 (1 - eps))), 0 < eps <= 3/4.
PhaseAngle zero_deviation_point(FailureProb eps);

/// Mean of 1 - 1/(2(1-eps)) over a uniform eps window, in closed form:
/// 1 + ln((1 - alpha)/(1 - beta)) / (2 (alpha - beta)).
double average_zero_point_cosine(const EpsilonRange &range);

/// arccos of average_zero_point_cosine(); lies in (pi/3, pi].
PhaseAngle average_zero_point(const EpsilonRange &range);

/// D at the average zero point:
/// eps (1 + (1 - eps) ln((1 - alpha)/(1 - beta)) / (alpha - beta))^2.
double average_zero_point_deviation(FailureProb eps, const EpsilonRange &range);

/// kappa = 1 - 2 / (1 - ln((1 - alpha)/(1 - beta)) / (alpha - beta)). In (0, 1);
/// above it the average zero point beats eps^3.
double kappa(const EpsilonRange &range);

/// eps (4 eps - 3)^2, the theta = pi minimum of D for eps >= 3/4.
double min_deviation_large_eps(FailureProb eps);

/// Tabulated closed forms of D at pi/2, 2pi/3, 3pi/4 and 5pi/6. Any other
/// angle throws DomainError.
double table3_deviation(PhaseAngle theta, FailureProb eps);

/// Delta(theta) = 1 - D(theta).
double success_probability(PhaseAngle theta, FailureProb eps);

/// Delta(theta) / Delta(pi/3) in rational form, which stays finite at
/// eps = 1 where it equals rho(theta). Requires 0 < eps <= 1.
double success_ratio(PhaseAngle theta, FailureProb eps);

/// rho = (5 - 4 cos theta) / 3, the eps -> 1 limit of success_ratio().
double rho(PhaseAngle theta);

struct RecurrenceTrace {
    PhaseAngle theta;
    /// epsilons[m] is the failure probability after m recursion levels.
    std::vector<double> epsilons;
    /// flushed[m] is set when epsilons[m] underflowed and was forced to 0, or
    /// descends from a level that was.
    std::vector<bool> flushed;
};

/// Iterates eps_{m+1} = D(theta, eps_m) for `levels` steps from eps0.
/// Requires 0 < eps0 < 1.
RecurrenceTrace recurrence_trace(PhaseAngle theta, FailureProb eps0,
                                 std::size_t levels);

} // namespace phaseshift::analytics
