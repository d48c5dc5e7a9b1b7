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

#include "phaseshift/analytics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "phaseshift/errors.hpp"

namespace phaseshift::analytics {

namespace {

using std::numbers::pi;

std::string show(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// 2 cos(theta) - 1. Near pi/3 the direct form loses all relative accuracy,
// which the fixed-point recurrence amplifies, so switch to the product
// -4 sin((theta + pi/3)/2) sin((theta - pi/3)/2). That form is exactly zero
// at the double nearest pi/3.
double shifted_cosine(double theta) {
    const double direct = 2.0 * std::cos(theta) - 1.0;
    if (std::abs(direct) >= 0.5) {
        return direct;
    }
    return -4.0 * std::sin(0.5 * (theta + pi / 3.0)) *
           std::sin(0.5 * (theta - pi / 3.0));
}

// d = 1 + 2(cos theta - 1)(1 - eps) rewritten as g + eps (1 - g) with
// g = 2 cos theta - 1, so d = eps exactly at theta = pi/3.
double factor_from(double g, double eps) { return g + eps * (1.0 - g); }

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

double checked_acos(double arg, const char *rule, const std::string &what) {
    if (!(arg >= -1.0 - kArccosClampTol && arg <= 1.0 + kArccosClampTol)) {
        throw DomainError(rule, what + ": arccos argument " + show(arg) +
                                    " outside [-1, 1]");
    }
    return std::acos(std::clamp(arg, -1.0, 1.0));
}

// (1/(alpha - beta)) ln((1 - alpha)/(1 - beta)); always < -1.
double mean_log_slope(const EpsilonRange &range) {
    const double a = range.alpha();
    const double b = range.beta();
    return (std::log1p(-a) - std::log1p(-b)) / (a - b);
}

bool near(double theta, double target) {
    return std::abs(theta - target) <= 1e-12;
}

} // namespace

double amplitude_factor(PhaseAngle theta, FailureProb eps) {
    return factor_from(shifted_cosine(theta.radians()), eps.value());
}

double deviation(PhaseAngle theta, FailureProb eps) {
    const double d = amplitude_factor(theta, eps);
    return clamp_unit(eps.value() * d * d);
}

double deviation_raw(PhaseAngle theta, std::complex<double> uts) {
    const double p = std::norm(uts);
    if (p > (1.0 + 1e-12) * (1.0 + 1e-12)) {
        throw DomainError("|U_ts| <= 1",
                          "amplitude modulus " + show(std::sqrt(p)));
    }
    const std::complex<double> phase = std::polar(1.0, theta.radians());
    const std::complex<double> shift = phase - 1.0;
    const std::complex<double> coeff = phase + p * shift * shift;
    return clamp_unit(std::max(0.0, 1.0 - p) * std::norm(coeff));
}

double deviation_gap(PhaseAngle theta, FailureProb eps) {
    const double g = shifted_cosine(theta.radians());
    const double e = eps.value();
    const double q = 1.0 - e;
    return e * q * g * (2.0 + (g - 2.0) * q);
}

double epsilon_threshold(PhaseAngle theta) {
    // 1 - 2/(3 - 2c) = (1 - 2c)/(3 - 2c) = -g/(2 - g)
    const double g = shifted_cosine(theta.radians());
    return -g / (2.0 - g);
}

Classification classify(PhaseAngle theta, FailureProb eps) {
    const double e = eps.value();
    if (!(e > 0.0 && e < 1.0)) {
        throw DomainError("0 < eps < 1",
                          "classify at degenerate eps " + show(e));
    }
    const double gap = deviation_gap(theta, eps);
    const double tol = kEqualCubeTol * std::max(1.0, e * e * e);
    if (std::abs(gap) <= tol) {
        return Classification::EqualCube;
    }
    return gap < 0.0 ? Classification::BelowCube : Classification::AboveCube;
}

PhaseAngle phase_bound_for_delta(FailureProb delta) {
    const double dl = delta.value();
    if (dl == 1.0) {
        throw DomainError("0 <= delta <= 3/5", "phase bound at delta = 1");
    }
    const double arg = (1.0 - 3.0 * dl) / (2.0 * (1.0 - dl));
    return PhaseAngle(checked_acos(arg, "0 <= delta <= 3/5",
                                   "phase bound for delta " + show(dl)));
}

PhaseAngle zero_deviation_point(FailureProb eps) {
    const double e = eps.value();
    if (!(e > 0.0 && e <= 0.75)) {
        throw DomainError("0 < eps <= 3/4",
                          "no zero deviation point for eps " + show(e));
    }
    const double arg = 1.0 - 1.0 / (2.0 * (1.0 - e));
    return PhaseAngle(
        checked_acos(arg, "0 < eps <= 3/4", "zero point for eps " + show(e)));
}

double average_zero_point_cosine(const EpsilonRange &range) {
    return 1.0 + 0.5 * mean_log_slope(range);
}

PhaseAngle average_zero_point(const EpsilonRange &range) {
    return PhaseAngle(checked_acos(average_zero_point_cosine(range),
                                   "0 <= beta < alpha <= 3/4",
                                   "average zero point"));
}

double average_zero_point_deviation(FailureProb eps,
                                    const EpsilonRange &range) {
    const double e = eps.value();
    if (!(e > 0.0 && e < 1.0)) {
        throw DomainError("0 < eps < 1", "average zero point deviation at eps " +
                                             show(e));
    }
    const double d = 1.0 + (1.0 - e) * mean_log_slope(range);
    return clamp_unit(e * d * d);
}

double kappa(const EpsilonRange &range) {
    return 1.0 - 2.0 / (1.0 - mean_log_slope(range));
}

double min_deviation_large_eps(FailureProb eps) {
    const double e = eps.value();
    if (!(e >= 0.75)) {
        throw DomainError("eps >= 3/4",
                          "large-eps lower bound at eps " + show(e));
    }
    const double d = 4.0 * e - 3.0;
    return clamp_unit(e * d * d);
}

double table3_deviation(PhaseAngle theta, FailureProb eps) {
    const double t = theta.radians();
    const double e = eps.value();
    double d;
    if (near(t, pi / 2.0)) {
        d = 2.0 * e - 1.0;
    } else if (near(t, 2.0 * pi / 3.0)) {
        d = 3.0 * e - 2.0;
    } else if (near(t, 3.0 * pi / 4.0)) {
        d = (std::numbers::sqrt2 + 2.0) * e - (std::numbers::sqrt2 + 1.0);
    } else if (near(t, 5.0 * pi / 6.0)) {
        d = (std::numbers::sqrt3 + 2.0) * e - (std::numbers::sqrt3 + 1.0);
    } else {
        throw DomainError("theta in {pi/2, 2pi/3, 3pi/4, 5pi/6}",
                          "no tabulated form at theta " + show(t));
    }
    return clamp_unit(e * d * d);
}

double success_probability(PhaseAngle theta, FailureProb eps) {
    return 1.0 - deviation(theta, eps);
}

double success_ratio(PhaseAngle theta, FailureProb eps) {
    const double e = eps.value();
    if (!(e > 0.0)) {
        throw DomainError("0 < eps <= 1", "success ratio at eps " + show(e));
    }
    const double c = std::cos(theta.radians());
    const double num = 4.0 * c * c * e * e - 8.0 * c * e * e + 4.0 * e * e +
                       4.0 * c * e - 4.0 * c * c * e + 1.0;
    return num / (e * e + e + 1.0);
}

double rho(PhaseAngle theta) {
    return (5.0 - 4.0 * std::cos(theta.radians())) / 3.0;
}

RecurrenceTrace recurrence_trace(PhaseAngle theta, FailureProb eps0,
                                 std::size_t levels) {
    const double e0 = eps0.value();
    if (!(e0 > 0.0 && e0 < 1.0)) {
        throw DomainError("0 < eps0 < 1", "recurrence from eps " + show(e0));
    }
    RecurrenceTrace trace{theta, {}, {}};
    trace.epsilons.reserve(levels + 1);
    trace.flushed.reserve(levels + 1);
    trace.epsilons.push_back(e0);
    trace.flushed.push_back(false);
    for (std::size_t m = 0; m < levels; ++m) {
        const FailureProb prev(trace.epsilons.back());
        double next = deviation(theta, prev);
        bool flushed = trace.flushed.back();
        // An exact zero is genuine only when the amplitude factor vanishes.
        if (next < kUnderflowFlush && prev.value() != 0.0 &&
            amplitude_factor(theta, prev) != 0.0) {
            next = 0.0;
            flushed = true;
        }
        trace.epsilons.push_back(next);
        trace.flushed.push_back(flushed);
    }
    return trace;
}

} // namespace phaseshift::analytics
