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

// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "phaseshift/analytics.hpp"
#include "phaseshift/simulator.hpp"
#include "phaseshift/verify.hpp"

namespace {

using namespace phaseshift;
namespace an = phaseshift::analytics;
using std::numbers::pi;

struct Verdict {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    const char *title;
    double limit_s; // 0 = no runtime limit
    std::function<Verdict()> body;
};

PhaseAngle th(double r) { return PhaseAngle(r); }
FailureProb ep(double e) { return FailureProb(e); }

std::string num(const char *f, double a, double b = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

Verdict cube_law() {
    double worst = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double e = k / 101.0;
        worst = std::max(worst,
                         std::abs(an::deviation(th(pi / 3.0), ep(e)) - e * e * e));
    }
    return {worst <= 1e-15, num("max |D - eps^3| = %.3g", worst)};
}

Verdict oracle_equivalence() {
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
        for (int j = 0; j < 25; ++j) {
            const double t = pi * i / 24.0, e = j / 24.0;
            const auto inst = sim::crafted_instance(8, ep(e), 0, 1);
            const double f =
                sim::measured_failure(sim::one_iteration(inst, th(t)), 1);
            worst = std::max(worst, std::abs(f - an::deviation(th(t), ep(e))));
        }
    }
    return {worst <= 1e-10, num("max |sim - D| = %.3g over 625 points", worst)};
}

Verdict table4() {
    const double angles[] = {pi / 2.0, 2.0 * pi / 3.0, 3.0 * pi / 4.0,
                             5.0 * pi / 6.0, pi};
    const double want[] = {5.0 / 3.0, 7.0 / 3.0,
                           (5.0 + 2.0 * std::numbers::sqrt2) / 3.0,
                           (5.0 + 2.0 * std::numbers::sqrt3) / 3.0, 3.0};
    double rho_err = 0.0, ratio_err = 0.0;
    for (int k = 0; k < 5; ++k) {
        rho_err = std::max(rho_err, std::abs(an::rho(th(angles[k])) - want[k]));
        ratio_err = std::max(
            ratio_err,
            std::abs(an::success_ratio(th(angles[k]), ep(1.0 - 1e-4)) - want[k]));
    }
    return {rho_err <= 1e-12 && ratio_err <= 1e-3,
            num("rho err %.3g, ratio(1-1e-4) err %.3g", rho_err, ratio_err)};
}

Verdict thresholds() {
    const double angles[] = {pi, 2.0 * pi / 3.0, pi / 2.0, pi / 3.0, 0.0};
    const double want[] = {0.6, 0.5, 1.0 / 3.0, 0.0, -1.0};
    double worst = 0.0;
    bool signs = true;
    for (int k = 0; k < 5; ++k) {
        const PhaseAngle t = th(angles[k]);
        const double tau = an::epsilon_threshold(t);
        worst = std::max(worst, std::abs(tau - want[k]));
        if (tau > 0.0 && tau < 1.0) {
            signs = signs && an::deviation_gap(t, ep(tau - 1e-6)) > 0.0 &&
                    an::deviation_gap(t, ep(tau + 1e-6)) < 0.0;
        } else if (k == 3) {
            // The gap is identically zero at pi/3: no flip to observe.
            signs = signs && std::abs(an::deviation_gap(t, ep(1e-6))) <= 1e-15 &&
                    std::abs(an::deviation_gap(t, ep(0.5))) <= 1e-15;
        } else {
            // tau = -1 lies outside [0, 1]; the gap keeps one sign.
            for (int j = 1; j < 100; ++j) {
                signs = signs && an::deviation_gap(t, ep(j / 100.0)) > 0.0;
            }
        }
    }
    return {worst <= 1e-15 && signs,
            num("max |tau - expected| = %.3g, sign flips ", worst) +
                (signs ? "ok" : "WRONG")};
}

Verdict examples() {
    const double a1 = an::average_zero_point(EpsilonRange(0.0, 0.5)).degrees();
    const double a2 = an::average_zero_point(EpsilonRange(0.0, 0.75)).degrees();
    const double k1 = an::kappa(EpsilonRange(0.0, 0.5));
    const double k2 = an::kappa(EpsilonRange(0.0, 0.75));
    const bool pass = std::abs(a1 - 72.5) <= 0.5 && std::abs(a2 - 86.0) <= 0.5 &&
                      std::abs(k1 - 0.16) <= 0.005 && std::abs(k2 - 0.30) <= 0.005;
    return {pass, num("theta1 %.4f deg, theta2 %.4f deg", a1, a2) +
                      num(", kappa %.5f / %.5f", k1, k2)};
}

Verdict monotonicity() {
    double rise = 0.0, ends = 0.0, t3 = 0.0;
    for (double e : {0.75, 0.9, 0.99}) {
        double prev = an::deviation(th(0.0), ep(e));
        ends = std::max(ends, std::abs(prev - e));
        for (int k = 1; k < 1000; ++k) {
            const double t = std::min(pi, pi * k / 999.0);
            const double v = an::deviation(th(t), ep(e));
            rise = std::max(rise, v - prev);
            prev = v;
        }
        ends = std::max(ends, std::abs(prev - e * (4 * e - 3) * (4 * e - 3)));
    }
    for (double t : {pi / 2.0, 2.0 * pi / 3.0, 3.0 * pi / 4.0, 5.0 * pi / 6.0}) {
        for (int k = 1; k <= 20; ++k) {
            const double e = 0.75 + 0.0125 * k;
            t3 = std::max(t3, std::abs(an::table3_deviation(th(t), ep(e)) -
                                       an::deviation(th(t), ep(e))));
        }
    }
    return {rise <= 1e-14 && ends <= 1e-12 && t3 <= 1e-12,
            num("max rise %.3g, endpoint err %.3g", rise, ends) +
                num(", closed form err %.3g", t3)};
}

Verdict recursion() {
    double abs_err = 0.0, rel_err = 0.0;
    for (double t : {pi / 3.0, pi / 2.0, 5.0 * pi / 6.0}) {
        for (double e0 : {0.3, 0.75, 0.9}) {
            const auto inst = sim::crafted_instance(8, ep(e0), 0, 1);
            const auto f = sim::recursion_failures(inst, th(t), 5);
            const auto tr = an::recurrence_trace(th(t), ep(e0), 5);
            for (int m = 0; m <= 5; ++m) {
                abs_err = std::max(abs_err, std::abs(f[m] - tr.epsilons[m]));
                if (t == pi / 3.0) {
                    const double want = std::pow(e0, std::pow(3.0, m));
                    rel_err = std::max(
                        rel_err, std::abs(tr.epsilons[m] - want) / want);
                }
            }
        }
    }
    return {abs_err <= 1e-8 && rel_err <= 1e-9,
            num("max |sim - trace| = %.3g, pi/3 relative err %.3g", abs_err,
                rel_err)};
}

Verdict certainty() {
    double worst = 0.0;
    for (double e : {0.1, 0.25, 0.5, 0.75}) {
        const auto inst = sim::crafted_instance(8, ep(e), 0, 1);
        const PhaseAngle t = an::zero_deviation_point(ep(e));
        worst = std::max(worst,
                         sim::measured_failure(sim::one_iteration(inst, t), 1));
    }
    double grover = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        const auto h = sim::hadamard_instance(2, k);
        grover = std::max(grover,
                          sim::measured_failure(sim::one_iteration(h, th(pi)), k));
    }
    return {worst <= 1e-10 && grover <= 1e-15,
            num("zero-point failure %.3g, N=4 Grover failure %.3g", worst,
                grover)};
}

Verdict property_suite() {
    const verify::Report r = verify::run_all();
    std::string failed;
    for (const auto &c : r.checks) {
        if (!c.pass) {
            failed += " " + c.module + "/" + c.name;
        }
    }
    return {r.all_pass(), std::to_string(r.checks.size()) + " checks" +
                              (failed.empty() ? "" : ", failing:" + failed)};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "phase pi/3 cube law", 1e-3, cube_law},
        {2, "oracle equivalence (N=8, 25x25)", 5.0, oracle_equivalence},
        {3, "rho table", 0.0, table4},
        {4, "epsilon thresholds and gap sign", 0.0, thresholds},
        {5, "average zero points and kappa", 0.0, examples},
        {6, "large-eps monotonicity and closed forms", 0.0, monotonicity},
        {7, "fixed-point recursion (N=8)", 10.0, recursion},
        {8, "zero-deviation certainty", 0.0, certainty},
        {9, "property suite", 60.0, property_suite},
    };
    int failures = 0;
    for (const Criterion &c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v{false, ""};
        try {
            v = c.body();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        const bool in_time = c.limit_s == 0.0 || s < c.limit_s;
        const bool pass = v.pass && in_time;
        failures += pass ? 0 : 1;
        std::printf("[%s] criterion %d: %s: %s; %.3g s", pass ? "PASS" : "FAIL",
                    c.id, c.title, v.detail.c_str(), s);
        if (c.limit_s > 0.0) {
            std::printf(" (limit %g s)", c.limit_s);
        }
        std::printf("\n");
    }
    std::printf("%d of %zu criteria passed\n",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
