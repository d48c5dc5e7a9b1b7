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

#include "phaseshift/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "phaseshift/analytics.hpp"
#include "phaseshift/harness.hpp"
#include "phaseshift/simulator.hpp"

namespace phaseshift::verify {

namespace {

using std::numbers::pi;
namespace an = analytics;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

// Tracks the worst |error| seen and where.
class Worst {
  public:
    explicit Worst(double tol) : tol_(tol) {}

    void see(double err, double theta, double eps) {
        if (!(err <= worst_)) {
            worst_ = std::isnan(err) ? INFINITY : err;
            theta_ = theta;
            eps_ = eps;
        }
    }

    Outcome outcome() const {
        return {worst_ <= tol_,
                fmt("max err %.3g at (%.6g, %.6g)", worst_, theta_, eps_)};
    }

  private:
    double tol_;
    double worst_ = 0.0;
    double theta_ = 0.0;
    double eps_ = 0.0;
};

// First counterexample of a predicate over a grid.
class Counter {
  public:
    void fail(double theta, double eps) {
        if (failures_++ == 0) {
            theta_ = theta;
            eps_ = eps;
        }
    }
    Outcome outcome(int checked) const {
        if (failures_ == 0) {
            return {true, std::to_string(checked) + " points"};
        }
        return {false, std::to_string(failures_) + " of " +
                           std::to_string(checked) + " points fail, first at " +
                           fmt("theta=%.9g eps=%.9g", theta_, eps_)};
    }

  private:
    int failures_ = 0;
    double theta_ = 0.0;
    double eps_ = 0.0;
};

std::vector<double> grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) {
        g[i] = lo + (hi - lo) * i / (n - 1);
    }
    g.back() = hi;
    return g;
}

std::vector<double> open_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) {
        g[i] = lo + (hi - lo) * (i + 1) / (n + 1);
    }
    return g;
}

const std::vector<double> &theta_grid200() {
    static const std::vector<double> g = grid(0.0, pi, 200);
    return g;
}

const std::vector<double> &eps_grid200() {
    static const std::vector<double> g = grid(0.0, 1.0, 200);
    return g;
}

std::complex<double> random_amplitude(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = std::sqrt(unit(rng));
    const double phi = 2.0 * pi * unit(rng);
    return std::polar(r, phi);
}

const std::vector<EpsilonRange> &sample_ranges() {
    static const std::vector<EpsilonRange> r{
        {0.0, 0.5}, {0.0, 0.75}, {0.1, 0.2}, {0.3, 0.7}, {0.5, 0.75}, {0.01, 0.02}};
    return r;
}

// ---------------------------------------------------------------- analytics

Outcome bounds() {
    Counter c;
    int n = 0;
    for (double t : theta_grid200()) {
        for (double e : eps_grid200()) {
            const double d = an::deviation(PhaseAngle(t), FailureProb(e));
            ++n;
            if (!(d >= 0.0 && d <= 1.0)) {
                c.fail(t, e);
            }
        }
    }
    return c.outcome(n);
}

Outcome reduction_identity() {
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> angle(0.0, pi);
    Worst w(1e-12);
    for (int k = 0; k < 1000; ++k) {
        const PhaseAngle theta(angle(rng));
        const auto u = random_amplitude(rng);
        const double e = std::clamp(1.0 - std::norm(u), 0.0, 1.0);
        w.see(std::abs(an::deviation_raw(theta, u) -
                       an::deviation(theta, FailureProb(e))),
              theta.radians(), e);
    }
    return w.outcome();
}

Outcome phase_invariance() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(0.0, pi);
    std::uniform_real_distribution<double> turn(0.0, 2.0 * pi);
    Worst w(1e-12);
    for (int k = 0; k < 1000; ++k) {
        const PhaseAngle theta(angle(rng));
        const auto u = random_amplitude(rng);
        const auto rotated = u * std::polar(1.0, turn(rng));
        w.see(std::abs(an::deviation_raw(theta, rotated) -
                       an::deviation_raw(theta, u)),
              theta.radians(), 1.0 - std::norm(u));
    }
    return w.outcome();
}

Outcome gap_consistency() {
    Worst w(1e-12);
    for (double t : theta_grid200()) {
        for (double e : eps_grid200()) {
            const PhaseAngle theta(t);
            const FailureProb eps(e);
            w.see(std::abs(an::deviation_gap(theta, eps) -
                           (an::deviation(theta, eps) - e * e * e)),
                  t, e);
        }
    }
    return w.outcome();
}

Outcome gap_positive_below_pi3() {
    Counter c;
    int n = 0;
    for (double t : grid(0.0, pi / 3.0, 201)) {
        if (t >= pi / 3.0) {
            continue;
        }
        for (double e : open_grid(0.0, 1.0, 199)) {
            ++n;
            if (!(an::deviation_gap(PhaseAngle(t), FailureProb(e)) > 0.0)) {
                c.fail(t, e);
            }
        }
    }
    return c.outcome(n);
}

Outcome gap_sign_biconditional() {
    Counter c;
    int n = 0;
    for (double t : theta_grid200()) {
        if (std::abs(t - pi / 3.0) <= 1e-9) {
            continue;
        }
        const PhaseAngle theta(t);
        const double tau = an::epsilon_threshold(theta);
        for (double e : open_grid(0.0, 1.0, 199)) {
            if (std::abs(e - tau) <= 1e-9) {
                continue;
            }
            ++n;
            const bool below = an::deviation_gap(theta, FailureProb(e)) < 0.0;
            const bool predicted = t > pi / 3.0 && e > tau;
            if (below != predicted) {
                c.fail(t, e);
            }
        }
    }
    return c.outcome(n);
}

Outcome threshold_monotone() {
    const auto g = grid(0.0, pi, 10001);
    double prev = -INFINITY;
    for (double t : g) {
        const double v = an::epsilon_threshold(PhaseAngle(t));
        if (v < prev) {
            return {false, fmt("decreases at theta=%.9g", t)};
        }
        prev = v;
    }
    const double lo = an::epsilon_threshold(PhaseAngle(0.0));
    const double hi = an::epsilon_threshold(PhaseAngle(pi));
    const bool ends = std::abs(lo + 1.0) <= 1e-15 && std::abs(hi - 0.6) <= 1e-15;
    return {ends, fmt("tau(0)=%.17g tau(pi)=%.17g", lo, hi)};
}

Outcome zero_points() {
    Worst w(1e-12);
    for (double e : grid(0.0, 0.75, 301)) {
        if (e <= 0.0) {
            continue;
        }
        const FailureProb eps(e);
        const PhaseAngle theta = an::zero_deviation_point(eps);
        w.see(an::deviation(theta, eps), theta.radians(), e);
        if (!(theta.radians() > pi / 3.0)) {
            return {false, fmt("zero point %.17g not above pi/3 at eps=%.6g",
                               theta.radians(), e)};
        }
    }
    return w.outcome();
}

Outcome quadrature() {
    Worst w(1e-9);
    for (const EpsilonRange &r : sample_ranges()) {
        auto f = [](double e) { return 1.0 - 1.0 / (2.0 * (1.0 - e)); };
        const double integral =
            boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
                f, r.beta(), r.alpha(), 15, 1e-14);
        const double mean = integral / (r.alpha() - r.beta());
        w.see(std::abs(an::average_zero_point_cosine(r) - mean), r.beta(),
              r.alpha());
    }
    return w.outcome();
}

Outcome avg_point_deviation_consistency() {
    Worst w(1e-12);
    for (const EpsilonRange &r : sample_ranges()) {
        const PhaseAngle bar = an::average_zero_point(r);
        if (!(bar.radians() > pi / 3.0)) {
            return {false, "average zero point not above pi/3"};
        }
        for (double e : open_grid(0.0, 1.0, 99)) {
            const FailureProb eps(e);
            w.see(std::abs(an::average_zero_point_deviation(eps, r) -
                           an::deviation(bar, eps)),
                  bar.radians(), e);
        }
    }
    return w.outcome();
}

Outcome kappa_property() {
    Counter c;
    int n = 0;
    for (const EpsilonRange &r : sample_ranges()) {
        const double k = an::kappa(r);
        if (!(k > 0.0 && k < 1.0)) {
            return {false, fmt("kappa=%.17g outside (0,1)", k)};
        }
        for (double e : open_grid(k + 1e-6, 1.0, 400)) {
            ++n;
            if (!(an::average_zero_point_deviation(FailureProb(e), r) < e * e * e)) {
                c.fail(r.alpha(), e);
            }
        }
    }
    return c.outcome(n);
}

Outcome large_eps_monotone() {
    const auto thetas = grid(0.0, pi, 1000);
    for (double e : {0.75, 0.8, 0.9, 0.99}) {
        const FailureProb eps(e);
        double prev = INFINITY;
        for (double t : thetas) {
            const double d = an::deviation(PhaseAngle(t), eps);
            if (d > prev + 1e-14) {
                return {false, fmt("rise at theta=%.9g eps=%.3g", t, e)};
            }
            prev = d;
        }
        const double first = an::deviation(PhaseAngle(0.0), eps);
        const double last = an::deviation(PhaseAngle(pi), eps);
        const double floor = e * (4.0 * e - 3.0) * (4.0 * e - 3.0);
        if (std::abs(first - e) > 1e-12 || std::abs(last - floor) > 1e-12) {
            return {false, fmt("endpoints %.17g, %.17g at eps=%.3g", first, last, e)};
        }
    }
    return {true, "eps in {0.75, 0.8, 0.9, 0.99}, 1000 theta points"};
}

Outcome large_eps_lower_bound() {
    Counter c;
    int n = 0;
    for (double e : grid(0.75, 1.0, 51)) {
        const FailureProb eps(e);
        const double floor = an::min_deviation_large_eps(eps);
        for (double t : theta_grid200()) {
            ++n;
            if (an::deviation(PhaseAngle(t), eps) < floor - 1e-12) {
                c.fail(t, e);
            }
        }
    }
    return c.outcome(n);
}

Outcome table3_identities() {
    Worst w(1e-12);
    for (double t : {pi / 2.0, 2.0 * pi / 3.0, 3.0 * pi / 4.0, 5.0 * pi / 6.0}) {
        const PhaseAngle theta(t);
        for (double e : eps_grid200()) {
            const FailureProb eps(e);
            w.see(std::abs(an::table3_deviation(theta, eps) -
                           an::deviation(theta, eps)),
                  t, e);
        }
    }
    return w.outcome();
}

Outcome small_eps_asymptotics() {
    constexpr double e = 1e-3;
    Counter c;
    int n = 0;
    for (double t : theta_grid200()) {
        if (std::abs(2.0 * std::cos(t) - 1.0) <= 0.1) {
            continue;
        }
        ++n;
        if (!(e * e * e / an::deviation(PhaseAngle(t), FailureProb(e)) < 1e-3)) {
            c.fail(t, e);
        }
    }
    return c.outcome(n);
}

Outcome ratio_consistency() {
    Worst w(1e-12);
    const PhaseAngle base(pi / 3.0);
    for (double t : theta_grid200()) {
        for (double e : open_grid(0.0, 1.0, 99)) {
            const PhaseAngle theta(t);
            const FailureProb eps(e);
            const double quotient = an::success_probability(theta, eps) /
                                    an::success_probability(base, eps);
            w.see(std::abs(an::success_ratio(theta, eps) - quotient), t, e);
        }
    }
    return w.outcome();
}

Outcome rho_limit() {
    Worst w(1e-3);
    const FailureProb eps(1.0 - 1e-4);
    for (double t : theta_grid200()) {
        const PhaseAngle theta(t);
        w.see(std::abs(an::success_ratio(theta, eps) - an::rho(theta)), t,
              eps.value());
    }
    const Outcome o = w.outcome();
    // rho must also rise monotonically from 1/3 to 3.
    double prev = -INFINITY;
    for (double t : theta_grid200()) {
        const double r = an::rho(PhaseAngle(t));
        if (r < prev) {
            return {false, fmt("rho decreases at theta=%.9g", t)};
        }
        prev = r;
    }
    return o;
}

Outcome phase_bound_corollary() {
    Counter c;
    int n = 0;
    for (double delta : {0.05, 0.1, 1.0 / 3.0, 0.45, 0.5, 0.6}) {
        const double bound = an::phase_bound_for_delta(FailureProb(delta)).radians();
        for (double t : grid(pi / 3.0, bound, 41)) {
            if (t <= pi / 3.0 + 1e-6) {
                continue;
            }
            for (double e : open_grid(delta + 1e-6, 1.0, 60)) {
                ++n;
                if (an::classify(PhaseAngle(t), FailureProb(e)) !=
                    Classification::BelowCube) {
                    c.fail(t, e);
                }
            }
        }
    }
    return c.outcome(n);
}

Outcome recursion_closed_form() {
    Worst w(1e-9);
    for (double e0 : {0.1, 0.3, 0.5, 0.75, 0.9, 0.99}) {
        const auto trace =
            an::recurrence_trace(PhaseAngle(pi / 3.0), FailureProb(e0), 5);
        for (std::size_t m = 0; m < trace.epsilons.size(); ++m) {
            const double exact = std::pow(e0, std::pow(3.0, static_cast<double>(m)));
            if (exact < an::kUnderflowFlush) {
                continue;
            }
            w.see(std::abs(trace.epsilons[m] - exact) / exact,
                  static_cast<double>(m), e0);
        }
        for (std::size_t m = 0; m + 1 < trace.epsilons.size(); ++m) {
            const double next =
                an::deviation(trace.theta, FailureProb(trace.epsilons[m]));
            if (!trace.flushed[m + 1] && next != trace.epsilons[m + 1]) {
                return {false, "trace step does not equal deviation()"};
            }
        }
    }
    return w.outcome();
}

// ---------------------------------------------------------------- simulator

Outcome unitarity() {
    Worst w(1e-8);
    for (std::size_t dim : {2u, 3u, 4u, 8u, 16u, 64u}) {
        for (double e : {0.0, 0.02, 0.3, 0.5, 0.75, 0.98, 1.0}) {
            const auto inst = sim::crafted_instance(dim, FailureProb(e), 0, 1);
            w.see(inst.unitary().unitarity_error(), static_cast<double>(dim), e);
            for (std::size_t m : {1u, 3u, 6u}) {
                w.see(sim::recursion_unitary(inst, PhaseAngle(pi / 3.0), m)
                          .unitarity_error(),
                      static_cast<double>(dim), e);
            }
        }
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto inst = sim::hadamard_instance(n, (std::size_t{1} << n) - 1);
        w.see(inst.unitary().unitarity_error(), static_cast<double>(n), 0.0);
    }
    return w.outcome();
}

Outcome norm_preservation() {
    Worst w(1e-10);
    for (double t : grid(0.0, pi, 25)) {
        for (double e : grid(0.02, 0.98, 25)) {
            const auto inst = sim::crafted_instance(8, FailureProb(e), 0, 1);
            const auto out = sim::one_iteration(inst, PhaseAngle(t));
            w.see(std::abs(out.norm() - 1.0), t, e);
        }
    }
    return w.outcome();
}

Outcome oracle_equivalence() {
    Worst w(1e-10);
    for (double e : grid(0.02, 0.98, 25)) {
        const FailureProb eps(e);
        const auto inst = sim::crafted_instance(8, eps, 0, 1);
        for (double t : grid(0.0, pi, 25)) {
            const PhaseAngle theta(t);
            const double simulated =
                sim::measured_failure(sim::one_iteration(inst, theta), 1);
            w.see(std::abs(simulated - an::deviation(theta, eps)), t, e);
        }
    }
    return w.outcome();
}

Outcome transformed_state_decomposition() {
    Worst w(1e-10);
    for (double e : grid(0.02, 0.98, 25)) {
        const auto inst = sim::crafted_instance(8, FailureProb(e), 0, 1);
        const Eigen::VectorXcd us = inst.unitary().column(0).amplitudes();
        const std::complex<double> uts = inst.amplitude();
        for (double t : grid(0.0, pi, 25)) {
            const std::complex<double> z = std::polar(1.0, t);
            const std::complex<double> coeff = z + std::norm(uts) * (z - 1.0) * (z - 1.0);
            Eigen::VectorXcd expected = coeff * us;
            expected(1) += uts * (z - 1.0);
            const auto out = sim::one_iteration(inst, PhaseAngle(t));
            w.see((out.amplitudes() - expected).cwiseAbs().maxCoeff(), t, e);
        }
    }
    return w.outcome();
}

Outcome recursion_consistency() {
    Worst w(1e-8);
    for (double t : {pi / 3.0, pi / 2.0, 5.0 * pi / 6.0}) {
        for (double e0 : {0.3, 0.75, 0.9}) {
            const PhaseAngle theta(t);
            const auto inst = sim::crafted_instance(8, FailureProb(e0), 0, 1);
            const auto simulated = sim::recursion_failures(inst, theta, 6);
            const auto trace = an::recurrence_trace(theta, FailureProb(e0), 6);
            for (std::size_t m = 0; m <= 6; ++m) {
                w.see(std::abs(simulated[m] - trace.epsilons[m]), t, e0);
            }
        }
    }
    return w.outcome();
}

Outcome inversion_reduction() {
    Worst w(1e-12);
    std::vector<sim::SearchInstance> instances;
    for (double e : {0.1, 0.5, 0.875, 0.98}) {
        instances.push_back(sim::crafted_instance(8, FailureProb(e), 0, 1));
    }
    instances.push_back(sim::hadamard_instance(3, 5));
    for (const auto &inst : instances) {
        const auto n = static_cast<Eigen::Index>(inst.dim());
        const Eigen::MatrixXcd &u = inst.unitary().entries();
        const Eigen::VectorXcd psi = u.col(static_cast<Eigen::Index>(inst.s_index()));
        const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
        Eigen::MatrixXcd oracle = id;
        oracle(static_cast<Eigen::Index>(inst.t_index()),
               static_cast<Eigen::Index>(inst.t_index())) = -1.0;
        const Eigen::MatrixXcd diffusion = id - 2.0 * psi * psi.adjoint();
        const Eigen::MatrixXcd classic = diffusion * oracle * u;
        const auto phased = sim::iteration_matrix(inst, PhaseAngle(pi));
        w.see((phased.entries() - classic).cwiseAbs().maxCoeff(), pi,
              inst.epsilon());
    }
    return w.outcome();
}

// ------------------------------------------------------------------ harness

harness::SweepSpec determinism_spec() {
    harness::SweepSpec spec;
    spec.theta_grid = harness::theta_linspace(37);
    spec.eps_grid = harness::eps_linspace(0.02, 0.98, 25);
    spec.mode = harness::CrossChecked{8};
    spec.quantities = {harness::Quantity::Deviation, harness::Quantity::Gap,
                       harness::Quantity::Threshold, harness::Quantity::Success,
                       harness::Quantity::Ratio, harness::Quantity::Rho};
    return spec;
}

Outcome sweep_determinism() {
    const auto spec = determinism_spec();
    std::string first;
    for (unsigned threads : {1u, 2u, 4u, 7u}) {
        const auto table = harness::run_sweep(spec, threads);
        std::ostringstream csv, json;
        harness::write_csv(csv, table);
        harness::write_json(json, table);
        const std::string bytes = csv.str() + json.str();
        if (first.empty()) {
            first = bytes;
        } else if (bytes != first) {
            return {false, "output differs with " + std::to_string(threads) +
                               " threads"};
        }
    }
    return {true, std::to_string(first.size()) + " bytes identical across 1, 2, "
                                                 "4 and 7 threads"};
}

Outcome sweep_discrepancy() {
    const auto table = harness::run_sweep(determinism_spec());
    Worst w(1e-10);
    for (const auto &r : table.records) {
        if (r.eps >= 0.02 && r.eps <= 0.98) {
            w.see(r.abs_discrepancy.value_or(INFINITY), r.theta, r.eps);
        }
    }
    return w.outcome();
}

Outcome tables_reproduced() {
    const auto report = harness::reproduce_tables();
    std::string detail;
    for (const auto &t : report.tables) {
        detail += "T" + std::to_string(t.number) + (t.pass ? ":ok " : ":FAIL ");
    }
    return {report.all_pass(), detail};
}

struct Check {
    const char *module;
    const char *name;
    Outcome (*run)();
};

constexpr Check kChecks[] = {
    {"analytics", "deviation bounded in [0,1]", bounds},
    {"analytics", "reduction identity (1000 random amplitudes)", reduction_identity},
    {"analytics", "phase invariance of raw deviation", phase_invariance},
    {"analytics", "gap consistency on 200x200 grid", gap_consistency},
    {"analytics", "gap > 0 below pi/3", gap_positive_below_pi3},
    {"analytics", "gap < 0 iff theta > pi/3 and eps > tau", gap_sign_biconditional},
    {"analytics", "threshold monotone with exact endpoints", threshold_monotone},
    {"analytics", "zero deviation points vanish", zero_points},
    {"analytics", "average zero point matches quadrature", quadrature},
    {"analytics", "average zero point deviation consistency",
     avg_point_deviation_consistency},
    {"analytics", "kappa property", kappa_property},
    {"analytics", "large-eps monotonicity and endpoints", large_eps_monotone},
    {"analytics", "large-eps lower bound", large_eps_lower_bound},
    {"analytics", "large-eps closed forms", table3_identities},
    {"analytics", "small-eps asymptotics", small_eps_asymptotics},
    {"analytics", "success ratio equals probability quotient", ratio_consistency},
    {"analytics", "rho limit and monotonicity", rho_limit},
    {"analytics", "phase bound for delta guarantees BelowCube",
     phase_bound_corollary},
    {"analytics", "recursion closed form eps^(3^m)", recursion_closed_form},
    {"simulator", "unitarity of constructed and recursed matrices", unitarity},
    {"simulator", "norm preservation", norm_preservation},
    {"simulator", "oracle equivalence 25x25", oracle_equivalence},
    {"simulator", "transformed state decomposition",
     transformed_state_decomposition},
    {"simulator", "recursion consistency m<=6", recursion_consistency},
    {"simulator", "theta=pi equals selective inversions", inversion_reduction},
    {"harness", "sweep output deterministic across threads", sweep_determinism},
    {"harness", "cross-checked discrepancy <= 1e-10", sweep_discrepancy},
    {"harness", "tables reproduced", tables_reproduced},
};

} // namespace

bool Report::all_pass() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult &c) { return c.pass; });
}

Report run_all(const std::function<void(const CheckResult &)> &on_check) {
    using clock = std::chrono::steady_clock;
    Report report;
    const auto start = clock::now();
    for (const Check &check : kChecks) {
        const auto t0 = clock::now();
        CheckResult result{check.module, check.name, false, "", 0.0};
        try {
            const Outcome o = check.run();
            result.pass = o.pass;
            result.detail = o.detail;
        } catch (const std::exception &e) {
            result.detail = std::string("exception: ") + e.what();
        }
        result.seconds = std::chrono::duration<double>(clock::now() - t0).count();
        if (on_check) {
            on_check(result);
        }
        report.checks.push_back(std::move(result));
    }
    report.seconds = std::chrono::duration<double>(clock::now() - start).count();
    return report;
}

} // namespace phaseshift::verify
