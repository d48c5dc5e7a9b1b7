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

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "phaseshift/analytics.hpp"
#include "phaseshift/harness.hpp"

namespace phaseshift::harness {

namespace {

using std::numbers::pi;
namespace an = analytics;

constexpr double kThresholdTol = 1e-15;
constexpr double kIdentityTol = 1e-12;
constexpr double kBoundaryBand = 1e-9;

// Counts grid points where classify() disagrees with `expected` among those
// selected by `applies`.
int count_violations(const std::vector<double> &thetas,
                     const std::function<bool(double, double)> &applies,
                     Classification expected) {
    int bad = 0;
    for (double t : thetas) {
        const PhaseAngle theta(t);
        for (int k = 1; k <= 99; ++k) {
            const double e = 0.01 * k;
            if (!applies(t, e)) {
                continue;
            }
            if (an::classify(theta, FailureProb(e)) != expected) {
                ++bad;
            }
        }
    }
    return bad;
}

TableRow count_row(std::string theta, std::string cond, std::string claim,
                   int violations) {
    TableRow r{std::move(theta), std::move(cond), std::move(claim),
               static_cast<double>(violations), 0.0,
               static_cast<double>(violations), violations == 0};
    return r;
}

TableRow value_row(std::string theta, std::string cond, std::string claim,
                   double computed, double expected, double tol) {
    const double err = std::abs(computed - expected);
    return TableRow{std::move(theta), std::move(cond), std::move(claim),
                    computed,         expected,        err,
                    err <= tol};
}

TableReport finish(int number, std::string title, std::vector<TableRow> rows) {
    const bool pass = std::all_of(rows.begin(), rows.end(),
                                  [](const TableRow &r) { return r.pass; });
    return TableReport{number, std::move(title), std::move(rows), pass};
}

double tau(double theta) { return an::epsilon_threshold(PhaseAngle(theta)); }

TableReport table1() {
    std::vector<double> above, below;
    for (int k = 1; k <= 60; ++k) {
        above.push_back(std::min(pi, pi / 3.0 + (2.0 * pi / 3.0) * k / 60.0));
    }
    for (int k = 0; k < 60; ++k) {
        below.push_back((pi / 3.0) * k / 60.0);
    }
    std::vector<TableRow> rows;
    rows.push_back(count_row(
        "theta > pi/3", "eps > 1 - 2/(3 - 2cos theta)", "D < eps^3",
        count_violations(
            above,
            [](double t, double e) { return e > tau(t) + kBoundaryBand; },
            Classification::BelowCube)));
    rows.push_back(count_row(
        "theta < pi/3", "any eps", "D > eps^3",
        count_violations(
            below, [](double, double) { return true; },
            Classification::AboveCube)));
    rows.push_back(count_row(
        "theta > pi/3", "eps < 1 - 2/(3 - 2cos theta)", "D > eps^3",
        count_violations(
            above,
            [](double t, double e) { return e < tau(t) - kBoundaryBand; },
            Classification::AboveCube)));
    return finish(1, "The phase shifts for deviations", std::move(rows));
}

TableReport table2() {
    constexpr double delta = 0.2;
    const double bound =
        an::phase_bound_for_delta(FailureProb(delta)).radians();
    std::vector<TableRow> rows;
    rows.push_back(value_row("theta > pi/3", "eps > 3/5", "D < eps^3",
                             tau(pi), 3.0 / 5.0, kThresholdTol));
    rows.push_back(value_row("pi/3 < theta <= 2pi/3", "eps > 1/2", "D < eps^3",
                             tau(2.0 * pi / 3.0), 0.5, kThresholdTol));
    rows.push_back(value_row("pi/3 < theta <= pi/2", "eps > 1/3", "D < eps^3",
                             tau(pi / 2.0), 1.0 / 3.0, kThresholdTol));
    rows.push_back(value_row("pi/3 < theta <= arccos((1-3d)/(2(1-d)))",
                             "eps > d (d = 0.2)", "D < eps^3", tau(bound),
                             delta, kThresholdTol));
    return finish(2, "The phase shifts for D(theta) < eps^3", std::move(rows));
}

TableReport table3() {
    struct Entry {
        double theta;
        const char *label;
        const char *form;
    };
    const Entry entries[] = {
        {pi / 2.0, "pi/2", "eps (2eps - 1)^2"},
        {2.0 * pi / 3.0, "2pi/3", "eps (3eps - 2)^2"},
        {3.0 * pi / 4.0, "3pi/4", "eps ((sqrt2+2)eps - (sqrt2+1))^2"},
        {5.0 * pi / 6.0, "5pi/6", "eps ((sqrt3+2)eps - (sqrt3+1))^2"},
    };
    std::vector<TableRow> rows;
    for (const Entry &en : entries) {
        const PhaseAngle theta(en.theta);
        double worst = 0.0;
        for (int k = 1; k <= 20; ++k) {
            const FailureProb eps(0.75 + 0.0125 * k);
            worst = std::max(worst,
                             std::abs(an::table3_deviation(theta, eps) -
                                      an::deviation(theta, eps)));
        }
        rows.push_back(value_row(en.label, "eps > 3/4 (20 samples)", en.form,
                                 worst, 0.0, kIdentityTol));
    }
    return finish(3, "The deviations for eps > 3/4", std::move(rows));
}

TableReport table4() {
    struct Entry {
        double theta;
        const char *label;
        const char *form;
        double expected;
    };
    const Entry entries[] = {
        {pi / 2.0, "pi/2", "5/3", 5.0 / 3.0},
        {2.0 * pi / 3.0, "2pi/3", "7/3", 7.0 / 3.0},
        {3.0 * pi / 4.0, "3pi/4", "(5+2sqrt2)/3",
         (5.0 + 2.0 * std::numbers::sqrt2) / 3.0},
        {5.0 * pi / 6.0, "5pi/6", "(5+2sqrt3)/3",
         (5.0 + 2.0 * std::numbers::sqrt3) / 3.0},
        {pi, "pi", "3", 3.0},
    };
    std::vector<TableRow> rows;
    for (const Entry &en : entries) {
        rows.push_back(value_row(en.label, "eps -> 1", en.form,
                                 an::rho(PhaseAngle(en.theta)), en.expected,
                                 kIdentityTol));
    }
    return finish(4, "rho values for the Phase-theta search", std::move(rows));
}

} // namespace

TablesReport reproduce_tables() {
    TablesReport report;
    report.tables.push_back(table1());
    report.tables.push_back(table2());
    report.tables.push_back(table3());
    report.tables.push_back(table4());
    return report;
}

std::string_view name(FigureId id) noexcept {
    switch (id) {
    case FigureId::DevVsTheta:
        return "dev_vs_theta";
    case FigureId::GapSurface:
        return "gap_surface";
    case FigureId::ZeroLocus:
        return "zero_locus";
    case FigureId::RhoCurve:
        return "rho_curve";
    }
    return "?";
}

FigureId parse_figure(std::string_view text) {
    for (FigureId id : {FigureId::DevVsTheta, FigureId::GapSurface,
                        FigureId::ZeroLocus, FigureId::RhoCurve}) {
        if (name(id) == text) {
            return id;
        }
    }
    throw std::invalid_argument("unknown figure '" + std::string(text) + "'");
}

FigureData figure_data(FigureId id, unsigned threads) {
    SweepSpec spec;
    std::string header;
    switch (id) {
    case FigureId::DevVsTheta:
        spec.theta_grid = default_theta_grid();
        for (double e : {0.75, 0.8, 0.9, 0.99}) {
            spec.eps_grid.emplace_back(e);
        }
        spec.quantities = {Quantity::Deviation};
        header = "dev_vs_theta: theta 181 points over [0, pi] x eps in "
                 "{0.75, 0.8, 0.9, 0.99}; deviation vs theta";
        break;
    case FigureId::GapSurface:
        spec.theta_grid = default_theta_grid();
        spec.eps_grid = default_eps_grid();
        spec.quantities = {Quantity::Gap};
        header = "gap_surface: theta 181 points over [0, pi] x eps 99 points "
                 "over [0.01, 0.99]; D - eps^3";
        break;
    case FigureId::ZeroLocus: {
        SweepTable table;
        table.quantities = {Quantity::Deviation};
        for (FailureProb eps : eps_linspace(0.01, 0.75, 75)) {
            const PhaseAngle theta = analytics::zero_deviation_point(eps);
            SweepRecord rec;
            rec.theta = theta.radians();
            rec.eps = eps.value();
            rec.values = {analytics::deviation(theta, eps)};
            table.records.push_back(std::move(rec));
        }
        return FigureData{id,
                          "zero_locus: eps 75 points over [0.01, 0.75]; theta "
                          "is the zero deviation point, deviation ~ 0",
                          std::move(table)};
    }
    case FigureId::RhoCurve:
        spec.theta_grid = default_theta_grid();
        spec.eps_grid = {FailureProb(1.0)};
        spec.quantities = {Quantity::Rho, Quantity::Ratio};
        header = "rho_curve: theta 181 points over [0, pi] at eps = 1; rho "
                 "and the rational success ratio";
        break;
    }
    return FigureData{id, std::move(header), run_sweep(spec, threads)};
}

} // namespace phaseshift::harness
