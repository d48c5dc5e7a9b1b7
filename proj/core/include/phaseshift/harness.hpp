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
 * Parameter sweeps over (theta, eps), table reproduction and figure curve
 * data, with CSV / JSON emission.
 *
 * Sweeps may run on several threads; records are always returned in
 * row-major (theta outer, eps inner) order, so output is byte-identical for
 * any thread count.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "phaseshift/types.hpp"

namespace phaseshift::harness {

enum class Quantity { Deviation, Gap, Threshold, Success, Ratio, Rho };

std::string_view name(Quantity q) noexcept;
/// Inverse of name(); throws std::invalid_argument on unknown names.
Quantity parse_quantity(std::string_view text);

struct AnalyticOnly {};
/// Adds a simulated deviation from crafted_instance(dim, eps, 0, 1).
struct CrossChecked {
    std::size_t dim = 8;
};
using SweepMode = std::variant<AnalyticOnly, CrossChecked>;

struct SweepSpec {
    std::vector<PhaseAngle> theta_grid;
    std::vector<FailureProb> eps_grid;
    SweepMode mode = AnalyticOnly{};
    std::vector<Quantity> quantities;
};

/// Throws std::invalid_argument unless both grids are nonempty and strictly
/// increasing, quantities are distinct, and something is requested.
void validate(const SweepSpec &spec);

struct SweepRecord {
    double theta = 0.0;
    double eps = 0.0;
    /// Parallel to the table's quantity list.
    std::vector<double> values;
    std::optional<double> sim_deviation;
    std::optional<double> abs_discrepancy;
};

struct SweepTable {
    std::vector<Quantity> quantities;
    bool cross_checked = false;
    std::vector<SweepRecord> records;
};

/// One record per (theta, eps) pair, theta outer. `threads` == 0 picks the
/// hardware concurrency. Domain errors are rethrown with the offending grid
/// point prepended.
SweepTable run_sweep(const SweepSpec &spec, unsigned threads = 0);

/// n evenly spaced angles over [0, pi]; the last point is exactly pi.
std::vector<PhaseAngle> theta_linspace(std::size_t n);
/// n evenly spaced probabilities over [lo, hi].
std::vector<FailureProb> eps_linspace(double lo, double hi, std::size_t n);

inline constexpr std::size_t kDefaultThetaPoints = 181;
inline constexpr std::size_t kDefaultEpsPoints = 99;
std::vector<PhaseAngle> default_theta_grid();
std::vector<FailureProb> default_eps_grid();

// -- serialization -----------------------------------------------------------

/// Shortest representation that round-trips to the same double.
std::string format_double(double x);

/// `theta_rad,eps,<quantity...>[,sim_deviation,abs_discrepancy]`, LF endings.
void write_csv(std::ostream &out, const SweepTable &table);
/// Array of objects with the CSV column names as keys, in column order.
void write_json(std::ostream &out, const SweepTable &table);

// -- tables ------------------------------------------------------------------

struct TableRow {
    std::string theta;     ///< phase condition, e.g. "pi/3 < theta <= pi/2"
    std::string condition; ///< eps condition
    std::string claim;     ///< tabulated statement or closed form
    double computed = 0.0;
    double expected = 0.0;
    double error = 0.0;
    bool pass = false;
};

struct TableReport {
    int number = 0;
    std::string title;
    std::vector<TableRow> rows;
    bool pass = false;
};

struct TablesReport {
    std::vector<TableReport> tables;
    bool all_pass() const;
};

/// Recomputes Tables 1 to 4 from the analytic formulas and checks each row.
TablesReport reproduce_tables();

void write_text(std::ostream &out, const TablesReport &report);
void write_json(std::ostream &out, const TablesReport &report);

// -- figures -----------------------------------------------------------------

enum class FigureId { DevVsTheta, GapSurface, ZeroLocus, RhoCurve };

std::string_view name(FigureId id) noexcept;
FigureId parse_figure(std::string_view text);

struct FigureData {
    FigureId id;
    /// Describes the canonical grid used.
    std::string header;
    SweepTable table;
};

FigureData figure_data(FigureId id, unsigned threads = 0);

} // namespace phaseshift::harness
