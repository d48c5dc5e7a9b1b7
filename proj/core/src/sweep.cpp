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
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "phaseshift/analytics.hpp"
#include "phaseshift/errors.hpp"
#include "phaseshift/harness.hpp"
#include "phaseshift/simulator.hpp"

namespace phaseshift::harness {

namespace {

constexpr Quantity kAllQuantities[] = {Quantity::Deviation, Quantity::Gap,
                                       Quantity::Threshold, Quantity::Success,
                                       Quantity::Ratio,     Quantity::Rho};

double evaluate(Quantity q, PhaseAngle theta, FailureProb eps) {
    switch (q) {
    case Quantity::Deviation:
        return analytics::deviation(theta, eps);
    case Quantity::Gap:
        return analytics::deviation_gap(theta, eps);
    case Quantity::Threshold:
        return analytics::epsilon_threshold(theta);
    case Quantity::Success:
        return analytics::success_probability(theta, eps);
    case Quantity::Ratio:
        return analytics::success_ratio(theta, eps);
    case Quantity::Rho:
        return analytics::rho(theta);
    }
    throw std::logic_error("unknown quantity");
}

template <class T, class Key> void check_increasing(const std::vector<T> &grid,
                                                    Key key, const char *what) {
    if (grid.empty()) {
        throw std::invalid_argument(std::string(what) + " grid is empty");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(key(grid[i - 1]) < key(grid[i]))) {
            throw std::invalid_argument(std::string(what) +
                                        " grid is not strictly increasing at "
                                        "index " +
                                        std::to_string(i));
        }
    }
}

} // namespace

std::string_view name(Quantity q) noexcept {
    switch (q) {
    case Quantity::Deviation:
        return "deviation";
    case Quantity::Gap:
        return "gap";
    case Quantity::Threshold:
        return "threshold";
    case Quantity::Success:
        return "success";
    case Quantity::Ratio:
        return "ratio";
    case Quantity::Rho:
        return "rho";
    }
    return "?";
}

Quantity parse_quantity(std::string_view text) {
    for (Quantity q : kAllQuantities) {
        if (name(q) == text) {
            return q;
        }
    }
    throw std::invalid_argument("unknown quantity '" + std::string(text) + "'");
}

void validate(const SweepSpec &spec) {
    check_increasing(spec.theta_grid, [](PhaseAngle a) { return a.radians(); },
                     "theta");
    check_increasing(spec.eps_grid, [](FailureProb e) { return e.value(); },
                     "eps");
    const bool cross = std::holds_alternative<CrossChecked>(spec.mode);
    if (spec.quantities.empty() && !cross) {
        throw std::invalid_argument("sweep requests no quantities");
    }
    for (std::size_t i = 0; i < spec.quantities.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.quantities.size(); ++j) {
            if (spec.quantities[i] == spec.quantities[j]) {
                throw std::invalid_argument("duplicate quantity '" +
                                            std::string(name(spec.quantities[i])) +
                                            "'");
            }
        }
    }
    if (cross) {
        const std::size_t dim = std::get<CrossChecked>(spec.mode).dim;
        if (dim < 2 || dim > sim::kMaxDim) {
            throw std::invalid_argument("cross-check dimension " +
                                        std::to_string(dim) + " out of range");
        }
    }
}

SweepTable run_sweep(const SweepSpec &spec, unsigned threads) {
    validate(spec);
    const std::size_t n_theta = spec.theta_grid.size();
    const std::size_t n_eps = spec.eps_grid.size();
    const bool cross = std::holds_alternative<CrossChecked>(spec.mode);

    std::vector<sim::SearchInstance> instances;
    if (cross) {
        const std::size_t dim = std::get<CrossChecked>(spec.mode).dim;
        instances.reserve(n_eps);
        for (FailureProb eps : spec.eps_grid) {
            instances.push_back(sim::crafted_instance(dim, eps, 0, 1));
        }
    }

    SweepTable table;
    table.quantities = spec.quantities;
    table.cross_checked = cross;
    table.records.resize(n_theta * n_eps);

    auto compute_row = [&](std::size_t i) {
        const PhaseAngle theta = spec.theta_grid[i];
        for (std::size_t j = 0; j < n_eps; ++j) {
            const FailureProb eps = spec.eps_grid[j];
            SweepRecord &rec = table.records[i * n_eps + j];
            rec.theta = theta.radians();
            rec.eps = eps.value();
            rec.values.clear();
            try {
                for (Quantity q : spec.quantities) {
                    rec.values.push_back(evaluate(q, theta, eps));
                }
            } catch (const DomainError &e) {
                throw DomainError(e.rule(),
                                  "at grid point theta=" +
                                      format_double(rec.theta) +
                                      ", eps=" + format_double(rec.eps) + ": " +
                                      e.detail());
            }
            if (cross) {
                const double simulated = sim::measured_failure(
                    sim::one_iteration(instances[j], theta), 1);
                rec.sim_deviation = simulated;
                rec.abs_discrepancy =
                    std::abs(analytics::deviation(theta, eps) - simulated);
            }
        }
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(
        std::min<std::size_t>(threads, n_theta));

    if (threads <= 1) {
        for (std::size_t i = 0; i < n_theta; ++i) {
            compute_row(i);
        }
        return table;
    }

    // Rows are claimed dynamically; on failure keep the error from the
    // lowest row so the reported grid point does not depend on scheduling.
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::size_t error_row = std::numeric_limits<std::size_t>::max();
    std::exception_ptr error;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n_theta) {
                return;
            }
            try {
                compute_row(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (i < error_row) {
                    error_row = i;
                    error = std::current_exception();
                }
            }
        }
    };

    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) {
        pool.emplace_back(worker);
    }
    pool.clear();

    if (error) {
        std::rethrow_exception(error);
    }
    return table;
}

std::vector<PhaseAngle> theta_linspace(std::size_t n) {
    std::vector<PhaseAngle> grid;
    if (n == 0) {
        return grid;
    }
    if (n == 1) {
        grid.emplace_back(0.0);
        return grid;
    }
    grid.reserve(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        grid.emplace_back(std::numbers::pi * static_cast<double>(i) /
                          static_cast<double>(n - 1));
    }
    grid.emplace_back(std::numbers::pi);
    return grid;
}

std::vector<FailureProb> eps_linspace(double lo, double hi, std::size_t n) {
    std::vector<FailureProb> grid;
    if (n == 0) {
        return grid;
    }
    if (n == 1) {
        grid.emplace_back(lo);
        return grid;
    }
    grid.reserve(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        grid.emplace_back(lo + (hi - lo) * static_cast<double>(i) /
                                   static_cast<double>(n - 1));
    }
    grid.emplace_back(hi);
    return grid;
}

std::vector<PhaseAngle> default_theta_grid() {
    return theta_linspace(kDefaultThetaPoints);
}

std::vector<FailureProb> default_eps_grid() {
    return eps_linspace(0.01, 0.99, kDefaultEpsPoints);
}

} // namespace phaseshift::harness
