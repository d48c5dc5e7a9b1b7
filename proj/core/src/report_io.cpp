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

#include <charconv>
#include <iomanip>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "phaseshift/harness.hpp"

namespace phaseshift::harness {

namespace {

std::vector<std::string> column_names(const SweepTable &table) {
    std::vector<std::string> cols{"theta_rad", "eps"};
    for (Quantity q : table.quantities) {
        cols.emplace_back(name(q));
    }
    if (table.cross_checked) {
        cols.emplace_back("sim_deviation");
        cols.emplace_back("abs_discrepancy");
    }
    return cols;
}

std::vector<double> row_values(const SweepTable &table, const SweepRecord &r) {
    std::vector<double> vals{r.theta, r.eps};
    vals.insert(vals.end(), r.values.begin(), r.values.end());
    if (table.cross_checked) {
        vals.push_back(r.sim_deviation.value_or(0.0));
        vals.push_back(r.abs_discrepancy.value_or(0.0));
    }
    return vals;
}

} // namespace

std::string format_double(double x) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) {
        throw std::runtime_error("failed to format double");
    }
    return std::string(buf, end);
}

void write_csv(std::ostream &out, const SweepTable &table) {
    const auto cols = column_names(table);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        out << (i ? "," : "") << cols[i];
    }
    out << '\n';
    for (const SweepRecord &r : table.records) {
        const auto vals = row_values(table, r);
        for (std::size_t i = 0; i < vals.size(); ++i) {
            out << (i ? "," : "") << format_double(vals[i]);
        }
        out << '\n';
    }
}

void write_json(std::ostream &out, const SweepTable &table) {
    const auto cols = column_names(table);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SweepRecord &r : table.records) {
        const auto vals = row_values(table, r);
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < cols.size(); ++i) {
            obj[cols[i]] = vals[i];
        }
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

bool TablesReport::all_pass() const {
    for (const TableReport &t : tables) {
        if (!t.pass) {
            return false;
        }
    }
    return !tables.empty();
}

void write_text(std::ostream &out, const TablesReport &report) {
    for (const TableReport &t : report.tables) {
        out << "Table " << t.number << ". " << t.title << "  ["
            << (t.pass ? "PASS" : "FAIL") << "]\n";
        for (const TableRow &r : t.rows) {
            out << "  " << std::left << std::setw(42) << r.theta << std::setw(30)
                << r.condition << std::setw(36) << r.claim
                << " computed=" << format_double(r.computed)
                << " expected=" << format_double(r.expected)
                << " err=" << format_double(r.error) << "  "
                << (r.pass ? "ok" : "MISMATCH") << '\n';
        }
        out << '\n';
    }
    out << (report.all_pass() ? "all tables reproduced\n"
                              : "table reproduction FAILED\n");
}

void write_json(std::ostream &out, const TablesReport &report) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    nlohmann::ordered_json tables = nlohmann::ordered_json::array();
    for (const TableReport &t : report.tables) {
        nlohmann::ordered_json jt = nlohmann::ordered_json::object();
        jt["table"] = t.number;
        jt["title"] = t.title;
        jt["pass"] = t.pass;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const TableRow &r : t.rows) {
            rows.push_back({{"theta", r.theta},
                            {"condition", r.condition},
                            {"claim", r.claim},
                            {"computed", r.computed},
                            {"expected", r.expected},
                            {"error", r.error},
                            {"pass", r.pass}});
        }
        jt["rows"] = std::move(rows);
        tables.push_back(std::move(jt));
    }
    doc["tables"] = std::move(tables);
    doc["all_pass"] = report.all_pass();
    out << doc.dump(2) << '\n';
}

} // namespace phaseshift::harness
