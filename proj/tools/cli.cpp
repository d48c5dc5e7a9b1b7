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

#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "phaseshift/analytics.hpp"
#include "phaseshift/errors.hpp"
#include "phaseshift/harness.hpp"
#include "phaseshift/simulator.hpp"
#include "phaseshift/verify.hpp"

namespace phaseshift::cli {

namespace {

namespace an = analytics;
using json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.substr(s.size() - suffix.size()) == suffix;
}

double parse_number(std::string_view text, std::string_view whole) {
    text = trim(text);
    double v = 0.0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    if (!text.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
        throw UsageError("malformed number '" + std::string(whole) + "'");
    }
    return v;
}

// Accepts "pi", "2pi", "2*pi", "pi/3", "5pi/6", "5*pi/6".
std::optional<double> parse_pi_multiple(std::string_view text,
                                        std::string_view whole) {
    const auto at = text.find("pi");
    if (at == std::string_view::npos) {
        return std::nullopt;
    }
    std::string_view coeff = trim(text.substr(0, at));
    std::string_view rest = trim(text.substr(at + 2));
    if (!coeff.empty() && coeff.back() == '*') {
        coeff.remove_suffix(1);
    }
    double k = coeff.empty() ? 1.0 : parse_number(coeff, whole);
    double q = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw UsageError("malformed angle '" + std::string(whole) + "'");
        }
        q = parse_number(rest.substr(1), whole);
        if (q == 0.0) {
            throw UsageError("zero denominator in '" + std::string(whole) + "'");
        }
    }
    if (k == 1.0 && q == 1.0) {
        return std::numbers::pi;
    }
    return k * std::numbers::pi / q;
}

struct Options {
    std::string format = "text";
    std::string out_path;
    int digits = 0;
    std::string unit = "rad";
};

std::string show(double x, const Options &opt) {
    if (opt.digits <= 0) {
        return harness::format_double(x);
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", opt.digits, x);
    return buf;
}

double angle_out(double radians, const Options &opt) {
    return opt.unit == "deg" ? radians * 180.0 / std::numbers::pi : radians;
}

using Columns = std::vector<std::pair<std::string, double>>;

// Scalar result: text prints only the primary value, csv prints a header and
// one row, json prints one object.
void emit_scalar(std::ostream &out, const Options &opt, const Columns &cols,
                 std::size_t primary) {
    if (opt.format == "json") {
        json obj = json::object();
        for (const auto &[k, v] : cols) {
            obj[k] = v;
        }
        out << obj.dump(2) << '\n';
    } else if (opt.format == "csv") {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            out << (i ? "," : "") << cols[i].first;
        }
        out << '\n';
        for (std::size_t i = 0; i < cols.size(); ++i) {
            out << (i ? "," : "") << show(cols[i].second, opt);
        }
        out << '\n';
    } else {
        out << show(cols[primary].second, opt) << '\n';
    }
}

unsigned thread_count(int flag) {
    if (flag > 0) {
        return static_cast<unsigned>(flag);
    }
    if (const char *env = std::getenv("PHASESHIFT_THREADS")) {
        try {
            const int n = std::stoi(env);
            return n > 0 ? static_cast<unsigned>(n) : 0u;
        } catch (const std::exception &) {
            throw UsageError(std::string("PHASESHIFT_THREADS is not an integer: ") +
                             env);
        }
    }
    return 0;
}

void emit_table(std::ostream &out, const Options &opt,
                const harness::SweepTable &table, const std::string &header) {
    if (opt.format == "json") {
        harness::write_json(out, table);
        return;
    }
    if (opt.format == "text" && !header.empty()) {
        out << "# " << header << '\n';
    }
    harness::write_csv(out, table);
}

// -- sweep spec files --------------------------------------------------------

std::vector<double> grid_from_json(const json &node, const char *what,
                                   const std::function<double(const json &)> &value) {
    std::vector<double> out;
    if (node.is_array()) {
        for (const auto &v : node) {
            out.push_back(value(v));
        }
    } else if (node.is_object()) {
        const double start = value(node.at("start"));
        const double stop = value(node.at("stop"));
        const auto count = node.at("count").get<std::size_t>();
        if (count == 0) {
            throw UsageError(std::string(what) + " grid count must be positive");
        }
        for (std::size_t i = 0; i + 1 < count; ++i) {
            out.push_back(start + (stop - start) * static_cast<double>(i) /
                                      static_cast<double>(count - 1));
        }
        out.push_back(count == 1 ? start : stop);
    } else {
        throw UsageError(std::string(what) +
                         " grid must be an array or {start, stop, count}");
    }
    return out;
}

double json_angle(const json &v) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        return parse_angle(v.get<std::string>());
    }
    throw UsageError("angle must be a number or string");
}

double json_real(const json &v) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        return parse_real(v.get<std::string>());
    }
    throw UsageError("probability must be a number or string");
}

harness::SweepSpec load_spec(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open sweep spec '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception &e) {
        throw UsageError("invalid sweep spec JSON: " + std::string(e.what()));
    }
    harness::SweepSpec spec;
    try {
        spec.theta_grid.clear();
        if (doc.contains("theta")) {
            for (double t : grid_from_json(doc["theta"], "theta", json_angle)) {
                spec.theta_grid.emplace_back(t);
            }
        } else {
            spec.theta_grid = harness::default_theta_grid();
        }
        if (doc.contains("eps")) {
            for (double e : grid_from_json(doc["eps"], "eps", json_real)) {
                spec.eps_grid.emplace_back(e);
            }
        } else {
            spec.eps_grid = harness::default_eps_grid();
        }
        const std::string mode = doc.value("mode", std::string("analytic"));
        if (mode == "cross_checked") {
            spec.mode = harness::CrossChecked{doc.value("dim", std::size_t{8})};
        } else if (mode != "analytic") {
            throw UsageError("mode must be 'analytic' or 'cross_checked'");
        }
        if (doc.contains("quantities")) {
            for (const auto &q : doc["quantities"]) {
                spec.quantities.push_back(
                    harness::parse_quantity(q.get<std::string>()));
            }
        } else {
            spec.quantities = {harness::Quantity::Deviation};
        }
    } catch (const json::exception &e) {
        throw UsageError("invalid sweep spec: " + std::string(e.what()));
    }
    return spec;
}

std::vector<harness::Quantity> parse_quantity_list(const std::string &text) {
    std::vector<harness::Quantity> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(harness::parse_quantity(trim(item)));
    }
    return out;
}

} // namespace

double parse_angle(std::string_view text) {
    const std::string_view whole = text;
    text = trim(text);
    if (ends_with(text, "deg")) {
        return parse_real(text.substr(0, text.size() - 3)) * std::numbers::pi /
               180.0;
    }
    if (ends_with(text, "rad")) {
        text = trim(text.substr(0, text.size() - 3));
    }
    if (auto v = parse_pi_multiple(text, whole)) {
        return *v;
    }
    return parse_real(text);
}

double parse_real(std::string_view text) {
    const std::string_view whole = text;
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return parse_number(text, whole);
    }
    const double num = parse_number(text.substr(0, slash), whole);
    const double den = parse_number(text.substr(slash + 1), whole);
    if (den == 0.0) {
        throw UsageError("zero denominator in '" + std::string(whole) + "'");
    }
    return num / den;
}

std::pair<double, double> parse_range(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw UsageError("range must be 'beta:alpha', got '" + std::string(text) +
                         "'");
    }
    return {parse_real(text.substr(0, colon)), parse_real(text.substr(colon + 1))};
}

int dispatch(const std::vector<std::string> &args, std::ostream &out_default,
             std::ostream &err) {
    CLI::App app{"Equal-phase-shift fixed-point search: closed forms, dense "
                 "simulation and verification",
                 "phaseshift"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("-o,--out", opt.out_path, "Write data to this file");
    app.add_option("--digits", opt.digits,
                   "Significant digits (default: shortest round-trip)")
        ->check(CLI::Range(1, 17));
    app.add_option("--unit", opt.unit, "Unit for printed angles")
        ->check(CLI::IsMember({"rad", "deg"}));

    std::string theta_s, eps_s, range_s, spec_path, id_s, quantities_s;
    std::size_t depth = 0, dim = 8, hadamard = 0, theta_count = 0,
                eps_count = 0;
    int threads = 0;
    double eps_min = 0.01, eps_max = 0.99;
    std::size_t recurse_sim_dim = 0;
    std::optional<std::size_t> target_opt;

    std::function<int(std::ostream &)> action;

    auto need_theta = [&](CLI::App *sub) {
        sub->add_option("--theta", theta_s, "Phase shift (rad, 60deg, pi/3)")
            ->required();
    };
    auto need_eps = [&](CLI::App *sub) {
        sub->add_option("--eps", eps_s, "Failure probability eps = 1 - |U_ts|^2")
            ->required();
    };
    auto need_range = [&](CLI::App *sub) {
        sub->add_option("--range", range_s, "Uniform eps window beta:alpha")
            ->required();
    };
    auto theta = [&] { return PhaseAngle(parse_angle(theta_s)); };
    auto eps = [&] { return FailureProb(parse_real(eps_s)); };
    auto range = [&] {
        const auto [b, a] = parse_range(range_s);
        return EpsilonRange(b, a);
    };

    auto *deviation = app.add_subcommand("deviation", "D(theta) for one iteration");
    need_theta(deviation);
    need_eps(deviation);
    deviation->callback([&] {
        action = [&](std::ostream &out) {
            const auto t = theta();
            const auto e = eps();
            emit_scalar(out, opt,
                        {{"theta_rad", t.radians()},
                         {"eps", e.value()},
                         {"deviation", an::deviation(t, e)}},
                        2);
            return kOk;
        };
    });

    auto *gap = app.add_subcommand("gap", "D(theta) - eps^3");
    need_theta(gap);
    need_eps(gap);
    gap->callback([&] {
        action = [&](std::ostream &out) {
            const auto t = theta();
            const auto e = eps();
            emit_scalar(out, opt,
                        {{"theta_rad", t.radians()},
                         {"eps", e.value()},
                         {"gap", an::deviation_gap(t, e)}},
                        2);
            return kOk;
        };
    });

    auto *threshold =
        app.add_subcommand("threshold", "eps threshold 1 - 2/(3 - 2cos theta)");
    need_theta(threshold);
    threshold->callback([&] {
        action = [&](std::ostream &out) {
            const auto t = theta();
            emit_scalar(out, opt,
                        {{"theta_rad", t.radians()},
                         {"threshold", an::epsilon_threshold(t)}},
                        1);
            return kOk;
        };
    });

    auto *classify = app.add_subcommand("classify", "Sign of D(theta) - eps^3");
    need_theta(classify);
    need_eps(classify);
    classify->callback([&] {
        action = [&](std::ostream &out) {
            const auto t = theta();
            const auto e = eps();
            const auto c = std::string(to_string(an::classify(t, e)));
            if (opt.format == "json") {
                json obj = {{"theta_rad", t.radians()},
                            {"eps", e.value()},
                            {"classification", c}};
                out << obj.dump(2) << '\n';
            } else if (opt.format == "csv") {
                out << "theta_rad,eps,classification\n"
                    << show(t.radians(), opt) << ',' << show(e.value(), opt)
                    << ',' << c << '\n';
            } else {
                out << c << '\n';
            }
            return kOk;
        };
    });

    auto *zero = app.add_subcommand("zero-point", "Zero deviation point for eps");
    need_eps(zero);
    zero->callback([&] {
        action = [&](std::ostream &out) {
            const auto e = eps();
            const auto t = an::zero_deviation_point(e);
            emit_scalar(out, opt,
                        {{"eps", e.value()},
                         {opt.unit == "deg" ? "theta_deg" : "theta_rad",
                          angle_out(t.radians(), opt)}},
                        1);
            return kOk;
        };
    });

    auto *avg = app.add_subcommand("avg-zero-point",
                                   "Average zero deviation point over beta:alpha");
    need_range(avg);
    avg->callback([&] {
        action = [&](std::ostream &out) {
            const auto r = range();
            const auto t = an::average_zero_point(r);
            emit_scalar(out, opt,
                        {{"beta", r.beta()},
                         {"alpha", r.alpha()},
                         {opt.unit == "deg" ? "theta_deg" : "theta_rad",
                          angle_out(t.radians(), opt)}},
                        2);
            return kOk;
        };
    });

    auto *kap = app.add_subcommand(
        "kappa", "eps above which the average zero point beats eps^3");
    need_range(kap);
    kap->callback([&] {
        action = [&](std::ostream &out) {
            const auto r = range();
            emit_scalar(out, opt,
                        {{"beta", r.beta()},
                         {"alpha", r.alpha()},
                         {"kappa", an::kappa(r)}},
                        2);
            return kOk;
        };
    });

    auto *rho = app.add_subcommand("rho", "(5 - 4cos theta)/3");
    need_theta(rho);
    rho->callback([&] {
        action = [&](std::ostream &out) {
            const auto t = theta();
            emit_scalar(out, opt, {{"theta_rad", t.radians()}, {"rho", an::rho(t)}},
                        1);
            return kOk;
        };
    });

    auto *ratio = app.add_subcommand(
        "ratio", "Success probability ratio against theta = pi/3");
    need_theta(ratio);
    need_eps(ratio);
    ratio->callback([&] {
        action = [&](std::ostream &out) {
            const auto t = theta();
            const auto e = eps();
            emit_scalar(out, opt,
                        {{"theta_rad", t.radians()},
                         {"eps", e.value()},
                         {"ratio", an::success_ratio(t, e)}},
                        2);
            return kOk;
        };
    });

    auto *recurse = app.add_subcommand(
        "recurse", "Failure probability under the fixed-point recursion");
    need_theta(recurse);
    need_eps(recurse);
    recurse->add_option("--depth", depth, "Recursion levels")->required();
    recurse->add_option("--simulate", recurse_sim_dim,
                        "Cross-check on a crafted instance of this dimension");
    recurse->callback([&] {
        action = [&](std::ostream &out) {
            const auto t = theta();
            const auto e = eps();
            const auto trace = an::recurrence_trace(t, e, depth);
            std::vector<double> simulated;
            if (recurse_sim_dim > 0) {
                simulated = sim::recursion_failures(
                    sim::crafted_instance(recurse_sim_dim, e, 0, 1), t, depth);
            }
            const bool with_sim = !simulated.empty();
            if (opt.format == "json") {
                json arr = json::array();
                for (std::size_t m = 0; m < trace.epsilons.size(); ++m) {
                    json row = {{"m", m},
                                {"eps", trace.epsilons[m]},
                                {"flushed", static_cast<bool>(trace.flushed[m])}};
                    if (with_sim) {
                        row["sim_eps"] = simulated[m];
                        row["abs_discrepancy"] =
                            std::abs(simulated[m] - trace.epsilons[m]);
                    }
                    arr.push_back(std::move(row));
                }
                out << arr.dump(2) << '\n';
            } else {
                const char sep = opt.format == "csv" ? ',' : ' ';
                out << (opt.format == "csv" ? "" : "# ") << "m" << sep << "eps"
                    << sep << "flushed";
                if (with_sim) {
                    out << sep << "sim_eps" << sep << "abs_discrepancy";
                }
                out << '\n';
                for (std::size_t m = 0; m < trace.epsilons.size(); ++m) {
                    out << m << sep << show(trace.epsilons[m], opt) << sep
                        << (trace.flushed[m] ? 1 : 0);
                    if (with_sim) {
                        out << sep << show(simulated[m], opt) << sep
                            << show(std::abs(simulated[m] - trace.epsilons[m]), opt);
                    }
                    out << '\n';
                }
            }
            return kOk;
        };
    });

    auto *simulate = app.add_subcommand(
        "simulate", "Dense simulation of one iteration against the closed form");
    need_theta(simulate);
    simulate->add_option("--dim", dim, "Dimension of the crafted instance");
    simulate->add_option("--eps", eps_s, "Failure probability of the crafted instance");
    simulate->add_option("--hadamard", hadamard,
                         "Use the n-qubit Hadamard instance instead");
    simulate->add_option("--target", target_opt,
                         "Target index for --hadamard (default N-1)");
    simulate->callback([&] {
        action = [&](std::ostream &out) {
            const auto t = theta();
            std::optional<sim::SearchInstance> inst;
            if (hadamard > 0) {
                if (hadamard > sim::kMaxQubits) {
                    throw SizeError("--hadamard must be <= " +
                                    std::to_string(sim::kMaxQubits));
                }
                const std::size_t n = std::size_t{1} << hadamard;
                inst.emplace(sim::hadamard_instance(hadamard, target_opt.value_or(n - 1)));
            } else {
                if (eps_s.empty()) {
                    throw UsageError("simulate needs --eps or --hadamard");
                }
                inst.emplace(sim::crafted_instance(dim, eps(), 0, 1));
            }
            const double e = inst->epsilon();
            const double simulated = sim::measured_failure(
                sim::one_iteration(*inst, t), inst->t_index());
            const double analytic = an::deviation(t, FailureProb(e));
            const Columns cols{{"theta_rad", t.radians()},
                               {"dim", static_cast<double>(inst->dim())},
                               {"eps", e},
                               {"deviation", analytic},
                               {"sim_deviation", simulated},
                               {"abs_discrepancy", std::abs(analytic - simulated)}};
            if (opt.format == "text") {
                for (const auto &[k, v] : cols) {
                    out << k << ": " << show(v, opt) << '\n';
                }
            } else {
                emit_scalar(out, opt, cols, 4);
            }
            return kOk;
        };
    });

    auto *sweep = app.add_subcommand("sweep", "Parameter sweep over (theta, eps)");
    sweep->add_option("--spec", spec_path, "JSON sweep specification");
    sweep->add_option("--theta-count", theta_count, "Override: theta points over [0, pi]");
    sweep->add_option("--eps-count", eps_count, "Override: eps points");
    sweep->add_option("--eps-min", eps_min, "Override: smallest eps");
    sweep->add_option("--eps-max", eps_max, "Override: largest eps");
    sweep->add_option("--quantities", quantities_s,
                      "Comma list of deviation,gap,threshold,success,ratio,rho");
    sweep->add_option("--cross-check", dim, "Cross-check against simulation at this dimension");
    sweep->add_option("--threads", threads, "Worker threads (default PHASESHIFT_THREADS)");
    sweep->callback([&] {
        action = [&](std::ostream &out) {
            harness::SweepSpec spec;
            if (!spec_path.empty()) {
                spec = load_spec(spec_path);
            } else {
                spec.theta_grid = harness::default_theta_grid();
                spec.eps_grid = harness::default_eps_grid();
                spec.quantities = {harness::Quantity::Deviation};
            }
            if (theta_count > 0) {
                spec.theta_grid = harness::theta_linspace(theta_count);
            }
            if (eps_count > 0 || sweep->count("--eps-min") || sweep->count("--eps-max")) {
                spec.eps_grid = harness::eps_linspace(
                    eps_min, eps_max,
                    eps_count > 0 ? eps_count : harness::kDefaultEpsPoints);
            }
            if (!quantities_s.empty()) {
                spec.quantities = parse_quantity_list(quantities_s);
            }
            if (sweep->count("--cross-check")) {
                spec.mode = harness::CrossChecked{dim};
            }
            const auto table = harness::run_sweep(spec, thread_count(threads));
            emit_table(out, opt, table, "");
            return kOk;
        };
    });

    auto *tables = app.add_subcommand("tables", "Reproduce Tables 1-4");
    tables->callback([&] {
        action = [&](std::ostream &out) {
            const auto report = harness::reproduce_tables();
            if (opt.format == "json") {
                harness::write_json(out, report);
            } else {
                harness::write_text(out, report);
            }
            return report.all_pass() ? kOk : kVerifyFailed;
        };
    });

    auto *figures = app.add_subcommand("figures", "Curve data behind the figures");
    figures
        ->add_option("--id", id_s, "dev_vs_theta | gap_surface | zero_locus | rho_curve")
        ->required();
    figures->add_option("--threads", threads, "Worker threads");
    figures->callback([&] {
        action = [&](std::ostream &out) {
            const auto data = harness::figure_data(harness::parse_figure(id_s),
                                                   thread_count(threads));
            emit_table(out, opt, data.table, data.header);
            return kOk;
        };
    });

    auto *verify_cmd = app.add_subcommand(
        "verify", "Run every invariant and oracle-equivalence check");
    verify_cmd->callback([&] {
        action = [&](std::ostream &out) {
            const bool text = opt.format != "json";
            const auto report = verify::run_all([&](const verify::CheckResult &c) {
                if (text) {
                    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.module << ": "
                        << c.name << " -- " << c.detail << '\n';
                }
            });
            const std::size_t failed = static_cast<std::size_t>(std::count_if(
                report.checks.begin(), report.checks.end(),
                [](const verify::CheckResult &c) { return !c.pass; }));
            if (text) {
                if (report.all_pass()) {
                    out << "all checks passed (" << report.checks.size()
                        << " checks, " << std::fixed << std::setprecision(2)
                        << report.seconds << std::defaultfloat << " s)\n";
                } else {
                    out << failed << " of " << report.checks.size()
                        << " checks FAILED\n";
                }
            } else {
                json arr = json::array();
                for (const auto &c : report.checks) {
                    arr.push_back({{"module", c.module},
                                   {"name", c.name},
                                   {"pass", c.pass},
                                   {"detail", c.detail},
                                   {"seconds", c.seconds}});
                }
                json doc = {{"checks", std::move(arr)},
                            {"all_pass", report.all_pass()},
                            {"seconds", report.seconds}};
                out << doc.dump(2) << '\n';
            }
            return report.all_pass() ? kOk : kVerifyFailed;
        };
    });

    std::vector<const char *> argv{"phaseshift"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success &e) {
        return app.exit(e, out_default, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, err, err);
        return kUsage;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (opt.out_path.empty()) {
            return action(out_default);
        }
        std::ostringstream buffer;
        const int code = action(buffer);
        std::ofstream file(opt.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << opt.out_path << "'\n";
            return kUsage;
        }
        file << buffer.str();
        return code;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kUsage;
    } catch (const DomainError &e) {
        err << "domain error: " << e.detail() << "; violated rule: " << e.rule()
            << '\n';
        return kDomain;
    } catch (const SizeError &e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::out_of_range &e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::invalid_argument &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace phaseshift::cli
