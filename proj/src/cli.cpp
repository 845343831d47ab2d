// SPDX-License-Identifier: Apache-2.0
//
// ria-sim: retrospective interference alignment simulator for the K-user
// MISO interference channel with imperfect delayed CSIT
// Copyright (C) 2026 The ria-sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "ria/cli.hpp"

#include "ria/bounds.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

namespace ria {

OutputTable cmd_bounds(int kmin, int kmax, double epsilon) {
    if (kmin < 1 || kmax < kmin) throw std::invalid_argument("need 1 <= kmin <= kmax");
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in [0, 1]");

    OutputTable table({"K", "thm1_inner", "thm1_outer", "tdma", "ghasemi_inner", "ghasemi_outer", "abdoli_inner"});
    const auto ref = [](std::string_view name, int k) {
        const std::optional<double> v = reference_value(name, k);
        return v ? format_number(*v) : std::string();
    };
    for (int k = kmin; k <= kmax; ++k) {
        table.add_row({std::to_string(k), format_number(inner_bound(k, epsilon)), format_number(outer_bound(k)),
                       format_number(tdma_dof(k)), ref("ghasemi_inner", k), ref("ghasemi_outer", k),
                       ref("abdoli_siso_inner", k)});
    }
    return table;
}

namespace {

std::string outage_column(double percentile) { return "outage" + format_number(percentile); }

double parse_number(std::string_view text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    while (first != last && *first == ' ') ++first;
    while (last != first && *(last - 1) == ' ') --last;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last || !std::isfinite(value))
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

} // namespace

OutputTable sweep_table(const SweepResult& result, double percentile) {
    OutputTable table({"scheme", "K", "epsilon", "snr_db", "trials", "mean_rate", outage_column(percentile), "std_err"});
    for (const SweepRecord& r : result.records) {
        table.add_row({std::string(scheme_name(r.scheme)), std::to_string(r.users), format_number(r.epsilon),
                       format_number(r.snr_db), std::to_string(r.trials), format_number(r.mean_rate),
                       format_number(r.outage_rate), format_number(r.std_error)});
    }
    return table;
}

OutputTable slope_table(const SweepResult& result) {
    OutputTable table({"scheme", "K", "epsilon", "snr_lo_db", "snr_hi_db", "rate_lo", "rate_hi", "dof_slope"});
    for (const SlopeRecord& r : result.slopes) {
        table.add_row({std::string(scheme_name(r.scheme)), std::to_string(r.users), format_number(r.epsilon),
                       format_number(r.snr_lo_db), format_number(r.snr_hi_db), format_number(r.rate_lo),
                       format_number(r.rate_hi), format_number(r.slope)});
    }
    return table;
}

OutputTable outage_table(const SweepResult& result, double percentile) {
    OutputTable table({"scheme", "K", "epsilon", "snr_db", outage_column(percentile)});
    for (const SweepRecord& r : result.records) {
        table.add_row({std::string(scheme_name(r.scheme)), std::to_string(r.users), format_number(r.epsilon),
                       format_number(r.snr_db), format_number(r.outage_rate)});
    }
    return table;
}

std::vector<double> parse_grid(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty value list");
    std::vector<double> values;
    if (text.find(':') != std::string_view::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw std::invalid_argument("range must be start:stop:step");
        const double start = parse_number(parts[0]);
        const double stop = parse_number(parts[1]);
        const double step = parse_number(parts[2]);
        if (!(step > 0.0) || stop < start) throw std::invalid_argument("range needs step > 0 and start <= stop");
        const double tol = 1e-9 * step;
        for (long k = 0;; ++k) {
            const double v = start + static_cast<double>(k) * step;
            if (v > stop + tol) break;
            values.push_back(v);
        }
        return values;
    }
    for (std::string_view part : split(text, ',')) values.push_back(parse_number(part));
    return values;
}

namespace {

struct SweepFlags {
    int users = 3;
    int antennas = 0;
    std::string snr;
    std::string epsilon;
    int trials = 2000;
    std::uint64_t seed = 1;
    std::string schemes = "ria,tdma";
    bool dof = false;
    std::string dof_anchors = "40,60";
    std::string output;
    double percentile = 10.0;
    std::string tdma_power = "total";
    bool exact_csit = false;
};

void add_sweep_options(CLI::App& cmd, SweepFlags& f, bool with_dof) {
    cmd.add_option("-k,--users", f.users, "Number of transmitter/receiver pairs K (>= 2)")->capture_default_str();
    cmd.add_option("-m,--antennas", f.antennas, "Transmit antennas per user M (default: K)");
    cmd.add_option("--snr-db", f.snr, "SNR grid in dB: start:stop:step (inclusive) or comma list")
        ->capture_default_str();
    cmd.add_option("--epsilon", f.epsilon, "Feedback-quality grid in [0,1]: comma list or start:stop:step")
        ->capture_default_str();
    cmd.add_option("--trials", f.trials, "Channel realizations per grid cell")->capture_default_str();
    cmd.add_option("--seed", f.seed, "Master seed (64-bit)")->capture_default_str();
    cmd.add_option("--schemes", f.schemes, "Comma list of schemes: ria, tdma")->capture_default_str();
    cmd.add_option("-o,--output", f.output, "Write CSV here instead of standard output");
    cmd.add_option("--percentile", f.percentile, "Outage percentile in (0,100)")->capture_default_str();
    cmd.add_option("--tdma-power", f.tdma_power, "Baseline power convention: total (P/M per antenna) or per-antenna")
        ->capture_default_str();
    cmd.add_flag("--exact-csit", f.exact_csit, "Use error-free delayed CSIT regardless of epsilon");
    if (with_dof) {
        cmd.add_flag("--dof", f.dof, "Append a DoF slope table between the two anchor SNRs");
        cmd.add_option("--dof-anchors", f.dof_anchors, "Two SNRs in dB (low,high) for the slope table")
            ->capture_default_str();
    }
}

SimConfig to_config(const SweepFlags& f) {
    SimConfig c;
    c.users = f.users;
    c.antennas = f.antennas;
    c.snr_db = parse_grid(f.snr);
    c.epsilon = parse_grid(f.epsilon);
    c.trials = f.trials;
    c.seed = f.seed;
    c.schemes.clear();
    for (std::string_view s : split(f.schemes, ',')) c.schemes.push_back(parse_scheme(s));
    c.dof = f.dof;
    if (f.dof) {
        const auto anchors = parse_grid(f.dof_anchors);
        if (anchors.size() != 2) throw std::invalid_argument("--dof-anchors needs exactly two values");
        c.dof_anchors = {anchors[0], anchors[1]};
    }
    c.percentile = f.percentile;
    if (f.tdma_power == "total")
        c.tdma_power = TdmaPower::Total;
    else if (f.tdma_power == "per-antenna")
        c.tdma_power = TdmaPower::PerAntenna;
    else
        throw std::invalid_argument("--tdma-power must be total or per-antenna");
    c.exact_csit = f.exact_csit;
    if (const char* env = std::getenv("RIA_SIM_THREADS"); env && *env) {
        const double n = parse_number(env);
        if (n < 1 || n != std::floor(n)) throw std::invalid_argument("RIA_SIM_THREADS must be a positive integer");
        c.threads = static_cast<int>(n);
    }
    c.validate();
    return c;
}

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::vector<OutputTable>& tables, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        write_csv(out, tables);
        out.flush();
        if (!out) throw IoError("failed writing to standard output");
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    write_csv(file, tables);
    file.close();
    if (!file) throw IoError("failed writing '" + path + "'");
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Retrospective interference alignment simulator for the K-user MISO interference channel "
                 "with imperfect delayed CSIT"};
    app.require_subcommand(1);

    int kmin = 2, kmax = 10;
    double bounds_eps = 1.0;
    std::string bounds_output;
    auto* bounds = app.add_subcommand("bounds", "DoF-per-user bound table over a range of K");
    bounds->add_option("--kmin", kmin, "Smallest K (>= 1)")->capture_default_str();
    bounds->add_option("--kmax", kmax, "Largest K")->capture_default_str();
    bounds->add_option("--epsilon", bounds_eps, "Feedback quality for the inner bound")->capture_default_str();
    bounds->add_option("-o,--output", bounds_output, "Write CSV here instead of standard output");

    SweepFlags sim_flags;
    sim_flags.snr = "5:40:5";
    sim_flags.epsilon = "0.01,0.2,0.5,0.7,0.9,1";
    auto* simulate = app.add_subcommand("simulate", "Average and outage rate per user over an (epsilon, SNR) grid");
    add_sweep_options(*simulate, sim_flags, true);

    SweepFlags out_flags;
    out_flags.snr = "10,20,30,40";
    out_flags.epsilon = "0.01,0.1,0.2,0.4,0.5,0.7,0.9,1";
    auto* outage = app.add_subcommand("outage", "Outage rate per user versus feedback quality");
    add_sweep_options(*outage, out_flags, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*bounds) {
            emit({cmd_bounds(kmin, kmax, bounds_eps)}, bounds_output, out);
        } else if (*simulate) {
            const SimConfig config = to_config(sim_flags);
            const SweepResult result = run_sweep(config);
            std::vector<OutputTable> tables{sweep_table(result, config.percentile)};
            if (config.dof) tables.push_back(slope_table(result));
            emit(tables, sim_flags.output, out);
        } else if (*outage) {
            const SimConfig config = to_config(out_flags);
            emit({outage_table(run_sweep(config), config.percentile)}, out_flags.output, out);
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace ria
