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

// Acceptance suite. Each criterion prints one PASS/FAIL line with its
// measured values; the process exits non-zero if any hard criterion fails.

#include "ria/bounds.hpp"
#include "ria/cli.hpp"
#include "ria/metrics.hpp"
#include "ria/protocol.hpp"
#include "ria/sim.hpp"

#include "test_support.hpp"

#include <Eigen/SVD>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace ria;

namespace {

constexpr std::uint64_t kSeed = 2014;

struct Outcome {
    bool pass;
    std::string detail;
    bool soft_fail = false; // calibration target missed, not a hard gate
};

struct Criterion {
    int id;
    const char* name;
    double time_limit_s;
    std::function<Outcome()> body;
};

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

// ------------------------------------------------------------------ 1

Outcome bounds_golden() {
    struct Row {
        int k;
        double inner, outer, tdma;
    };
    // plotted coordinates of the perfect-feedback bound figure
    const std::vector<Row> golden{
        {2, 0.666666666666667, 0.666666666666667, 0.5},
        {3, 0.5, 0.545454545454546, 0.333333333333333},
        {4, 0.4, 0.48, 0.25},
        {5, 0.333333333333333, 0.437956204379562, 0.2},
        {6, 0.285714285714286, 0.408163265306123, 0.166666666666667},
        {7, 0.25, 0.385674931129477, 0.142857142857143},
        {8, 0.222222222222222, 0.367936925098555, 0.125},
        {9, 0.2, 0.353485762379015, 0.111111111111111},
        {10, 0.181818181818182, 0.341417152147406, 0.1},
    };
    double worst = 0.0;
    for (const Row& r : golden) {
        worst = std::max(worst, std::abs(inner_bound(r.k, 1.0) - r.inner));
        worst = std::max(worst, std::abs(outer_bound(r.k) - r.outer));
        worst = std::max(worst, std::abs(tdma_dof(r.k) - r.tdma));
    }
    return {worst <= 1e-9, fmt("max abs error %.3g (tol 1e-9)", worst)};
}

// ------------------------------------------------------------------ 2

Outcome alignment_exactness() {
    Rng pick(kSeed);
    std::uniform_int_distribution<int> users(2, 5);
    std::uniform_real_distribution<double> snr_db(0.0, 60.0);
    double worst = 0.0;
    for (int n = 0; n < 200; ++n) {
        const int k = users(pick);
        const double p = db_to_linear(snr_db(pick));
        const auto r = ria::testing::make_realization(k, 1.0, p, kSeed + static_cast<std::uint64_t>(n), true);
        for (const UserSystem& rx : r.system.receivers)
            worst = std::max(worst, (rx.filter * rx.interference).norm() / std::sqrt(p));
    }
    return {worst <= 1e-9, fmt("max ||U Xi||_F / sqrt(P) = %.3g over 200 realizations (tol 1e-9)", worst)};
}

// ------------------------------------------------------------------ 3

Outcome residual_exponent() {
    const std::vector<double> grid_db{30, 40, 50, 60};
    bool ok = true;
    std::string detail;
    for (double eps : {0.0, 0.5, 1.0}) {
        std::vector<double> x, y;
        for (double d : grid_db) {
            const double p = db_to_linear(d);
            x.push_back(std::log2(p));
            y.push_back(std::log2(ria::testing::mean_residual_power(3, eps, p, 2000, kSeed)));
        }
        const double slope = ria::testing::regression_slope(x, y);
        ok = ok && std::abs(slope - (1.0 - eps)) <= 0.05;
        detail += fmt("eps=%g slope=%.4f (want %.2f+-0.05) ", eps, slope, 1.0 - eps);
    }
    return {ok, detail};
}

// ------------------------------------------------------------------ 4

Outcome dof_slope_criterion() {
    SimConfig c;
    c.users = 3;
    c.snr_db = {60, 80};
    c.epsilon = {0.0, 0.5, 1.0};
    c.trials = 2000;
    c.seed = kSeed;
    c.dof = true;
    c.dof_anchors = {60, 80};
    const SweepResult r = run_sweep(c);

    bool ok = true;
    std::string detail;
    double ria_half = 0.0, tdma = 0.0;
    for (const SlopeRecord& s : r.slopes) {
        if (s.scheme == Scheme::Tdma) {
            tdma = s.slope;
            continue;
        }
        const double want = theoretical_dof_k3(s.epsilon);
        ok = ok && std::abs(s.slope - want) <= 0.04;
        if (s.epsilon == 0.5) ria_half = s.slope;
        detail += fmt("eps=%g slope=%.4f (want %.4f) ", s.epsilon, s.slope, want);
    }
    ok = ok && std::abs(ria_half - tdma) <= 0.04;
    detail += fmt("| tdma slope=%.4f, |ria(0.5)-tdma|=%.4f (tol 0.04)", tdma, std::abs(ria_half - tdma));
    return {ok, detail};
}

// ------------------------------------------------------------------ 5

Outcome fig3_calibration() {
    SimConfig c;
    c.users = 3;
    c.snr_db = {40};
    c.epsilon = {0.01, 1.0};
    c.trials = 2000;
    c.seed = kSeed;
    const SweepResult r = run_sweep(c);
    const double ria_low = r.records[0].mean_rate;
    const double ria_one = r.records[1].mean_rate;
    const double tdma = r.records[2].mean_rate;

    const bool ordering = ria_one > tdma && tdma > ria_low;
    const double dev_ria = std::abs(ria_one - 5.513) / 5.513;
    const double dev_tdma = std::abs(tdma - 4.149) / 4.149;
    const bool levels = dev_ria <= 0.20 && dev_tdma <= 0.20;
    Outcome out{ordering, fmt("rate(eps=1)=%.4f [%+.1f%% vs 5.513] rate(noCSIT)=%.4f [%+.1f%% vs 4.149] "
                              "rate(eps=0.01)=%.4f; ordering %s; levels within 20%%: %s",
                              ria_one, 100 * (ria_one - 5.513) / 5.513, tdma, 100 * (tdma - 4.149) / 4.149,
                              ria_low, ordering ? "ok" : "VIOLATED", levels ? "yes" : "NO")};
    out.soft_fail = ordering && !levels;
    return out;
}

// ------------------------------------------------------------------ 6

Outcome fig4_outage() {
    SimConfig c;
    c.users = 3;
    c.snr_db = {40};
    c.epsilon = {0.01, 0.1, 0.2, 0.4, 0.5, 0.7, 0.9, 1.0};
    c.trials = 2000;
    c.seed = kSeed;
    const SweepResult r = run_sweep(c);
    const std::size_t n = c.epsilon.size();

    bool monotone = true, flat = true;
    std::string ria_values;
    for (std::size_t e = 0; e < n; ++e) {
        ria_values += fmt("%.3f ", r.records[e].outage_rate);
        if (e > 0) monotone = monotone && r.records[e].outage_rate >= r.records[e - 1].outage_rate;
        flat = flat && r.records[n + e].outage_rate == r.records[n].outage_rate;
    }
    const double ria_one = r.records[n - 1].outage_rate;
    const double tdma = r.records[n].outage_rate;
    const bool beats = ria_one > tdma;
    return {monotone && flat && beats,
            fmt("ria outage10 over eps: %s| monotone %s, tdma constant %s (%.3f), ria(1) > tdma %s", ria_values.c_str(),
                monotone ? "yes" : "NO", flat ? "yes" : "NO", tdma, beats ? "yes" : "NO")};
}

// ------------------------------------------------------------------ 7

Outcome oracle_equivalence() {
    Rng pick(kSeed + 7);
    std::uniform_real_distribution<double> eps(0.0, 1.0);
    std::uniform_real_distribution<double> snr_db(0.0, 60.0);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
        const auto r = ria::testing::make_realization(3, eps(pick), db_to_linear(snr_db(pick)),
                                                      kSeed + 1000 + static_cast<std::uint64_t>(n));
        for (int j = 0; j < 3; ++j) {
            const UserSystem& rx = r.system.receivers[static_cast<std::size_t>(j)];
            const double rate =
                user_rate(rx.equivalent, noise_interference_cov(rx.filter, rx.interference), r.system.slots);
            const double oracle = ria::testing::direct_rate_oracle(r, j);
            worst = std::max(worst, std::abs(rate - oracle) / std::abs(oracle));
        }
    }
    return {worst <= 1e-9, fmt("max relative error %.3g over 100 instances x 3 users (tol 1e-9)", worst)};
}

// ------------------------------------------------------------------ 8

std::string run_simulate(const char* threads) {
    ::setenv("RIA_SIM_THREADS", threads, 1);
    const std::vector<const char*> argv{"ria_sim", "simulate", "--users", "3",      "--snr-db", "5:40:5",
                                        "--epsilon", "0.5,1", "--trials", "2000", "--seed", "7", "--dof"};
    std::ostringstream out, err;
    const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    ::unsetenv("RIA_SIM_THREADS");
    return status == 0 ? out.str() : std::string("exit ") + std::to_string(status) + ": " + err.str();
}

Outcome determinism() {
    const std::string a1 = run_simulate("1");
    const std::string b1 = run_simulate("1");
    const std::string a8 = run_simulate("8");
    const std::string b8 = run_simulate("8");
    const bool ok = !a1.empty() && a1.rfind("exit", 0) != 0 && a1 == b1 && a1 == a8 && a8 == b8;
    return {ok, fmt("4 runs (threads 1,1,8,8), %zu bytes each, identical: %s", a1.size(), ok ? "yes" : "NO")};
}

// ------------------------------------------------------------------ 9

Outcome full_rank() {
    const Schedule schedule(3);
    const double p = db_to_linear(40.0);
    int good = 0;
    double smallest = 1e300;
    constexpr int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        Rng ch = make_rng(kSeed, static_cast<std::uint64_t>(t), Stream::Channels);
        Rng er = make_rng(kSeed, static_cast<std::uint64_t>(t), Stream::EstimationError);
        const ChannelSet channels = draw_channels(3, 3, schedule, ch);
        const CsitReport csit = corrupt_csit(channels, 1.0, p, er);
        const ExtendedSystem sys = assemble_extended(channels, csit, schedule, p);
        bool all = true;
        for (const UserSystem& rx : sys.receivers) {
            Eigen::JacobiSVD<Matrix> svd(rx.equivalent);
            const double s = svd.singularValues().minCoeff() / std::sqrt(p);
            smallest = std::min(smallest, s);
            all = all && s > 1e-6;
        }
        good += all ? 1 : 0;
    }
    const double frac = static_cast<double>(good) / trials;
    return {frac >= 0.999, fmt("%d/%d trials with min sv(Heq)/sqrt(P) > 1e-6 (need >= 99.9%%); smallest %.3g", good,
                               trials, smallest)};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "bounds golden values", 1.0, bounds_golden},
        {2, "alignment exactness with error-free feedback", 10.0, alignment_exactness},
        {3, "residual interference power exponent", 120.0, residual_exponent},
        {4, "DoF slope between 60 and 80 dB", 120.0, dof_slope_criterion},
        {5, "average-rate calibration at 40 dB", 60.0, fig3_calibration},
        {6, "outage-rate properties at 40 dB", 120.0, fig4_outage},
        {7, "filtered rate vs direct oracle", 60.0, oracle_equivalence},
        {8, "CSV determinism across worker counts", 120.0, determinism},
        {9, "equivalent channel full rank", 60.0, full_rank},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.body();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = elapsed < c.time_limit_s;
        const bool pass = out.pass && in_time;
        if (!pass) ++failures;
        const char* tag = !pass ? "FAIL" : out.soft_fail ? "PASS (calibration miss)" : "PASS";
        std::printf("[%s] criterion %d: %s -- %s; %.2fs (limit %.0fs)\n", tag, c.id, c.name, out.detail.c_str(),
                    elapsed, c.time_limit_s);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
