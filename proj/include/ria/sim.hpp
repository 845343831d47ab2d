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

#ifndef RIA_SIM_HPP
#define RIA_SIM_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ria {

enum class Scheme { Ria, Tdma };

std::string_view scheme_name(Scheme s);
Scheme parse_scheme(std::string_view name);

/// Power normalization of the no-CSIT baseline. Total spreads P evenly over
/// the M antennas (P/M each); PerAntenna gives every antenna P.
enum class TdmaPower { Total, PerAntenna };

struct SimConfig {
    int users = 3;
    int antennas = 0; // 0 means "same as users"
    std::vector<double> snr_db;
    std::vector<double> epsilon;
    int trials = 2000;
    std::uint64_t seed = 1;
    std::vector<Scheme> schemes{Scheme::Ria, Scheme::Tdma};
    bool dof = false;
    std::pair<double, double> dof_anchors{40.0, 60.0}; // dB
    double percentile = 10.0;
    TdmaPower tdma_power = TdmaPower::Total;
    bool exact_csit = false; // force hhat = h regardless of epsilon
    int threads = 0;         // 0 lets OpenMP decide

    int effective_antennas() const { return antennas > 0 ? antennas : users; }
    bool has(Scheme s) const;
    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
};

/// Per-user rates of one trial. The alignment scheme may be skipped on a
/// degenerate draw; the baseline never is.
struct TrialResult {
    std::vector<double> ria;
    std::vector<double> tdma;
    bool ria_skipped = false;
    std::string diagnostic;
};

/// One trial of every configured scheme. Randomness depends only on
/// (config.seed, trial), so the same trial index sees the same channels and
/// the same unit-variance estimation errors at every (epsilon, snr).
TrialResult run_trial(const SimConfig& config, double epsilon, double snr, std::uint64_t trial);

struct SweepRecord {
    Scheme scheme;
    int users;
    double epsilon;
    double snr_db;
    int trials;         // trials that contributed
    double mean_rate;   // mean over trials and users, bits/s/Hz
    double outage_rate; // config.percentile-th percentile of per-user rates
    double std_error;   // of the mean, from per-trial user-averaged rates
    int skipped;        // degenerate trials left out
};

struct SlopeRecord {
    Scheme scheme;
    int users;
    double epsilon;
    double snr_lo_db;
    double snr_hi_db;
    double rate_lo;
    double rate_hi;
    double slope;
};

struct SweepResult {
    std::vector<SweepRecord> records; // scheme, then epsilon, then snr, in config order
    std::vector<SlopeRecord> slopes;  // filled when config.dof is set
};

/// Sweep driven by the OpenMP trial kernel.
SweepResult run_sweep(const SimConfig& config);

/// Same sweep through the single-threaded reference kernel.
SweepResult run_sweep_serial(const SimConfig& config);

} // namespace ria

#endif
