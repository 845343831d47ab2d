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

#include "ria/sim.hpp"

#include "ria/channel.hpp"
#include "ria/metrics.hpp"
#include "ria/protocol.hpp"
#include "ria/rng.hpp"
#include "ria/sim_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace ria {

std::string_view scheme_name(Scheme s) { return s == Scheme::Ria ? "ria" : "tdma"; }

Scheme parse_scheme(std::string_view name) {
    if (name == "ria") return Scheme::Ria;
    if (name == "tdma") return Scheme::Tdma;
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "' (expected ria or tdma)");
}

bool SimConfig::has(Scheme s) const { return std::find(schemes.begin(), schemes.end(), s) != schemes.end(); }

void SimConfig::validate() const {
    if (users < 2) throw std::invalid_argument("users must be at least 2");
    if (effective_antennas() < users) throw std::invalid_argument("antennas must be at least the number of users");
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (snr_db.empty()) throw std::invalid_argument("SNR grid is empty");
    if (epsilon.empty()) throw std::invalid_argument("epsilon grid is empty");
    for (double e : epsilon)
        if (!(e >= 0.0 && e <= 1.0)) throw std::invalid_argument("epsilon values must lie in [0, 1]");
    for (double s : snr_db)
        if (!std::isfinite(s)) throw std::invalid_argument("SNR values must be finite");
    if (schemes.empty()) throw std::invalid_argument("no schemes selected");
    if (!(percentile > 0.0 && percentile < 100.0)) throw std::invalid_argument("percentile must lie in (0, 100)");
    if (dof && !(dof_anchors.first < dof_anchors.second))
        throw std::invalid_argument("DoF anchors must satisfy low < high");
    if (threads < 0) throw std::invalid_argument("thread count must be non-negative");
}

TrialResult run_trial(const SimConfig& config, double epsilon, double snr, std::uint64_t trial) {
    const int users = config.users;
    const int antennas = config.effective_antennas();
    const Schedule schedule(users);

    Rng channel_rng = make_rng(config.seed, trial, Stream::Channels);
    const ChannelSet channels = draw_channels(users, antennas, schedule, channel_rng);

    TrialResult result;
    if (config.has(Scheme::Ria)) {
        try {
            Rng error_rng = make_rng(config.seed, trial, Stream::EstimationError);
            const CsitReport csit =
                config.exact_csit ? exact_csit(channels) : corrupt_csit(channels, epsilon, snr, error_rng);
            const ExtendedSystem sys = assemble_extended(channels, csit, schedule, snr);
            result.ria.reserve(static_cast<std::size_t>(users));
            for (const UserSystem& rx : sys.receivers) {
                if (rx.degenerate_rows > 0) result.diagnostic = "zero alignment gain in a cancellation row";
                const Matrix cov = noise_interference_cov(rx.filter, rx.interference);
                result.ria.push_back(user_rate(rx.equivalent, cov, schedule.total_slots()));
            }
        } catch (const DegenerateInput& e) {
            result.ria.clear();
            result.ria_skipped = true;
            result.diagnostic = e.what();
        }
    }
    if (config.has(Scheme::Tdma)) {
        const double gain = config.tdma_power == TdmaPower::Total ? snr / antennas : snr;
        result.tdma.reserve(static_cast<std::size_t>(users));
        for (int j = 0; j < users; ++j) {
            const double h2 = channels.at(j, j, schedule.orthogonal_slot(j)).squaredNorm();
            result.tdma.push_back(std::log2(1.0 + gain * h2) / users);
        }
    }
    return result;
}

namespace {

using Kernel = std::function<std::vector<TrialResult>(const SimConfig&, double, double)>;

struct CellStats {
    double mean = 0.0;
    double outage = 0.0;
    double std_error = 0.0;
    int trials = 0;
    int skipped = 0;
};

CellStats summarize(const std::vector<TrialResult>& results, Scheme scheme, double percentile) {
    std::vector<double> pooled;
    std::vector<double> trial_means;
    CellStats stats;
    for (const TrialResult& r : results) {
        const std::vector<double>& rates = scheme == Scheme::Ria ? r.ria : r.tdma;
        if (scheme == Scheme::Ria && r.ria_skipped) {
            ++stats.skipped;
            continue;
        }
        double sum = 0.0;
        for (double x : rates) {
            pooled.push_back(x);
            sum += x;
        }
        trial_means.push_back(sum / static_cast<double>(rates.size()));
    }
    stats.trials = static_cast<int>(trial_means.size());
    if (trial_means.empty()) return stats;

    double total = 0.0;
    for (double x : pooled) total += x;
    stats.mean = total / static_cast<double>(pooled.size());
    stats.outage = outage_rate(pooled, percentile);
    if (trial_means.size() > 1) {
        double tm = 0.0;
        for (double x : trial_means) tm += x;
        tm /= static_cast<double>(trial_means.size());
        double ss = 0.0;
        for (double x : trial_means) ss += (x - tm) * (x - tm);
        const double n = static_cast<double>(trial_means.size());
        stats.std_error = std::sqrt(ss / (n - 1.0) / n);
    }
    return stats;
}

// Caches per-(epsilon, snr) trial batches so slope anchors already on the
// grid are not recomputed.
class CellCache {
public:
    CellCache(const SimConfig& config, Kernel kernel) : config_(config), kernel_(std::move(kernel)) {}

    const std::vector<TrialResult>& get(double epsilon, double snr_db) {
        const auto key = std::make_pair(epsilon, snr_db);
        auto it = cells_.find(key);
        if (it == cells_.end())
            it = cells_.emplace(key, kernel_(config_, epsilon, db_to_linear(snr_db))).first;
        return it->second;
    }

private:
    const SimConfig& config_;
    Kernel kernel_;
    std::map<std::pair<double, double>, std::vector<TrialResult>> cells_;
};

SweepResult sweep(const SimConfig& config, const Kernel& kernel) {
    config.validate();
    CellCache cache(config, kernel);
    SweepResult out;

    for (Scheme scheme : config.schemes) {
        for (double eps : config.epsilon) {
            for (double snr : config.snr_db) {
                const CellStats st = summarize(cache.get(eps, snr), scheme, config.percentile);
                out.records.push_back({scheme, config.users, eps, snr, st.trials, st.mean, st.outage,
                                       st.std_error, st.skipped});
            }
        }
    }
    if (config.dof) {
        const auto [lo_db, hi_db] = config.dof_anchors;
        for (Scheme scheme : config.schemes) {
            for (double eps : config.epsilon) {
                const CellStats lo = summarize(cache.get(eps, lo_db), scheme, config.percentile);
                const CellStats hi = summarize(cache.get(eps, hi_db), scheme, config.percentile);
                const double slope = dof_slope({db_to_linear(lo_db), lo.mean}, {db_to_linear(hi_db), hi.mean});
                out.slopes.push_back({scheme, config.users, eps, lo_db, hi_db, lo.mean, hi.mean, slope});
            }
        }
    }
    return out;
}

} // namespace

SweepResult run_sweep(const SimConfig& config) { return sweep(config, evaluate_trials_parallel); }

SweepResult run_sweep_serial(const SimConfig& config) { return sweep(config, evaluate_trials_serial); }

} // namespace ria
