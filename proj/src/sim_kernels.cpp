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

#include "ria/sim_kernels.hpp"

#include <omp.h>

#include <exception>

namespace ria {

std::vector<TrialResult> evaluate_trials_serial(const SimConfig& config, double epsilon, double snr) {
    std::vector<TrialResult> results(static_cast<std::size_t>(config.trials));
    for (int t = 0; t < config.trials; ++t)
        results[static_cast<std::size_t>(t)] = run_trial(config, epsilon, snr, static_cast<std::uint64_t>(t));
    return results;
}

std::vector<TrialResult> evaluate_trials_parallel(const SimConfig& config, double epsilon, double snr) {
    std::vector<TrialResult> results(static_cast<std::size_t>(config.trials));
    const int threads = config.threads > 0 ? config.threads : omp_get_max_threads();
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (int t = 0; t < config.trials; ++t) {
        try {
            results[static_cast<std::size_t>(t)] = run_trial(config, epsilon, snr, static_cast<std::uint64_t>(t));
        } catch (...) {
#pragma omp critical(ria_trial_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

} // namespace ria
