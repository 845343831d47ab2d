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

#ifndef RIA_SIM_KERNELS_HPP
#define RIA_SIM_KERNELS_HPP

#include "ria/sim.hpp"

#include <vector>

namespace ria {

// Both kernels return results indexed by trial. They must agree bit-for-bit.

std::vector<TrialResult> evaluate_trials_serial(const SimConfig& config, double epsilon, double snr);

/// Trials spread over OpenMP threads (config.threads caps the team size).
std::vector<TrialResult> evaluate_trials_parallel(const SimConfig& config, double epsilon, double snr);

} // namespace ria

#endif
