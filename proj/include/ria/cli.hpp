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

#ifndef RIA_CLI_HPP
#define RIA_CLI_HPP

#include "ria/output_table.hpp"
#include "ria/sim.hpp"

#include <iosfwd>
#include <string_view>
#include <vector>

namespace ria {

/// Bound table for K in [kmin, kmax]. Columns: K, thm1_inner, thm1_outer,
/// tdma, ghasemi_inner, ghasemi_outer, abdoli_inner. The three reference
/// columns are empty outside K = 2..10.
OutputTable cmd_bounds(int kmin, int kmax, double epsilon);

/// Sweep records as scheme,K,epsilon,snr_db,trials,mean_rate,outage<p>,std_err.
OutputTable sweep_table(const SweepResult& result, double percentile);

/// scheme,K,epsilon,snr_lo_db,snr_hi_db,rate_lo,rate_hi,dof_slope
OutputTable slope_table(const SweepResult& result);

/// scheme,K,epsilon,snr_db,outage<p>
OutputTable outage_table(const SweepResult& result, double percentile);

/// "a:b:step" (inclusive, step > 0) or a comma-separated list.
std::vector<double> parse_grid(std::string_view text);

/// Entry point shared by the executable and the tests. Reads RIA_SIM_THREADS
/// to cap the worker count. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ria

#endif
