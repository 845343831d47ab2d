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

#ifndef RIA_CHANNEL_HPP
#define RIA_CHANNEL_HPP

#include "ria/rng.hpp"
#include "ria/schedule.hpp"
#include "ria/types.hpp"

#include <vector>

namespace ria {

/// True channel row vectors h_{j,i}^{(p,s)} of one realization.
///
/// Indices are 0-based: receiver j, transmitter i, and slot s in schedule
/// order. A vector exists only when transmitter i is active in slot s.
class ChannelSet {
public:
    ChannelSet(int users, int antennas, int slots);

    int users() const { return users_; }
    int antennas() const { return antennas_; }
    int slots() const { return slots_; }

    bool has(int rx, int tx, int slot) const;
    const RowVector& at(int rx, int tx, int slot) const;
    void set(int rx, int tx, int slot, RowVector h);

private:
    std::size_t offset(int rx, int tx, int slot) const;

    int users_;
    int antennas_;
    int slots_;
    std::vector<RowVector> entries_;
    std::vector<bool> present_;
};

/// Transmitter-side estimates of the orthogonal-phase channels. Transmitter i
/// only learns the channels departing from itself during its own orthogonal
/// slot, i.e. hhat_{j,i}^{(1,i)} for every receiver j.
struct CsitReport {
    int users = 0;
    int antennas = 0;
    double epsilon = 0.0;
    double cee_power = 0.0; // E||h - hhat||^2
    std::vector<RowVector> estimates; // rx * users + tx

    const RowVector& estimate(int rx, int tx) const {
        return estimates.at(static_cast<std::size_t>(rx * users + tx));
    }
};

/// Draws i.i.d. CN(0,1) entries for every active (receiver, transmitter,
/// slot). Draw order is slot-major, then active transmitter, then receiver,
/// then antenna. Requires users >= 2 and antennas >= users.
ChannelSet draw_channels(int users, int antennas, const Schedule& schedule, Rng& rng);

/// hhat = h - htilde with htilde independent of h and per-entry variance
/// snr^-epsilon / M, so that E||htilde||^2 = snr^-epsilon. The unit-variance
/// error draws are independent of epsilon and snr, which keeps a trial's
/// randomness common across a sweep grid.
CsitReport corrupt_csit(const ChannelSet& channels, double epsilon, double snr, Rng& rng);

/// Error-free report (hhat = h); cee_power is zero.
CsitReport exact_csit(const ChannelSet& channels);

} // namespace ria

#endif
