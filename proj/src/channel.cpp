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

#include "ria/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ria {

ChannelSet::ChannelSet(int users, int antennas, int slots)
    : users_(users), antennas_(antennas), slots_(slots),
      entries_(static_cast<std::size_t>(users * users * slots)),
      present_(static_cast<std::size_t>(users * users * slots), false) {}

std::size_t ChannelSet::offset(int rx, int tx, int slot) const {
    if (rx < 0 || rx >= users_ || tx < 0 || tx >= users_ || slot < 0 || slot >= slots_)
        throw std::out_of_range("channel index out of range");
    return static_cast<std::size_t>((slot * users_ + tx) * users_ + rx);
}

bool ChannelSet::has(int rx, int tx, int slot) const { return present_[offset(rx, tx, slot)]; }

const RowVector& ChannelSet::at(int rx, int tx, int slot) const {
    const std::size_t k = offset(rx, tx, slot);
    if (!present_[k]) throw std::out_of_range("transmitter inactive in requested slot");
    return entries_[k];
}

void ChannelSet::set(int rx, int tx, int slot, RowVector h) {
    if (h.size() != antennas_) throw std::invalid_argument("channel vector length must equal antenna count");
    const std::size_t k = offset(rx, tx, slot);
    entries_[k] = std::move(h);
    present_[k] = true;
}

ChannelSet draw_channels(int users, int antennas, const Schedule& schedule, Rng& rng) {
    if (users < 2) throw std::invalid_argument("need at least 2 users");
    if (antennas < users)
        throw std::invalid_argument("need at least as many transmit antennas as users (M >= K)");
    if (schedule.users() != users) throw std::invalid_argument("schedule built for a different user count");

    ChannelSet channels(users, antennas, schedule.total_slots());
    for (int s = 0; s < schedule.total_slots(); ++s)
        for (int tx : schedule.slot(s).active)
            for (int rx = 0; rx < users; ++rx) channels.set(rx, tx, s, complex_gaussian_row(rng, antennas));
    return channels;
}

CsitReport corrupt_csit(const ChannelSet& channels, double epsilon, double snr, Rng& rng) {
    if (!(snr > 0.0)) throw std::invalid_argument("snr must be positive");
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in [0, 1]");

    const int users = channels.users();
    const int antennas = channels.antennas();
    const double power = std::pow(snr, -epsilon);
    const double scale = std::sqrt(power / antennas);

    CsitReport report{users, antennas, epsilon, power, {}};
    report.estimates.resize(static_cast<std::size_t>(users * users));
    for (int tx = 0; tx < users; ++tx) {
        // orthogonal slot of transmitter tx is slot tx
        for (int rx = 0; rx < users; ++rx) {
            const RowVector error = complex_gaussian_row(rng, antennas) * scale;
            report.estimates[static_cast<std::size_t>(rx * users + tx)] = channels.at(rx, tx, tx) - error;
        }
    }
    return report;
}

CsitReport exact_csit(const ChannelSet& channels) {
    const int users = channels.users();
    CsitReport report{users, channels.antennas(), 1.0, 0.0, {}};
    report.estimates.resize(static_cast<std::size_t>(users * users));
    for (int tx = 0; tx < users; ++tx)
        for (int rx = 0; rx < users; ++rx)
            report.estimates[static_cast<std::size_t>(rx * users + tx)] = channels.at(rx, tx, tx);
    return report;
}

} // namespace ria
