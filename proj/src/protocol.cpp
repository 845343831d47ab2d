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

#include "ria/protocol.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ria {

Schedule::Schedule(int users) : users_(users) {
    if (users < 2) throw std::invalid_argument("schedule needs at least 2 users, got " + std::to_string(users));
    pair_index_.assign(static_cast<std::size_t>(users * users), -1);
    for (int s = 0; s < users; ++s) slots_.push_back({Phase::Orthogonal, s, {s}});
    int index = 0;
    for (int a = 0; a < users; ++a) {
        for (int b = a + 1; b < users; ++b) {
            const int slot = static_cast<int>(slots_.size());
            pair_index_[static_cast<std::size_t>(a * users + b)] = slot;
            pair_index_[static_cast<std::size_t>(b * users + a)] = slot;
            slots_.push_back({Phase::Alignment, index++, {a, b}});
        }
    }
}

bool Schedule::is_active(int tx, int s) const {
    for (int i : slot(s).active)
        if (i == tx) return true;
    return false;
}

int Schedule::orthogonal_slot(int tx) const {
    if (tx < 0 || tx >= users_) throw std::out_of_range("transmitter out of range");
    return tx;
}

int Schedule::pair_slot(int a, int b) const {
    if (a < 0 || b < 0 || a >= users_ || b >= users_ || a == b)
        throw std::out_of_range("invalid transmitter pair");
    return pair_index_[static_cast<std::size_t>(a * users_ + b)];
}

int Schedule::partner(int tx, int s) const {
    const Slot& sl = slot(s);
    if (sl.phase != Phase::Alignment) throw std::invalid_argument("partner() needs an alignment slot");
    if (sl.active[0] == tx) return sl.active[1];
    if (sl.active[1] == tx) return sl.active[0];
    throw std::invalid_argument("transmitter not active in slot");
}

Schedule build_schedule(int users) { return Schedule(users); }

Matrix ot_precoder(int users, int antennas, double snr) {
    if (users < 1 || antennas < users) throw std::invalid_argument("orthogonal precoder needs antennas >= users >= 1");
    if (!(snr > 0.0)) throw std::invalid_argument("snr must be positive");
    Matrix v = Matrix::Zero(antennas, users);
    v.topRows(users).diagonal().setConstant(std::sqrt(snr / users));
    return v;
}

Matrix ria_precoder(const RowVector& hhat, double snr, int antennas) {
    if (antennas < hhat.size()) throw std::invalid_argument("estimate longer than antenna count");
    if (!(snr > 0.0)) throw std::invalid_argument("snr must be positive");
    const double norm = hhat.norm();
    if (!(norm > 0.0)) throw DegenerateInput("zero-norm channel estimate");
    Matrix v = Matrix::Zero(antennas, hhat.size());
    v.row(0) = hhat * (std::sqrt(snr) / norm);
    return v;
}

const Matrix& PrecoderSet::at(int tx, int slot) const {
    const Matrix& v = matrices.at(static_cast<std::size_t>(slot * users + tx));
    if (v.size() == 0) throw std::out_of_range("no precoder for inactive transmitter");
    return v;
}

PrecoderSet build_precoders(const CsitReport& csit, const Schedule& schedule, double snr) {
    const int users = csit.users;
    if (schedule.users() != users) throw std::invalid_argument("schedule and CSIT disagree on user count");
    const int slots = schedule.total_slots();

    PrecoderSet set;
    set.users = users;
    set.antennas = csit.antennas;
    set.symbols = users;
    set.snr = snr;
    set.matrices.resize(static_cast<std::size_t>(slots * users));
    set.sigma.assign(static_cast<std::size_t>(slots * users), 0.0);

    const Matrix ot = ot_precoder(users, csit.antennas, snr);
    for (int s = 0; s < slots; ++s) {
        const Slot& slot = schedule.slot(s);
        for (int tx : slot.active) {
            const auto k = static_cast<std::size_t>(s * users + tx);
            if (slot.phase == Phase::Orthogonal) {
                set.matrices[k] = ot;
                continue;
            }
            const int target = schedule.partner(tx, s);
            const RowVector hhat = csit.estimate(target, tx).head(users);
            set.matrices[k] = ria_precoder(hhat, snr, csit.antennas);
            set.sigma[k] = std::sqrt(snr) / hhat.norm();
        }
    }
    return set;
}

namespace {

Matrix block_channel(const ChannelSet& channels, int rx, int tx, int slots) {
    const int m = channels.antennas();
    Matrix h = Matrix::Zero(slots, static_cast<Eigen::Index>(m) * slots);
    for (int s = 0; s < slots; ++s)
        if (channels.has(rx, tx, s)) h.block(s, static_cast<Eigen::Index>(s) * m, 1, m) = channels.at(rx, tx, s);
    return h;
}

Matrix stacked_precoder(const PrecoderSet& precoders, int tx, int slots) {
    const int m = precoders.antennas;
    Matrix v = Matrix::Zero(static_cast<Eigen::Index>(m) * slots, precoders.symbols);
    for (int s = 0; s < slots; ++s) {
        const Matrix& block = precoders.matrices[static_cast<std::size_t>(s * precoders.users + tx)];
        if (block.size() != 0) v.middleRows(static_cast<Eigen::Index>(s) * m, m) = block;
    }
    return v;
}

} // namespace

Matrix receive_filter(int user, const ExtendedSystem& system, const ChannelSet& channels,
                      const Schedule& schedule, int* degenerate_rows) {
    const int users = system.users;
    if (user < 0 || user >= users) throw std::out_of_range("user out of range");
    const double root_p = std::sqrt(system.snr);

    Matrix u = Matrix::Zero(system.symbols, system.slots);
    u(0, schedule.orthogonal_slot(user)) = 1.0;

    int degenerate = 0;
    int row = 1;
    for (int beta = 0; beta < users; ++beta) {
        if (beta == user) continue;
        const int ot_slot = schedule.orthogonal_slot(beta);
        const int pair = schedule.pair_slot(user, beta);
        // orthogonal-phase interference scale and alignment gain toward `user`
        const Complex c = system.precoders.at(beta, ot_slot)(0, 0) / root_p;
        const Complex g = system.precoders.alignment_scale(beta, pair) * channels.at(user, beta, pair)(0) / root_p;
        if (g == Complex(0.0)) ++degenerate;
        u(row, ot_slot) = g;
        u(row, pair) = -c;
        ++row;
    }
    if (degenerate_rows) *degenerate_rows = degenerate;
    return u;
}

ExtendedSystem assemble_extended(const ChannelSet& channels, const CsitReport& csit,
                                 const Schedule& schedule, double snr) {
    const int users = channels.users();
    const int slots = schedule.total_slots();
    if (csit.users != users || schedule.users() != users || channels.slots() != slots)
        throw std::logic_error("channel set, CSIT report and schedule are inconsistent");

    ExtendedSystem sys;
    sys.users = users;
    sys.antennas = channels.antennas();
    sys.symbols = users;
    sys.slots = slots;
    sys.snr = snr;
    sys.precoders = build_precoders(csit, schedule, snr);

    sys.stacked_precoders.reserve(static_cast<std::size_t>(users));
    for (int i = 0; i < users; ++i) sys.stacked_precoders.push_back(stacked_precoder(sys.precoders, i, slots));

    const int b = sys.symbols;
    sys.receivers.resize(static_cast<std::size_t>(users));
    for (int j = 0; j < users; ++j) {
        UserSystem& rx = sys.receivers[static_cast<std::size_t>(j)];
        rx.block_channels.reserve(static_cast<std::size_t>(users));
        for (int i = 0; i < users; ++i) rx.block_channels.push_back(block_channel(channels, j, i, slots));

        rx.interference.resize(slots, static_cast<Eigen::Index>(users - 1) * b);
        int col = 0;
        for (int i = 0; i < users; ++i) {
            if (i == j) continue;
            rx.interference.middleCols(col, b) =
                rx.block_channels[static_cast<std::size_t>(i)] * sys.stacked_precoders[static_cast<std::size_t>(i)];
            col += b;
        }
    }
    for (int j = 0; j < users; ++j) {
        UserSystem& rx = sys.receivers[static_cast<std::size_t>(j)];
        rx.filter = receive_filter(j, sys, channels, schedule, &rx.degenerate_rows);
        rx.equivalent = rx.filter * rx.block_channels[static_cast<std::size_t>(j)] *
                        sys.stacked_precoders[static_cast<std::size_t>(j)];
    }
    return sys;
}

} // namespace ria
