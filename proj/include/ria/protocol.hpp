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

#ifndef RIA_PROTOCOL_HPP
#define RIA_PROTOCOL_HPP

#include "ria/channel.hpp"
#include "ria/schedule.hpp"
#include "ria/types.hpp"

#include <vector>

namespace ria {

/// Orthogonal-phase precoder sqrt(P/K) * I, shaped antennas x users. Rows
/// beyond the first `users` are zero (extra antennas switched off).
Matrix ot_precoder(int users, int antennas, double snr);

/// Alignment-phase precoder sigma * e1 * hhat with sigma = sqrt(P) / ||hhat||.
/// `hhat` is the estimate restricted to the active antennas (length b). The
/// result is antennas x b, rank one, with squared Frobenius norm P.
/// Throws DegenerateInput for a zero-norm estimate.
Matrix ria_precoder(const RowVector& hhat, double snr, int antennas);
inline Matrix ria_precoder(const RowVector& hhat, double snr) {
    return ria_precoder(hhat, snr, static_cast<int>(hhat.size()));
}

/// Precoders of every active (transmitter, slot).
struct PrecoderSet {
    int users = 0;
    int antennas = 0;
    int symbols = 0; // b = K
    double snr = 0.0;
    std::vector<Matrix> matrices; // slot * users + tx; empty when inactive
    std::vector<double> sigma;    // alignment scaling, same layout; 0 when unused

    const Matrix& at(int tx, int slot) const;
    double alignment_scale(int tx, int slot) const {
        return sigma.at(static_cast<std::size_t>(slot * users + tx));
    }
};

/// In alignment slot {a, b}, transmitter a aligns toward receiver b using
/// hhat_{b,a}^{(1,a)}, and vice versa.
PrecoderSet build_precoders(const CsitReport& csit, const Schedule& schedule, double snr);

/// Per-receiver quantities of the stacked two-phase system.
struct UserSystem {
    std::vector<Matrix> block_channels; // H_{j,i}, W x MW, one per transmitter i
    Matrix interference;                // Xi_j, W x (K-1)b, block columns in ascending i != j
    Matrix filter;                      // U_j, b x W
    Matrix equivalent;                  // Heq_j = U_j H_{j,j} V_j, b x b
    int degenerate_rows = 0;            // cancellation rows with a zero alignment gain
};

struct ExtendedSystem {
    int users = 0;
    int antennas = 0;
    int symbols = 0;
    int slots = 0;
    double snr = 0.0;
    PrecoderSet precoders;
    std::vector<Matrix> stacked_precoders; // V_i, MW x b
    std::vector<UserSystem> receivers;
};

/// Builds precoders, the block-diagonal channels, stacked precoders,
/// interference matrices, receive filters and equivalent channels.
ExtendedSystem assemble_extended(const ChannelSet& channels, const CsitReport& csit,
                                 const Schedule& schedule, double snr);

/// Receive filter of user j: one row selecting j's orthogonal slot, and for
/// every other user beta a row combining beta's orthogonal slot (weight g)
/// with the {j, beta} alignment slot (weight -c). c is the orthogonal
/// precoder scale over sqrt(P) and g is beta's alignment gain toward j over
/// sqrt(P), so aligned interference cancels up to the estimation error.
/// Alignment slots without user j get zero weight.
Matrix receive_filter(int user, const ExtendedSystem& system, const ChannelSet& channels,
                      const Schedule& schedule, int* degenerate_rows = nullptr);

} // namespace ria

#endif
