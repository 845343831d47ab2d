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

#ifndef RIA_SCHEDULE_HPP
#define RIA_SCHEDULE_HPP

#include <vector>

namespace ria {

enum class Phase : int {
    Orthogonal = 1, // one transmitter per slot, receivers overhear interference
    Alignment = 2,  // transmitters act in pairs
};

struct Slot {
    Phase phase;
    int index;               // 0-based position inside its phase
    std::vector<int> active; // 0-based transmitter ids, ascending
};

/// Two-phase slot plan for K users: K orthogonal slots (slot s serves
/// transmitter s) followed by one slot per unordered transmitter pair in
/// lexicographic order. Slots are numbered 0..W-1 in that order.
class Schedule {
public:
    explicit Schedule(int users);

    int users() const { return users_; }
    int phase1_slots() const { return users_; }
    int phase2_slots() const { return users_ * (users_ - 1) / 2; }
    int total_slots() const { return static_cast<int>(slots_.size()); }

    const std::vector<Slot>& slots() const { return slots_; }
    const Slot& slot(int s) const { return slots_.at(static_cast<std::size_t>(s)); }

    bool is_active(int tx, int s) const;
    int orthogonal_slot(int tx) const;
    int pair_slot(int a, int b) const;
    /// The other transmitter in an alignment slot.
    int partner(int tx, int s) const;

private:
    int users_;
    std::vector<Slot> slots_;
    std::vector<int> pair_index_; // users x users -> slot, -1 on the diagonal
};

Schedule build_schedule(int users);

} // namespace ria

#endif
