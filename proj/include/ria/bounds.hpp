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

#ifndef RIA_BOUNDS_HPP
#define RIA_BOUNDS_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ria {

/// DoF per user achieved by the two-phase alignment scheme with feedback
/// quality epsilon: (2/(K+1)) * (1 + (K-1) eps) / K.
double inner_bound(int users, double epsilon);

/// Cooperative outer bound, the inverse harmonic number (sum_{i<=K} 1/i)^-1.
double outer_bound(int users);

/// No-CSIT time division, 1/K.
double tdma_dof(int users);

/// Feedback quality at which inner_bound(K, eps) equals tdma_dof(K).
double crossover_epsilon(int users);

struct CurvePoint {
    int users;
    double dof;
};

struct ReferenceCurve {
    std::string_view name;
    std::string_view provenance;
    std::span<const CurvePoint> points; // K = 2..10
};

/// Golden perfect-feedback curves for K = 2..10. Series names:
/// thm1_outer, ghasemi_outer, thm1_inner, ghasemi_inner, abdoli_siso_inner, tdma.
std::span<const ReferenceCurve> reference_curves();

/// Value of a named curve at K, or nullopt outside the stored range.
std::optional<double> reference_value(std::string_view name, int users);

} // namespace ria

#endif
