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

#include "ria/bounds.hpp"

#include <array>
#include <stdexcept>

namespace ria {

double inner_bound(int users, double epsilon) {
    if (users < 1) throw std::invalid_argument("inner_bound needs K >= 1");
    const double k = users;
    return (2.0 / (k + 1.0)) * (1.0 + (k - 1.0) * epsilon) / k;
}

double outer_bound(int users) {
    if (users < 1) throw std::invalid_argument("outer_bound needs K >= 1");
    double harmonic = 0.0;
    for (int i = 1; i <= users; ++i) harmonic += 1.0 / i;
    return 1.0 / harmonic;
}

double tdma_dof(int users) {
    if (users < 1) throw std::invalid_argument("tdma_dof needs K >= 1");
    return 1.0 / users;
}

double crossover_epsilon(int users) {
    if (users < 2) throw std::invalid_argument("crossover_epsilon needs K >= 2");
    // inner_bound is affine in eps
    const double at0 = inner_bound(users, 0.0);
    const double slope = inner_bound(users, 1.0) - at0;
    return (tdma_dof(users) - at0) / slope;
}

namespace {

// Plotted coordinates of the perfect-feedback DoF comparison figure.
constexpr std::array<CurvePoint, 9> thm1_outer{{{2, 0.666666666666667},
                                                {3, 0.545454545454546},
                                                {4, 0.48},
                                                {5, 0.437956204379562},
                                                {6, 0.408163265306123},
                                                {7, 0.385674931129477},
                                                {8, 0.367936925098555},
                                                {9, 0.353485762379015},
                                                {10, 0.341417152147406}}};

constexpr std::array<CurvePoint, 9> ghasemi_outer{{{2, 0.666666666666667},
                                                   {3, 0.714285714285714},
                                                   {4, 0.769230769230769},
                                                   {5, 0.80952380952381},
                                                   {6, 0.838709677419355},
                                                   {7, 0.86046511627907},
                                                   {8, 0.87719298245614},
                                                   {9, 0.89041095890411},
                                                   {10, 0.901098901098901}}};

constexpr std::array<CurvePoint, 9> thm1_inner{{{2, 0.666666666666667},
                                                {3, 0.5},
                                                {4, 0.4},
                                                {5, 0.333333333333333},
                                                {6, 0.285714285714286},
                                                {7, 0.25},
                                                {8, 0.222222222222222},
                                                {9, 0.2},
                                                {10, 0.181818181818182}}};

constexpr std::array<CurvePoint, 9> ghasemi_inner{{{2, 0.666666666666667},
                                                   {3, 0.428571428571429},
                                                   {4, 0.307692307692308},
                                                   {5, 0.238095238095238},
                                                   {6, 0.193548387096774},
                                                   {7, 0.162790697674419},
                                                   {8, 0.140350877192982},
                                                   {9, 0.123287671232877},
                                                   {10, 0.10989010989011}}};

constexpr std::array<CurvePoint, 9> abdoli_siso_inner{{{2, 0.5},
                                                       {3, 0.387096774193548},
                                                       {4, 0.296052631578947},
                                                       {5, 0.239111870196413},
                                                       {6, 0.200596056854654},
                                                       {7, 0.172832321888769},
                                                       {8, 0.151863704422931},
                                                       {9, 0.135460984743207},
                                                       {10, 0.122274614750177}}};

constexpr std::array<CurvePoint, 9> tdma{{{2, 0.5},
                                          {3, 0.333333333333333},
                                          {4, 0.25},
                                          {5, 0.2},
                                          {6, 0.166666666666667},
                                          {7, 0.142857142857143},
                                          {8, 0.125},
                                          {9, 0.111111111111111},
                                          {10, 0.1}}};

constexpr std::string_view from_formula = "closed form, plotted values";
constexpr std::string_view from_plot = "read from the published plot, local dCSIT MISO IC (Ghasemi et al.)";

const std::array<ReferenceCurve, 6> curves{{
    {"thm1_outer", from_formula, thm1_outer},
    {"ghasemi_outer", from_plot, ghasemi_outer},
    {"thm1_inner", from_formula, thm1_inner},
    {"ghasemi_inner", from_plot, ghasemi_inner},
    {"abdoli_siso_inner", "read from the published plot, global dCSIT SISO IC (Abdoli et al.)", abdoli_siso_inner},
    {"tdma", from_formula, tdma},
}};

} // namespace

std::span<const ReferenceCurve> reference_curves() { return curves; }

std::optional<double> reference_value(std::string_view name, int users) {
    for (const auto& curve : curves) {
        if (curve.name != name) continue;
        for (const auto& p : curve.points)
            if (p.users == users) return p.dof;
        return std::nullopt;
    }
    throw std::invalid_argument("unknown reference curve");
}

} // namespace ria
