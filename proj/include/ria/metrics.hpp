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

#ifndef RIA_METRICS_HPP
#define RIA_METRICS_HPP

#include "ria/types.hpp"

#include <span>
#include <vector>

namespace ria {

/// Per-user rates of one realization, bits/s/Hz per channel use.
struct RateSample {
    std::vector<double> per_user_rate;
    double snr = 0.0;
    double epsilon = 0.0;
};

/// Interference-plus-noise covariance after filtering:
/// U Xi Xi^H U^H + U U^H. Unit-variance noise per received sample.
Matrix noise_interference_cov(const Matrix& filter, const Matrix& interference);

/// (1/W) log2 det(I + Upsilon^-1 Heq Heq^H) with unit-covariance symbols.
/// Throws std::domain_error when Upsilon is not positive definite.
double user_rate(const Matrix& equivalent, const Matrix& covariance, int slots);

/// log2 det of a Hermitian positive-definite matrix via Cholesky.
double log2_det_hpd(const Matrix& a);

struct RatePoint {
    double snr;  // linear
    double rate; // bits/s/Hz
};

/// Finite-difference DoF estimate (rate_hi - rate_lo) / (log2 P_hi - log2 P_lo).
double dof_slope(RatePoint lo, RatePoint hi);

/// (1 + 2 eps) / 6, the three-user DoF per user of the two-phase scheme.
double theoretical_dof_k3(double epsilon);

/// Empirical percentile with linear interpolation between order statistics
/// at rank 1 + p/100 * (n - 1) (1-based), the same convention as numpy's
/// default "linear" method.
double outage_rate(std::span<const double> samples, double percentile);

} // namespace ria

#endif
