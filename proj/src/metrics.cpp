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

#include "ria/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ria {

Matrix noise_interference_cov(const Matrix& filter, const Matrix& interference) {
    if (filter.cols() != interference.rows()) throw std::invalid_argument("filter and interference shapes disagree");
    const Matrix residual = filter * interference;
    Matrix cov = residual * residual.adjoint() + filter * filter.adjoint();
    // exact Hermitian symmetry for the factorization downstream
    return (cov + cov.adjoint()) * 0.5;
}

double log2_det_hpd(const Matrix& a) {
    Eigen::LLT<Matrix> llt(a);
    if (llt.info() != Eigen::Success) throw std::domain_error("matrix is not Hermitian positive definite");
    const Matrix& factor = llt.matrixLLT();
    double sum = 0.0;
    for (Eigen::Index k = 0; k < factor.rows(); ++k) sum += std::log2(factor(k, k).real());
    return 2.0 * sum;
}

double user_rate(const Matrix& equivalent, const Matrix& covariance, int slots) {
    if (slots < 1) throw std::invalid_argument("slot count must be positive");
    if (covariance.rows() != covariance.cols() || covariance.rows() != equivalent.rows())
        throw std::invalid_argument("covariance shape does not match equivalent channel");

    Eigen::LLT<Matrix> llt(covariance);
    if (llt.info() != Eigen::Success)
        throw std::domain_error("interference-plus-noise covariance is not positive definite");
    // whitened channel L^-1 Heq; det(I + A A^H) = det(I + Upsilon^-1 Heq Heq^H)
    const Matrix whitened = llt.matrixL().solve(equivalent);
    const Eigen::Index n = equivalent.rows();
    const Matrix gram = Matrix::Identity(n, n) + whitened * whitened.adjoint();
    return log2_det_hpd(gram) / slots;
}

double dof_slope(RatePoint lo, RatePoint hi) {
    if (!(lo.snr > 0.0) || !(hi.snr > lo.snr)) throw std::invalid_argument("dof_slope needs 0 < P_lo < P_hi");
    return (hi.rate - lo.rate) / (std::log2(hi.snr) - std::log2(lo.snr));
}

double theoretical_dof_k3(double epsilon) { return (1.0 + 2.0 * epsilon) / 6.0; }

double outage_rate(std::span<const double> samples, double percentile) {
    if (samples.empty()) throw std::invalid_argument("outage_rate needs at least one sample");
    if (!(percentile > 0.0 && percentile < 100.0)) throw std::invalid_argument("percentile must lie in (0, 100)");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double rank = percentile / 100.0 * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(rank));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = rank - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

} // namespace ria
