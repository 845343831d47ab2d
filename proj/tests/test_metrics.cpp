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

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace ria;
using ria::testing::direct_rate_oracle;
using ria::testing::make_realization;

TEST(NoiseInterferenceCov, NoInterferenceIdentityFilter) {
    const Matrix cov = noise_interference_cov(Matrix::Identity(3, 3), Matrix::Zero(3, 6));
    EXPECT_TRUE(cov.isApprox(Matrix::Identity(3, 3)));
}

TEST(NoiseInterferenceCov, PerfectFeedbackLeavesOnlyFilteredNoise) {
    const auto r = make_realization(3, 1.0, 1e4, 1, /*exact=*/true);
    for (const UserSystem& rx : r.system.receivers) {
        const Matrix cov = noise_interference_cov(rx.filter, rx.interference);
        const Matrix noise = rx.filter * rx.filter.adjoint();
        EXPECT_LT((cov - noise).norm(), 1e-9 * noise.norm());
    }
}

TEST(NoiseInterferenceCov, ThreeUserDiagonalGrowsWithResidual) {
    // entry (0,0) is the selected slot's unit noise; the other two diagonals
    // carry P ||htilde||^2 terms and dominate at high SNR with poor feedback
    const auto r = make_realization(3, 0.0, 1e6, 2);
    const UserSystem& rx = r.system.receivers[0];
    const Matrix cov = noise_interference_cov(rx.filter, rx.interference);
    EXPECT_NEAR(cov(0, 0).real(), 1.0, 1e-12);
    EXPECT_EQ(std::abs(cov(0, 1)), 0.0);
    EXPECT_EQ(std::abs(cov(0, 2)), 0.0);
    EXPECT_GT(cov(1, 1).real(), 1e3);
    EXPECT_GT(cov(2, 2).real(), 1e3);
    // rows 1 and 2 use disjoint slots and disjoint interferers
    EXPECT_EQ(std::abs(cov(1, 2)), 0.0);
}

TEST(NoiseInterferenceCov, HermitianPositiveDefinite) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto r = make_realization(4, 0.3, 1e3, seed);
        for (const UserSystem& rx : r.system.receivers) {
            const Matrix cov = noise_interference_cov(rx.filter, rx.interference);
            EXPECT_EQ((cov - cov.adjoint()).norm(), 0.0);
            Eigen::SelfAdjointEigenSolver<Matrix> eig(cov);
            EXPECT_GT(eig.eigenvalues().minCoeff(), 0.0);
        }
    }
}

TEST(UserRate, ZeroChannelGivesZeroRate) {
    EXPECT_EQ(user_rate(Matrix::Zero(3, 3), Matrix::Identity(3, 3), 6), 0.0);
}

TEST(UserRate, ScalarAwgnCapacity) {
    for (double p : {0.5, 1.0, 10.0, 1e4}) {
        Matrix h(1, 1);
        h(0, 0) = std::sqrt(p);
        EXPECT_NEAR(user_rate(h, Matrix::Identity(1, 1), 1), std::log2(1.0 + p), 1e-12);
    }
}

TEST(UserRate, RejectsIndefiniteCovariance) {
    Matrix cov = Matrix::Identity(2, 2);
    cov(1, 1) = -1.0;
    EXPECT_THROW(user_rate(Matrix::Identity(2, 2), cov, 1), std::domain_error);
    EXPECT_THROW(user_rate(Matrix::Identity(2, 2), Matrix::Identity(3, 3), 1), std::invalid_argument);
}

TEST(UserRate, MatchesDirectProjectionOracle) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const double eps = 0.25 * static_cast<double>(seed % 5);
        const auto r = make_realization(3, eps, 1e3, seed);
        for (int j = 0; j < 3; ++j) {
            const UserSystem& rx = r.system.receivers[static_cast<std::size_t>(j)];
            const double rate = user_rate(rx.equivalent, noise_interference_cov(rx.filter, rx.interference), 6);
            const double oracle = direct_rate_oracle(r, j);
            EXPECT_NEAR(rate, oracle, 1e-9 * std::abs(oracle));
        }
    }
}

TEST(UserRate, MonotoneInSnrForFixedDraws) {
    // same unit-variance draws, precoders scaling with sqrt(P)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        double prev = -1.0;
        for (double db = 0; db <= 60; db += 5) {
            const auto r = make_realization(3, 0.6, db_to_linear(db), seed, /*exact=*/true);
            const UserSystem& rx = r.system.receivers[1];
            const double rate = user_rate(rx.equivalent, noise_interference_cov(rx.filter, rx.interference), 6);
            EXPECT_GE(rate, prev);
            prev = rate;
        }
    }
}

TEST(DofSlope, Arithmetic) {
    EXPECT_NEAR(dof_slope({1e4, 3.0}, {1e6, 5.0}), 2.0 / std::log2(100.0), 1e-12);
    EXPECT_NEAR(dof_slope({1e4, 3.0}, {1e6, 5.0}), 0.30103, 1e-5);
    EXPECT_THROW(dof_slope({1e6, 1.0}, {1e4, 2.0}), std::invalid_argument);
    EXPECT_THROW(dof_slope({1e4, 1.0}, {1e4, 2.0}), std::invalid_argument);
}

TEST(DofSlope, ClosedFormRatesReproduceTheoreticalDof) {
    // noiseless high-SNR rate: (3 log P - 2 (1 - eps) log P) / 6
    for (double eps : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const auto rate = [eps](double p) { return (3.0 * std::log2(p) - 2.0 * (1.0 - eps) * std::log2(p)) / 6.0; };
        EXPECT_NEAR(dof_slope({1e4, rate(1e4)}, {1e8, rate(1e8)}), theoretical_dof_k3(eps), 1e-12);
    }
}

TEST(TheoreticalDof, KnownPoints) {
    EXPECT_DOUBLE_EQ(theoretical_dof_k3(1.0), 0.5);
    EXPECT_DOUBLE_EQ(theoretical_dof_k3(0.0), 1.0 / 6.0);
    EXPECT_NEAR(theoretical_dof_k3(0.5), 1.0 / 3.0, 1e-15);
}

TEST(OutageRate, LinearInterpolation) {
    std::vector<double> xs(100);
    std::iota(xs.begin(), xs.end(), 1.0);
    EXPECT_NEAR(outage_rate(xs, 10.0), 10.9, 1e-12);
    EXPECT_NEAR(outage_rate(xs, 50.0), 50.5, 1e-12);
    std::reverse(xs.begin(), xs.end());
    EXPECT_NEAR(outage_rate(xs, 10.0), 10.9, 1e-12);
}

TEST(OutageRate, ConstantSamples) {
    const std::vector<double> xs(37, 2.75);
    for (double p : {1.0, 10.0, 50.0, 99.0}) EXPECT_EQ(outage_rate(xs, p), 2.75);
    EXPECT_EQ(outage_rate(std::vector<double>{4.0}, 10.0), 4.0);
}

TEST(OutageRate, RejectsEmptyInputAndBadPercentile) {
    EXPECT_THROW(outage_rate(std::vector<double>{}, 10.0), std::invalid_argument);
    EXPECT_THROW(outage_rate(std::vector<double>{1.0}, 0.0), std::invalid_argument);
    EXPECT_THROW(outage_rate(std::vector<double>{1.0}, 100.0), std::invalid_argument);
}

TEST(ResidualPower, ScalesAsPToTheOneMinusEpsilon) {
    const std::vector<double> db{30, 40, 50, 60};
    for (double eps : {0.0, 0.5, 1.0}) {
        std::vector<double> x, y;
        for (double d : db) {
            const double p = db_to_linear(d);
            x.push_back(std::log2(p));
            y.push_back(std::log2(ria::testing::mean_residual_power(3, eps, p, 400, 17)));
        }
        EXPECT_NEAR(ria::testing::regression_slope(x, y), 1.0 - eps, 0.05) << "eps=" << eps;
    }
}
