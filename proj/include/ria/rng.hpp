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

#ifndef RIA_RNG_HPP
#define RIA_RNG_HPP

#include "ria/types.hpp"

#include <cstdint>
#include <random>

namespace ria {

/// Generator used for every random draw in the library: 64-bit Mersenne
/// Twister (std::mt19937_64). Gaussian samples come from
/// std::normal_distribution, so streams are bit-exact across runs of one
/// build but not across standard library implementations.
using Rng = std::mt19937_64;

/// Stream tags used when deriving per-trial generator states.
enum class Stream : std::uint64_t {
    Channels = 0x43484e4cULL,        // "CHNL"
    EstimationError = 0x43454552ULL, // "CEER"
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Generator state for one (master seed, trial, stream) triple. The value
/// depends only on its arguments, so trials can run in any order or on any
/// thread and still see the same numbers.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial, Stream stream) {
    return mix64(mix64(mix64(master) ^ trial) ^ static_cast<std::uint64_t>(stream));
}

inline Rng make_rng(std::uint64_t master, std::uint64_t trial, Stream stream) {
    return Rng(derive_seed(master, trial, stream));
}

/// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
inline Complex complex_gaussian(Rng& rng, double variance = 1.0) {
    std::normal_distribution<double> normal(0.0, std::sqrt(variance / 2.0));
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

inline RowVector complex_gaussian_row(Rng& rng, int length, double variance = 1.0) {
    RowVector v(length);
    for (int k = 0; k < length; ++k) v(k) = complex_gaussian(rng, variance);
    return v;
}

} // namespace ria

#endif
