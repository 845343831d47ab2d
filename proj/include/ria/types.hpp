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

#ifndef RIA_TYPES_HPP
#define RIA_TYPES_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace ria {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RowVector = Eigen::RowVectorXcd;
using Vector = Eigen::VectorXcd;

// Raised when an input has probability zero under the continuous channel
// model (e.g. a zero-norm channel estimate) and no valid construction exists.
class DegenerateInput : public std::runtime_error {
public:
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

// Linear SNR from a value in dB.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

} // namespace ria

#endif
