// Copyright 2026 The qlinksim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLINKSIM_FIDELITY_HPP
#define QLINKSIM_FIDELITY_HPP

#include <algorithm>
#include <stdexcept>

#include "qlinksim/qspace.hpp"

namespace qlinksim {

/// <psi|rho|psi> for the pure target psi. Not clamped; numerical noise can
/// push it marginally outside [0, 1].
inline double transfer_fidelity(const Matrix &rho_qubit, const PureQubitSpec &target) {
    if (rho_qubit.rows() != 2 || rho_qubit.cols() != 2) {
        throw std::invalid_argument("transfer_fidelity expects a 2x2 state");
    }
    const Eigen::Vector2cd psi = target.ket();
    return (psi.adjoint() * rho_qubit * psi)(0, 0).real();
}

inline double transfer_fidelity(const DensityMatrix &rho_qubit, const PureQubitSpec &target) {
    return transfer_fidelity(rho_qubit.matrix(), target);
}

/// Clamp for reporting.
inline double clamp_fidelity(double f) {
    return std::clamp(f, 0.0, 1.0);
}

}  // namespace qlinksim

#endif
