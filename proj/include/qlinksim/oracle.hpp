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

#ifndef QLINKSIM_ORACLE_HPP
#define QLINKSIM_ORACLE_HPP

// Reference propagation for verification: exponentiates the dense
// vectorized Liouvillian. Only meant for small, time-independent systems.

#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "qlinksim/dynamics.hpp"
#include "qlinksim/qspace.hpp"

namespace qlinksim {

inline constexpr Eigen::Index kOracleMaxSuperDim = 4096;

/// Column-stacking convention: vec(A X B) = (B^T (x) A) vec(X).
inline Matrix liouvillian(const Operator &h, const CollapseSet &collapse) {
    const auto n = h.rows();
    const Matrix id = Matrix::Identity(n, n);
    const Complex i(0.0, 1.0);
    Matrix lv = -i * (kron(id, h) - kron(h.transpose(), id));
    for (const auto &c : collapse) {
        const Matrix ldl = c.op.adjoint() * c.op;
        lv += c.rate * (kron(c.op.conjugate(), c.op) - 0.5 * kron(id, ldl) -
                        0.5 * kron(ldl.transpose(), id));
    }
    return lv;
}

/// rho(t) = unvec(exp(t L) vec(rho0)).
inline Matrix propagator_oracle(const Matrix &rho0, const Operator &h, const CollapseSet &collapse,
                                double t) {
    const auto n = rho0.rows();
    if (n * n > kOracleMaxSuperDim) {
        throw std::invalid_argument("propagator_oracle: dim^2 exceeds 4096");
    }
    if (h.rows() != n || h.cols() != n) {
        throw std::invalid_argument("propagator_oracle: dimension mismatch");
    }
    if (t == 0.0) {
        return rho0;
    }
    const Matrix prop = (t * liouvillian(h, collapse)).exp();
    const Vector v = prop * Eigen::Map<const Vector>(rho0.data(), n * n);
    return Eigen::Map<const Matrix>(v.data(), n, n);
}

}  // namespace qlinksim

#endif
