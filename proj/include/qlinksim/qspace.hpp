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

#ifndef QLINKSIM_QSPACE_HPP
#define QLINKSIM_QSPACE_HPP

// Tensor-product Hilbert space algebra over an ordered list of sites
// (two-level qubits and truncated bosonic modes).
//
// Basis ordering: site 0 is the most significant factor, so for the layout
// (A, W, B) the basis index of |n_A, n_W, n_B> is n_A*d_W*d_B + n_W*d_B + n_B.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qlinksim/errors.hpp"

namespace qlinksim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense operator on a site or on the full composite space.
using Operator = Matrix;

inline constexpr double kHermiticityTolerance = 1e-9;
inline constexpr double kTraceTolerance = 1e-8;
inline constexpr double kPositivityTolerance = 1e-7;
inline constexpr std::size_t kMaxModeDim = 8;

struct Site {
    enum class Kind { Qubit, Mode };

    Kind kind = Kind::Qubit;
    std::size_t dim = 2;

    static Site qubit() {
        return {Kind::Qubit, 2};
    }
    static Site mode(std::size_t dim = 2) {
        return {Kind::Mode, dim};
    }
    bool operator==(const Site &) const = default;
};

/// Ordered, immutable list of sites defining the composite space.
class SystemLayout {
   public:
    explicit SystemLayout(std::vector<Site> sites) : sites_(std::move(sites)) {
        if (sites_.size() < 2) {
            throw std::invalid_argument("SystemLayout needs at least 2 sites");
        }
        total_dim_ = 1;
        for (const auto &s : sites_) {
            if (s.kind == Site::Kind::Qubit && s.dim != 2) {
                throw std::invalid_argument("qubit sites have dimension 2");
            }
            if (s.kind == Site::Kind::Mode && (s.dim < 2 || s.dim > kMaxModeDim)) {
                throw std::invalid_argument(
                    "mode truncation must be in [2, " + std::to_string(kMaxModeDim) + "], got " +
                    std::to_string(s.dim));
            }
            total_dim_ *= s.dim;
        }
    }

    std::size_t size() const {
        return sites_.size();
    }
    const Site &site(std::size_t i) const {
        return sites_.at(i);
    }
    std::size_t dim(std::size_t i) const {
        return sites_.at(i).dim;
    }
    std::size_t total_dim() const {
        return total_dim_;
    }
    std::span<const Site> sites() const {
        return sites_;
    }

    /// Basis-index stride of site i (product of the dimensions to its right).
    std::size_t stride(std::size_t i) const {
        std::size_t s = 1;
        for (std::size_t k = i + 1; k < sites_.size(); ++k) {
            s *= sites_[k].dim;
        }
        return s;
    }

    /// Occupation of site i in the composite basis state `index`.
    std::size_t digit(std::size_t index, std::size_t i) const {
        return (index / stride(i)) % sites_[i].dim;
    }

   private:
    std::vector<Site> sites_;
    std::size_t total_dim_ = 1;
};

inline double hermiticity_error(const Matrix &m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline double min_hermitian_eigenvalue(const Matrix &m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

/// Hermitian, unit-trace, positive semidefinite matrix. Construction checks
/// the invariants; `unchecked` skips them for intermediate results.
class DensityMatrix {
   public:
    explicit DensityMatrix(Matrix m) : m_(std::move(m)) {
        validate();
    }

    static DensityMatrix unchecked(Matrix m) {
        DensityMatrix d;
        d.m_ = std::move(m);
        return d;
    }

    const Matrix &matrix() const {
        return m_;
    }
    std::size_t dim() const {
        return static_cast<std::size_t>(m_.rows());
    }
    Complex operator()(std::size_t r, std::size_t c) const {
        return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

    double trace() const {
        return m_.trace().real();
    }
    double purity() const {
        // Tr[rho^2] = sum |rho_ij|^2 for Hermitian rho.
        return m_.cwiseAbs2().sum();
    }
    double hermiticity_error() const {
        return qlinksim::hermiticity_error(m_);
    }
    double min_eigenvalue() const {
        return min_hermitian_eigenvalue(Matrix(0.5 * (m_ + m_.adjoint())));
    }

    void validate() const {
        if (m_.rows() != m_.cols() || m_.rows() == 0) {
            throw InvalidState("density matrix must be square and non-empty");
        }
        if (double h = hermiticity_error(); !(h <= kHermiticityTolerance)) {
            throw InvalidState("density matrix not Hermitian (max |rho - rho^dag| = " +
                               std::to_string(h) + ")");
        }
        if (double t = trace(); !(std::abs(t - 1.0) <= kTraceTolerance)) {
            throw InvalidState("density matrix trace " + std::to_string(t) + " != 1");
        }
        if (double e = min_eigenvalue(); !(e >= -kPositivityTolerance)) {
            throw InvalidState("density matrix has eigenvalue " + std::to_string(e));
        }
    }

   private:
    DensityMatrix() = default;
    Matrix m_;
};

/// Pure single-qubit state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct PureQubitSpec {
    double theta = 0.0;
    double phi = 0.0;

    PureQubitSpec() = default;
    PureQubitSpec(double theta, double phi) : theta(theta), phi(phi) {
        if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
            throw std::invalid_argument("theta must lie in [0, pi]");
        }
        if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
            throw std::invalid_argument("phi must lie in [0, 2pi)");
        }
    }

    static PureQubitSpec from_degrees(double theta_deg, double phi_deg) {
        const double theta = theta_deg == 180.0 ? std::numbers::pi : theta_deg * std::numbers::pi / 180.0;
        return {theta, phi_deg * std::numbers::pi / 180.0};
    }

    Eigen::Vector2cd ket() const {
        return {Complex(std::cos(theta / 2.0), 0.0),
                std::polar(1.0, phi) * std::sin(theta / 2.0)};
    }
    Matrix density() const {
        Eigen::Vector2cd k = ket();
        return k * k.adjoint();
    }
};

enum class LocalOp { Annihilate, Create, SigmaPlus, SigmaMinus, Number, Identity };

/// Standard single-site operator. Basis order (|0>, |1>, ...); sigma_plus
/// maps |0> to |1>, and a[n-1, n] = sqrt(n).
inline Operator local_operator(LocalOp kind, std::size_t dim) {
    if (dim < 2) {
        throw std::invalid_argument("local operator dimension must be >= 2");
    }
    const auto n = static_cast<Eigen::Index>(dim);
    Operator a = Operator::Zero(n, n);
    for (Eigen::Index k = 1; k < n; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    switch (kind) {
        case LocalOp::Annihilate:
            return a;
        case LocalOp::Create:
            return a.adjoint();
        case LocalOp::Number:
            return a.adjoint() * a;
        case LocalOp::Identity:
            return Operator::Identity(n, n);
        case LocalOp::SigmaPlus:
        case LocalOp::SigmaMinus:
            if (dim != 2) {
                throw std::invalid_argument("sigma operators require dim == 2");
            }
            return kind == LocalOp::SigmaMinus ? a : Operator(a.adjoint());
    }
    throw std::invalid_argument("unknown local operator");
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// I (x) ... (x) op (x) ... (x) I with op at `site`.
inline Operator embed(const Operator &op, std::size_t site, const SystemLayout &layout) {
    if (site >= layout.size()) {
        throw std::invalid_argument("site index out of range");
    }
    const auto d = static_cast<Eigen::Index>(layout.dim(site));
    if (op.rows() != d || op.cols() != d) {
        throw std::invalid_argument("operator dimension " + std::to_string(op.rows()) +
                                    " does not match site " + std::to_string(site) +
                                    " dimension " + std::to_string(d));
    }
    const auto left = static_cast<Eigen::Index>(layout.total_dim() / (layout.dim(site) * layout.stride(site)));
    const auto right = static_cast<Eigen::Index>(layout.stride(site));
    return kron(kron(Matrix::Identity(left, left), op), Matrix::Identity(right, right));
}

/// Initial state of one site: vacuum/ground, a pure qubit, or an explicit
/// density matrix of the site's dimension.
struct Ground {};
using SiteState = std::variant<Ground, PureQubitSpec, Matrix>;

inline DensityMatrix product_state(const SystemLayout &layout, std::span<const SiteState> states) {
    if (states.size() != layout.size()) {
        throw std::invalid_argument("product_state: got " + std::to_string(states.size()) +
                                    " site states for " + std::to_string(layout.size()) + " sites");
    }
    Matrix rho = Matrix::Ones(1, 1);
    for (std::size_t i = 0; i < layout.size(); ++i) {
        const auto d = static_cast<Eigen::Index>(layout.dim(i));
        Matrix local = Matrix::Zero(d, d);
        if (std::holds_alternative<Ground>(states[i])) {
            local(0, 0) = 1.0;
        } else if (const auto *q = std::get_if<PureQubitSpec>(&states[i])) {
            if (d != 2) {
                throw std::invalid_argument("pure qubit spec given for a non-qubit site");
            }
            local = q->density();
        } else {
            local = std::get<Matrix>(states[i]);
            if (local.rows() != d || local.cols() != d) {
                throw std::invalid_argument("site density matrix has wrong dimension");
            }
            DensityMatrix(local).validate();
        }
        rho = kron(rho, local);
    }
    return DensityMatrix(std::move(rho));
}

/// Reduced state over `keep` (any order given; result follows layout order).
inline DensityMatrix partial_trace(const DensityMatrix &rho, std::vector<std::size_t> keep,
                                   const SystemLayout &layout) {
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep set is empty");
    }
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end() || keep.back() >= layout.size()) {
        throw std::invalid_argument("partial_trace: keep set has duplicates or out-of-range sites");
    }
    if (rho.dim() != layout.total_dim()) {
        throw std::invalid_argument("partial_trace: state dimension does not match layout");
    }
    std::vector<bool> kept(layout.size(), false);
    std::size_t kept_dim = 1;
    for (auto k : keep) {
        kept[k] = true;
        kept_dim *= layout.dim(k);
    }

    // Map each full index to (kept index, traced index).
    const std::size_t n = layout.total_dim();
    std::vector<std::size_t> kidx(n), tidx(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        std::size_t k = 0, t = 0;
        for (std::size_t s = 0; s < layout.size(); ++s) {
            const std::size_t dgt = layout.digit(idx, s);
            if (kept[s]) {
                k = k * layout.dim(s) + dgt;
            } else {
                t = t * layout.dim(s) + dgt;
            }
        }
        kidx[idx] = k;
        tidx[idx] = t;
    }

    const auto &m = rho.matrix();
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(kept_dim), static_cast<Eigen::Index>(kept_dim));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (tidx[i] == tidx[j]) {
                out(static_cast<Eigen::Index>(kidx[i]), static_cast<Eigen::Index>(kidx[j])) +=
                    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
        }
    }
    return DensityMatrix::unchecked(std::move(out));
}

/// Von Neumann entropy in bits. Eigenvalues within the positivity tolerance
/// of the physical range are clamped to [0, 1].
inline double von_neumann_entropy(const Matrix &rho) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(0.5 * (rho + rho.adjoint())),
                                             Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (double lam : es.eigenvalues()) {
        if (lam < -kPositivityTolerance) {
            throw InvalidState("entropy of a non-positive matrix (eigenvalue " +
                               std::to_string(lam) + ")");
        }
        lam = std::clamp(lam, 0.0, 1.0);
        if (lam > 0.0) {
            s -= lam * std::log2(lam);
        }
    }
    return s;
}

inline double von_neumann_entropy(const DensityMatrix &rho) {
    return von_neumann_entropy(rho.matrix());
}

}  // namespace qlinksim

#endif
