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

#ifndef QLINKSIM_DYNAMICS_HPP
#define QLINKSIM_DYNAMICS_HPP

// Qubit-mediator-qubit link dynamics: RWA Hamiltonian, Lindblad generator
// and fixed-step RK4 integration of the master equation. Units: hbar = 1,
// frequencies in rad/s, rates in 1/s, times in s.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#if defined(__SSE__) || defined(_M_X64)
#include <xmmintrin.h>
#define QLINKSIM_HAVE_MXCSR 1
#endif

#include "qlinksim/errors.hpp"
#include "qlinksim/fidelity.hpp"
#include "qlinksim/protocols.hpp"
#include "qlinksim/qspace.hpp"

namespace qlinksim {

/// Physical rates of one link. omega_q = omega_w = 0 is the resonant
/// rotating frame.
struct LinkParams {
    double omega_q = 0.0;
    double omega_w = 0.0;
    double g_a = 0.0;
    double g_b = 0.0;
    double kappa = 0.0;
    double gamma_a = 0.0;
    double gamma_b = 0.0;
    /// Nearest-neighbour coupling between consecutive mediators (only used
    /// with more than one mediator).
    double hopping = 0.0;

    void validate() const {
        for (double v : {omega_q, omega_w, g_a, g_b, kappa, gamma_a, gamma_b, hopping}) {
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw std::invalid_argument("link parameters must be finite and non-negative");
            }
        }
    }
};

/// Site roles inside a link layout: [reference R], qubit A, mediators, qubit B.
struct LinkTopology {
    SystemLayout layout;
    std::size_t qubit_a;
    std::vector<std::size_t> mediators;
    std::size_t qubit_b;
    std::optional<std::size_t> reference;

    static LinkTopology chain(std::size_t n_mediators = 1, std::size_t mode_dim = 2,
                              bool with_reference = false) {
        if (n_mediators < 1) {
            throw std::invalid_argument("a link needs at least one mediator");
        }
        std::vector<Site> sites;
        std::optional<std::size_t> ref;
        if (with_reference) {
            ref = sites.size();
            sites.push_back(Site::qubit());
        }
        const std::size_t a = sites.size();
        sites.push_back(Site::qubit());
        std::vector<std::size_t> meds;
        for (std::size_t k = 0; k < n_mediators; ++k) {
            meds.push_back(sites.size());
            sites.push_back(Site::mode(mode_dim));
        }
        const std::size_t b = sites.size();
        sites.push_back(Site::qubit());
        return LinkTopology{SystemLayout(std::move(sites)), a, std::move(meds), b, ref};
    }

    std::size_t dim() const {
        return layout.total_dim();
    }
};

struct Collapse {
    Operator op;
    double rate;
};

/// Collapse operators are unit-normalized; the rate multiplies the whole
/// dissipator rate * (L rho L^dag - {L^dag L, rho} / 2).
using CollapseSet = std::vector<Collapse>;

/// sigma_A^-, sigma_B^- and a_k with rates gamma_a, gamma_b, kappa.
inline CollapseSet link_collapse_set(const LinkParams &p, const LinkTopology &topo) {
    const auto &lay = topo.layout;
    CollapseSet c;
    c.push_back({embed(local_operator(LocalOp::SigmaMinus, 2), topo.qubit_a, lay), p.gamma_a});
    c.push_back({embed(local_operator(LocalOp::SigmaMinus, 2), topo.qubit_b, lay), p.gamma_b});
    for (auto m : topo.mediators) {
        c.push_back({embed(local_operator(LocalOp::Annihilate, lay.dim(m)), m, lay), p.kappa});
    }
    return c;
}

namespace detail {

inline Operator exchange(const LinkTopology &topo, std::size_t qubit, std::size_t mode) {
    const auto &lay = topo.layout;
    Operator sp_a = embed(local_operator(LocalOp::SigmaPlus, 2), qubit, lay) *
                    embed(local_operator(LocalOp::Annihilate, lay.dim(mode)), mode, lay);
    return sp_a + sp_a.adjoint();
}

/// Time-independent part: detunings, mediator energies and hopping.
inline Operator static_hamiltonian(const LinkParams &p, const LinkTopology &topo) {
    const auto &lay = topo.layout;
    const auto n = static_cast<Eigen::Index>(lay.total_dim());
    Operator h = Operator::Zero(n, n);
    if (p.omega_q != 0.0) {
        h += p.omega_q * (embed(local_operator(LocalOp::Number, 2), topo.qubit_a, lay) +
                          embed(local_operator(LocalOp::Number, 2), topo.qubit_b, lay));
    }
    if (p.omega_w != 0.0) {
        for (auto m : topo.mediators) {
            h += p.omega_w * embed(local_operator(LocalOp::Number, lay.dim(m)), m, lay);
        }
    }
    if (p.hopping != 0.0) {
        for (std::size_t k = 0; k + 1 < topo.mediators.size(); ++k) {
            const auto m1 = topo.mediators[k];
            const auto m2 = topo.mediators[k + 1];
            Operator hop = embed(local_operator(LocalOp::Create, lay.dim(m1)), m1, lay) *
                           embed(local_operator(LocalOp::Annihilate, lay.dim(m2)), m2, lay);
            h += p.hopping * (hop + hop.adjoint());
        }
    }
    return h;
}

inline void check_time(double t) {
    if (!std::isfinite(t)) {
        throw std::invalid_argument("coupling schedule is undefined at non-finite time");
    }
}

}  // namespace detail

/// H(t) = w_q (n_A + n_B) + w_w sum_k n_k + g_A(t)(s_A^+ a_1 + h.c.)
///        + g_B(t)(s_B^+ a_last + h.c.) + J sum_k (a_k^dag a_{k+1} + h.c.)
inline Operator hamiltonian_at(double t, const LinkParams &p, const CouplingSchedule &s,
                               const LinkTopology &topo) {
    detail::check_time(t);
    return detail::static_hamiltonian(p, topo) +
           g_a_at(t, s) * detail::exchange(topo, topo.qubit_a, topo.mediators.front()) +
           g_b_at(t, s) * detail::exchange(topo, topo.qubit_b, topo.mediators.back());
}

/// Dense reference form of the master-equation right-hand side.
inline Matrix lindblad_rhs(const Matrix &rho, const Operator &h, const CollapseSet &collapse) {
    const auto n = rho.rows();
    if (rho.cols() != n || h.rows() != n || h.cols() != n) {
        throw std::invalid_argument("lindblad_rhs: dimension mismatch");
    }
    const Complex minus_i(0.0, -1.0);
    Matrix out = minus_i * (h * rho - rho * h);
    for (const auto &c : collapse) {
        if (c.op.rows() != n || c.op.cols() != n) {
            throw std::invalid_argument("lindblad_rhs: collapse operator dimension mismatch");
        }
        const Matrix ldl = c.op.adjoint() * c.op;
        out += c.rate * (c.op * rho * c.op.adjoint() - 0.5 * (ldl * rho + rho * ldl));
    }
    return out;
}

/// Precomputed sparse form of the link generator for repeated evaluation.
/// Writes d rho/dt = -i (K rho - rho K^dag) + sum_j rate_j L_j rho L_j^dag
/// with K = H - (i/2) sum_j rate_j L_j^dag L_j. The input must be Hermitian.
class LindbladGenerator {
   public:
    using Sparse = Eigen::SparseMatrix<Complex>;

    LindbladGenerator(const LinkParams &p, CouplingSchedule schedule, const LinkTopology &topo,
                      const CollapseSet &collapse)
        : schedule_(std::move(schedule)) {
        const auto n = static_cast<Eigen::Index>(topo.dim());
        Operator k0 = detail::static_hamiltonian(p, topo);
        for (const auto &c : collapse) {
            if (c.op.rows() != n || c.op.cols() != n) {
                throw std::invalid_argument("collapse operator dimension mismatch");
            }
            if (c.rate < 0.0) {
                throw std::invalid_argument("collapse rates must be non-negative");
            }
            if (c.rate == 0.0) {
                continue;
            }
            k0 -= Complex(0.0, 0.5 * c.rate) * (c.op.adjoint() * c.op);
            jumps_.push_back(c.op.sparseView());
            rates_.push_back(c.rate);
        }
        k0_ = k0.sparseView();
        couple_a_ = detail::exchange(topo, topo.qubit_a, topo.mediators.front()).sparseView();
        couple_b_ = detail::exchange(topo, topo.qubit_b, topo.mediators.back()).sparseView();
        t_.resize(n, n);
        u_.resize(n, n);
    }

    void apply(double t, const Matrix &rho, Matrix &out) {
        const double ga = g_a_at(t, schedule_);
        const double gb = g_b_at(t, schedule_);
        t_.noalias() = k0_ * rho;
        if (ga != 0.0) {
            u_.noalias() = couple_a_ * rho;
            t_ += ga * u_;
        }
        if (gb != 0.0) {
            u_.noalias() = couple_b_ * rho;
            t_ += gb * u_;
        }
        out = Complex(0.0, -1.0) * (t_ - t_.adjoint());
        for (std::size_t j = 0; j < jumps_.size(); ++j) {
            u_.noalias() = jumps_[j] * rho;
            t_.noalias() = jumps_[j] * u_.adjoint();
            out += rates_[j] * t_;
        }
    }

    Matrix operator()(double t, const Matrix &rho) {
        Matrix out(rho.rows(), rho.cols());
        apply(t, rho, out);
        return out;
    }

   private:
    CouplingSchedule schedule_;
    Sparse k0_, couple_a_, couple_b_;
    std::vector<Sparse> jumps_;
    std::vector<double> rates_;
    Matrix t_, u_;
};

/// Phase the ideal resonant link imprints on |1_B> relative to |0_B>. With
/// real couplings and d = n_mediators + 1 hops from A to B, the transferred
/// amplitude carries (-i)^d; the receiver undoes it with diag(1, i^d).
inline Complex receiver_correction_phase(const LinkTopology &topo) {
    const std::size_t d = topo.mediators.size() + 1;
    static constexpr Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return powers[d % 4];
}

/// Applies diag(1, u) on `site` (a qubit) to the full state: rho_ij -> u_i rho_ij conj(u_j).
inline Matrix apply_qubit_phase(const Matrix &rho, const SystemLayout &layout, std::size_t site,
                                Complex u) {
    Matrix out = rho;
    const auto n = rho.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex ui = layout.digit(static_cast<std::size_t>(i), site) ? u : Complex(1.0);
        for (Eigen::Index j = 0; j < n; ++j) {
            const Complex uj = layout.digit(static_cast<std::size_t>(j), site) ? u : Complex(1.0);
            out(i, j) = ui * rho(i, j) * std::conj(uj);
        }
    }
    return out;
}

/// Reduced state of qubit B, optionally with the receiver phase correction.
inline Matrix received_qubit(const Matrix &rho, const LinkTopology &topo, bool phase_correction) {
    Matrix b = partial_trace(DensityMatrix::unchecked(rho), {topo.qubit_b}, topo.layout).matrix();
    if (phase_correction) {
        const Complex u = receiver_correction_phase(topo);
        b(0, 1) *= std::conj(u);
        b(1, 0) *= u;
    }
    return b;
}

/// Everything evolve needs to know about one link.
struct LinkModel {
    LinkTopology topology;
    LinkParams params;
    CouplingSchedule schedule;
};

struct Sample {
    double pop_a = 0.0;
    std::vector<double> pop_w;
    double pop_b = 0.0;
    double trace = 1.0;
    double purity = 1.0;
    std::optional<double> fidelity;
    double min_eigenvalue = 0.0;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Matrix> states;
    std::vector<Sample> samples;

    std::size_t size() const {
        return times.size();
    }
    const Matrix &final_state() const {
        return states.back();
    }
};

struct EvolveOptions {
    std::size_t sample_every = 1;
    /// Record transfer fidelity of qubit B against this target.
    std::optional<PureQubitSpec> target;
    bool phase_correction = true;
    /// Keep density matrices in the trajectory (observables are always kept).
    bool store_states = true;
};

/// Default step: min(1 ns, 2 pi / (200 * fastest rate)).
inline double default_dt(const LinkParams &p, const CouplingSchedule &s) {
    const double fastest = std::max({s.g0_a, s.g0_b, p.kappa, p.gamma_a, p.gamma_b,
                                     std::abs(p.omega_q - p.omega_w), p.omega_q, p.omega_w,
                                     p.hopping});
    if (fastest <= 0.0) {
        return 1e-9;
    }
    return std::min(1e-9, 2.0 * std::numbers::pi / (200.0 * fastest));
}

namespace detail {

inline Sample observe(const Matrix &rho, const LinkTopology &topo, const EvolveOptions &opt) {
    const auto &lay = topo.layout;
    Sample s;
    s.pop_w.assign(topo.mediators.size(), 0.0);
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        const double p = rho(i, i).real();
        const auto idx = static_cast<std::size_t>(i);
        s.pop_a += p * static_cast<double>(lay.digit(idx, topo.qubit_a));
        s.pop_b += p * static_cast<double>(lay.digit(idx, topo.qubit_b));
        for (std::size_t k = 0; k < topo.mediators.size(); ++k) {
            s.pop_w[k] += p * static_cast<double>(lay.digit(idx, topo.mediators[k]));
        }
    }
    s.trace = rho.trace().real();
    s.purity = rho.cwiseAbs2().sum();
    s.min_eigenvalue = min_hermitian_eigenvalue(rho);
    if (opt.target) {
        s.fidelity = transfer_fidelity(received_qubit(rho, topo, opt.phase_correction), *opt.target);
    }
    return s;
}

/// Decaying states underflow into subnormals, which are slow on x86.
/// Flushes them to zero for the guard's lifetime and restores the mode.
class FlushSubnormals {
   public:
#ifdef QLINKSIM_HAVE_MXCSR
    FlushSubnormals() : saved_(_mm_getcsr()) {
        _mm_setcsr(saved_ | 0x8040u);  // FTZ | DAZ
    }
    ~FlushSubnormals() {
        _mm_setcsr(saved_);
    }

   private:
    unsigned int saved_;
#else
    FlushSubnormals() = default;
#endif
    FlushSubnormals(const FlushSubnormals &) = delete;
    FlushSubnormals &operator=(const FlushSubnormals &) = delete;
};

inline void check_sample(const Sample &s, double t) {
    constexpr double kTraceDrift = 1e-6;
    constexpr double kNegativeEigen = -1e-5;
    if (!std::isfinite(s.trace) || std::abs(s.trace - 1.0) > kTraceDrift) {
        std::ostringstream os;
        os << "trace drifted to " << s.trace << " at t = " << t << " s";
        throw IntegrationFailure(os.str(), t);
    }
    if (!(s.min_eigenvalue >= kNegativeEigen)) {
        std::ostringstream os;
        os << "state lost positivity (min eigenvalue " << s.min_eigenvalue << ") at t = " << t
           << " s";
        throw IntegrationFailure(os.str(), t);
    }
}

}  // namespace detail

/// Integrates the master equation over [t0, t1] with classical RK4. The
/// span is divided into ceil((t1 - t0) / dt) equal steps (so the step used
/// is at most dt). States are re-symmetrized after every step; samples are
/// taken at t0, every `sample_every` steps, and at t1.
inline Trajectory evolve(const DensityMatrix &rho0, const LinkModel &model,
                         const CollapseSet &collapse, double t0, double t1, double dt,
                         const EvolveOptions &opt = {}) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("evolve: dt must be positive");
    }
    if (!(t1 > t0) || !std::isfinite(t1) || !std::isfinite(t0)) {
        throw std::invalid_argument("evolve: need t1 > t0");
    }
    if (opt.sample_every == 0) {
        throw std::invalid_argument("evolve: sample_every must be >= 1");
    }
    if (rho0.dim() != model.topology.dim()) {
        throw std::invalid_argument("evolve: initial state dimension does not match the layout");
    }
    model.params.validate();
    model.schedule.validate();
    rho0.validate();

    const detail::FlushSubnormals ftz;
    LindbladGenerator gen(model.params, model.schedule, model.topology, collapse);
    const double span = t1 - t0;
    const auto n_steps = static_cast<std::size_t>(std::ceil(span / dt - 1e-9));
    const double h = span / static_cast<double>(n_steps);

    Trajectory traj;
    auto record = [&](double t, const Matrix &rho) {
        Sample s = detail::observe(rho, model.topology, opt);
        detail::check_sample(s, t);
        traj.times.push_back(t);
        traj.samples.push_back(std::move(s));
        if (opt.store_states) {
            traj.states.push_back(rho);
        }
    };

    Matrix rho = 0.5 * (rho0.matrix() + rho0.matrix().adjoint());
    const auto n = rho.rows();
    Matrix k1(n, n), k2(n, n), k3(n, n), k4(n, n), stage(n, n);
    record(t0, rho);
    for (std::size_t step = 0; step < n_steps; ++step) {
        const double t = t0 + static_cast<double>(step) * h;
        gen.apply(t, rho, k1);
        stage = rho + (0.5 * h) * k1;
        gen.apply(t + 0.5 * h, stage, k2);
        stage = rho + (0.5 * h) * k2;
        gen.apply(t + 0.5 * h, stage, k3);
        stage = rho + h * k3;
        gen.apply(t + h, stage, k4);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        stage = 0.5 * (rho + rho.adjoint());
        rho = stage;

        const std::size_t done = step + 1;
        if (done % opt.sample_every == 0 || done == n_steps) {
            record(done == n_steps ? t1 : t0 + static_cast<double>(done) * h, rho);
        }
    }
    if (!opt.store_states) {
        traj.states.push_back(rho);
    }
    return traj;
}

}  // namespace qlinksim

#endif
