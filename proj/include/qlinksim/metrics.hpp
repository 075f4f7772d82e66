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

#ifndef QLINKSIM_METRICS_HPP
#define QLINKSIM_METRICS_HPP

// Transfer-quality metrics. Channel-level quantities (coherent information,
// entanglement fidelity) use an idle reference qubit R that starts in a Bell
// pair with qubit A; the link acts on A only, so the evolved (R, B) state is
// the Choi state of the link channel.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>

#include "qlinksim/dynamics.hpp"
#include "qlinksim/fidelity.hpp"
#include "qlinksim/qspace.hpp"

namespace qlinksim {

/// (|00> + |11>) / sqrt(2) on two qubits.
inline Vector bell_phi_plus() {
    Vector v = Vector::Zero(4);
    v(0) = v(3) = 1.0 / std::numbers::sqrt2;
    return v;
}

struct ChannelProbe {
    LinkTopology topology;
    DensityMatrix joint_initial;
    std::optional<DensityMatrix> evolved_joint;
    bool phase_correction = true;

    /// Reduced (R, B) state of the evolved joint state, receiver-corrected.
    Matrix reference_output() const {
        const Matrix rb = partial_trace(joint(), {*topology.reference, topology.qubit_b},
                                        topology.layout)
                              .matrix();
        if (!phase_correction) {
            return rb;
        }
        static const SystemLayout two_qubits({Site::qubit(), Site::qubit()});
        return apply_qubit_phase(rb, two_qubits, 1, receiver_correction_phase(topology));
    }

    Matrix output() const {
        return partial_trace(joint(), {topology.qubit_b}, topology.layout).matrix();
    }

   private:
    const DensityMatrix &joint() const {
        if (!evolved_joint) {
            throw std::invalid_argument("channel probe has not been evolved");
        }
        return *evolved_joint;
    }
};

/// Layout (R, A, W..., B) with R and A in |Phi+>, mediators in vacuum, B in |0>.
inline ChannelProbe make_channel_probe(std::size_t n_mediators = 1, std::size_t mode_dim = 2) {
    LinkTopology topo = LinkTopology::chain(n_mediators, mode_dim, true);
    const auto &lay = topo.layout;
    Vector psi = Vector::Zero(static_cast<Eigen::Index>(lay.total_dim()));
    const auto a_stride = lay.stride(topo.qubit_a);
    const auto r_stride = lay.stride(*topo.reference);
    psi(0) = 1.0 / std::numbers::sqrt2;
    psi(static_cast<Eigen::Index>(r_stride + a_stride)) = 1.0 / std::numbers::sqrt2;
    DensityMatrix rho(psi * psi.adjoint());
    return ChannelProbe{std::move(topo), std::move(rho), std::nullopt, true};
}

/// Runs the probe through the link for [0, t_final].
inline ChannelProbe run_channel_probe(ChannelProbe probe, const LinkParams &params,
                                      const CouplingSchedule &schedule, double t_final, double dt) {
    LinkModel model{probe.topology, params, schedule};
    EvolveOptions opt;
    opt.sample_every = std::numeric_limits<std::size_t>::max();
    opt.store_states = false;
    const Trajectory traj = evolve(probe.joint_initial, model,
                                   link_collapse_set(params, probe.topology), 0.0, t_final, dt, opt);
    probe.evolved_joint = DensityMatrix::unchecked(traj.final_state());
    return probe;
}

/// I = S(rho_B') - S(rho_RB') in bits.
inline double coherent_information(const ChannelProbe &probe) {
    return von_neumann_entropy(probe.output()) - von_neumann_entropy(probe.reference_output());
}

/// <Phi+| rho_RB' |Phi+>.
inline double entanglement_fidelity(const ChannelProbe &probe) {
    const Vector phi = bell_phi_plus();
    return (phi.adjoint() * probe.reference_output() * phi)(0, 0).real();
}

/// Haar-random pure qubit: theta = arccos(1 - 2u), phi uniform.
template <class Rng>
PureQubitSpec haar_random_qubit(Rng &rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double u = unit(rng);
    double phi = 2.0 * std::numbers::pi * unit(rng);
    if (phi >= 2.0 * std::numbers::pi) {
        phi = 0.0;
    }
    return {std::acos(std::clamp(1.0 - 2.0 * u, -1.0, 1.0)), phi};
}

/// Maps the sender's qubit state to the receiver's qubit state.
using QubitChannel = std::function<Matrix(const Matrix &)>;

/// Mean transfer fidelity over `n_samples` Haar-random inputs, each sent
/// through `link` end to end.
inline double average_fidelity(const QubitChannel &link, std::size_t n_samples, std::uint64_t seed) {
    if (n_samples == 0) {
        throw std::invalid_argument("average_fidelity needs at least one sample");
    }
    std::mt19937_64 rng(seed);
    double sum = 0.0;
    for (std::size_t k = 0; k < n_samples; ++k) {
        const PureQubitSpec input = haar_random_qubit(rng);
        sum += transfer_fidelity(link(input.density()), input);
    }
    return sum / static_cast<double>(n_samples);
}

/// Earliest sampled time after which the recorded fidelity stays within
/// `tolerance` of its final value.
inline double stabilization_time(const Trajectory &traj, double tolerance = 0.01) {
    if (traj.samples.empty() || !traj.samples.back().fidelity) {
        throw std::invalid_argument("stabilization_time needs a trajectory with fidelity samples");
    }
    const double final_f = *traj.samples.back().fidelity;
    std::size_t k = traj.samples.size();
    while (k > 0 && std::abs(*traj.samples[k - 1].fidelity - final_f) < tolerance) {
        --k;
    }
    return k == traj.samples.size() ? traj.times.back() : traj.times[k];
}

}  // namespace qlinksim

#endif
