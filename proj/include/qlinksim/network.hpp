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

#ifndef QLINKSIM_NETWORK_HPP
#define QLINKSIM_NETWORK_HPP

// Multi-hop chains and communication-media loss models.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iostream>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qlinksim/dynamics.hpp"
#include "qlinksim/fidelity.hpp"
#include "qlinksim/qspace.hpp"

namespace qlinksim {

inline constexpr double kSpeedOfLight = 299792458.0;
/// Loss cap: survival probabilities below 1e-300 are treated as 1e-300.
inline constexpr double kMaxFiberLossNepers = 300.0 * std::numbers::ln10;

struct MediumModel {
    enum class Kind { Cavity, Fiber, CavityPlusFiber };

    Kind kind = Kind::Cavity;
    double base_kappa = 0.0;          // 1/s
    double length = 0.0;              // m
    double cavity_loss_per_m = 0.0;   // 1/(s m)
    double fiber_attenuation = 0.2;   // dB/km
    double fiber_refractive_index = 1.468;
    double fiber_interface_loss = 0.0;  // dB, cavity-fiber coupling, once per link

    void validate() const {
        for (double v : {base_kappa, length, cavity_loss_per_m, fiber_attenuation,
                         fiber_interface_loss}) {
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw std::invalid_argument("medium parameters must be finite and non-negative");
            }
        }
        if (!(fiber_refractive_index >= 1.0)) {
            throw std::invalid_argument("fiber refractive index must be >= 1");
        }
    }
};

inline std::string_view medium_name(MediumModel::Kind k) {
    switch (k) {
        case MediumModel::Kind::Cavity:
            return "cavity";
        case MediumModel::Kind::Fiber:
            return "fiber";
        case MediumModel::Kind::CavityPlusFiber:
            return "cavity+fiber";
    }
    return "?";
}

inline MediumModel::Kind parse_medium_kind(std::string_view s) {
    if (s == "cavity") {
        return MediumModel::Kind::Cavity;
    }
    if (s == "fiber") {
        return MediumModel::Kind::Fiber;
    }
    if (s == "cavity+fiber") {
        return MediumModel::Kind::CavityPlusFiber;
    }
    throw std::invalid_argument("unknown medium kind '" + std::string(s) +
                                "' (expected cavity, fiber or cavity+fiber)");
}

/// End-to-end fiber survival probability eta = 10^(-dB/10), as -ln(eta).
inline double fiber_loss_nepers(const MediumModel &m) {
    const double db = m.fiber_interface_loss + m.fiber_attenuation * m.length / 1000.0;
    const double nepers = db * std::numbers::ln10 / 10.0;
    if (nepers > kMaxFiberLossNepers) {
        std::clog << "qlinksim: warning: fiber survival below 1e-300 (" << db
                  << " dB); loss saturated\n";
        return kMaxFiberLossNepers;
    }
    return nepers;
}

/// Photon loss rate of the mediator for a protocol of the given duration.
/// Fiber loss is spread uniformly over the protocol, so that
/// exp(-kappa * duration) equals the fiber's end-to-end survival.
inline double effective_kappa(const MediumModel &m, double protocol_duration) {
    m.validate();
    if (!(protocol_duration > 0.0)) {
        throw std::invalid_argument("effective_kappa: protocol duration must be positive");
    }
    switch (m.kind) {
        case MediumModel::Kind::Cavity:
            return m.base_kappa + m.cavity_loss_per_m * m.length;
        case MediumModel::Kind::Fiber:
            return fiber_loss_nepers(m) / protocol_duration;
        case MediumModel::Kind::CavityPlusFiber:
            return m.base_kappa + fiber_loss_nepers(m) / protocol_duration;
    }
    throw std::invalid_argument("unknown medium kind");
}

/// One-way time of flight through the fiber section (0 for cavity-only).
inline double propagation_delay(const MediumModel &m) {
    if (m.kind == MediumModel::Kind::Cavity) {
        return 0.0;
    }
    return m.fiber_refractive_index * m.length / kSpeedOfLight;
}

struct LinkSpec {
    LinkParams params;
    CouplingSchedule schedule;
    /// When set, overrides params.kappa with effective_kappa(medium, hop_time).
    std::optional<MediumModel> medium;
    double hop_time = 20e-6;
    double dt = 0.0;  // 0 selects default_dt
    std::size_t sample_every = 0;  // 0 selects ~1000 samples per hop
    std::size_t n_mediators = 1;
    std::size_t mode_dim = 2;
    bool phase_correction = true;

    void validate() const {
        params.validate();
        schedule.validate();
        if (!(hop_time > 0.0)) {
            throw std::invalid_argument("hop_time must be positive");
        }
        if (schedule.kind == CouplingSchedule::Kind::Stirap) {
            const auto [t0, t1] = default_stirap_window(schedule);
            if (hop_time < t1 - t0) {
                throw std::invalid_argument("hop_time is shorter than the STIRAP window");
            }
        }
        if (medium) {
            medium->validate();
        }
    }

    LinkParams resolved_params() const {
        LinkParams p = params;
        if (medium) {
            p.kappa = effective_kappa(*medium, hop_time);
        }
        return p;
    }

    double resolved_dt() const {
        return dt > 0.0 ? dt : default_dt(resolved_params(), schedule);
    }
};

struct HopResult {
    Matrix output;
    Trajectory trajectory;
};

/// Sends `input_qubit` from A to B over one link and returns B's state
/// (receiver-corrected) after hop_time. Source qubit and mediators are
/// discarded at handoff.
inline HopResult run_hop(const Matrix &input_qubit, const LinkSpec &link,
                         const std::optional<PureQubitSpec> &target) {
    link.validate();
    DensityMatrix(input_qubit).validate();
    LinkTopology topo = LinkTopology::chain(link.n_mediators, link.mode_dim);
    std::vector<SiteState> init(topo.layout.size(), Ground{});
    init[topo.qubit_a] = input_qubit;
    const DensityMatrix rho0 = product_state(topo.layout, init);

    const LinkParams params = link.resolved_params();
    const double dt = link.resolved_dt();
    EvolveOptions opt;
    opt.target = target;
    opt.phase_correction = link.phase_correction;
    opt.store_states = false;
    if (link.sample_every > 0) {
        opt.sample_every = link.sample_every;
    } else {
        const auto steps = static_cast<std::size_t>(std::ceil(link.hop_time / dt - 1e-9));
        opt.sample_every = std::max<std::size_t>(1, steps / 1000);
    }
    const CollapseSet collapse = link_collapse_set(params, topo);
    LinkModel model{topo, params, link.schedule};
    Trajectory traj = evolve(rho0, model, collapse, 0.0, link.hop_time, dt, opt);
    Matrix out = received_qubit(traj.final_state(), topo, link.phase_correction);
    out = 0.5 * (out + out.adjoint());
    return {std::move(out), std::move(traj)};
}

struct HopRecord {
    std::size_t hop_index;  // 1-based node index of the receiver
    Matrix output;
    double fidelity;
    Trajectory trajectory;
};

struct ChainResult {
    std::vector<HopRecord> per_hop;
};

/// Sequential composition: the output of hop k is the input of hop k + 1;
/// every hop is scored against the original target.
inline ChainResult run_chain(const PureQubitSpec &initial, const std::vector<LinkSpec> &links) {
    if (links.empty()) {
        throw std::invalid_argument("run_chain needs at least one link");
    }
    ChainResult result;
    Matrix state = initial.density();
    for (std::size_t k = 0; k < links.size(); ++k) {
        HopResult hop;
        try {
            hop = run_hop(state, links[k], initial);
        } catch (const IntegrationFailure &e) {
            throw IntegrationFailure("hop " + std::to_string(k + 1) + ": " + e.what(), e.time);
        }
        const double f = transfer_fidelity(hop.output, initial);
        state = hop.output;
        result.per_hop.push_back({k + 1, std::move(hop.output), f, std::move(hop.trajectory)});
    }
    return result;
}

struct SweepRow {
    MediumModel::Kind kind;
    double length;  // m
    double fidelity;
    std::optional<std::string> error;
};

/// For every (kind, length) pair, swaps the medium into `link_template`,
/// recomputes the effective loss and records end-of-hop fidelity. Rows are
/// ordered by kind (as given), then length (as given). A failing point is
/// recorded with its error and the sweep continues.
inline std::vector<SweepRow> distance_sweep(const LinkSpec &link_template,
                                            const MediumModel &medium_template,
                                            const std::vector<MediumModel::Kind> &kinds,
                                            const std::vector<double> &lengths,
                                            const PureQubitSpec &target) {
    if (lengths.empty() || kinds.empty()) {
        throw std::invalid_argument("distance_sweep needs lengths and medium kinds");
    }
    for (double l : lengths) {
        if (!(l >= 0.0)) {
            throw std::invalid_argument("distance_sweep lengths must be non-negative");
        }
    }
    std::vector<SweepRow> rows;
    for (auto kind : kinds) {
        for (double l : lengths) {
            LinkSpec link = link_template;
            MediumModel m = medium_template;
            m.kind = kind;
            m.length = l;
            link.medium = m;
            try {
                const HopResult hop = run_hop(target.density(), link, target);
                rows.push_back({kind, l, transfer_fidelity(hop.output, target), std::nullopt});
            } catch (const std::exception &e) {
                rows.push_back({kind, l, std::nan(""), std::string(e.what())});
            }
        }
    }
    return rows;
}

}  // namespace qlinksim

#endif
