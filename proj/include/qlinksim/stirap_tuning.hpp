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

#ifndef QLINKSIM_STIRAP_TUNING_HPP
#define QLINKSIM_STIRAP_TUNING_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qlinksim/dynamics.hpp"
#include "qlinksim/fidelity.hpp"
#include "qlinksim/protocols.hpp"

namespace qlinksim {

struct StirapPoint {
    double pulse_width;
    double t_delay;
    double fidelity;  // |1> transfer fidelity at the end of the window
    double window;    // t1 - t0
};

/// Transfer fidelity of |1> over one STIRAP window with the given shape.
/// Peak amplitudes come from params.g_a / params.g_b.
inline StirapPoint evaluate_stirap(const LinkParams &params, double pulse_width, double t_delay,
                                   double dt = 0.0) {
    const auto sched = CouplingSchedule::stirap(params.g_a, params.g_b, pulse_width, t_delay);
    const auto [t0, t1] = default_stirap_window(sched);
    LinkTopology topo = LinkTopology::chain();
    std::vector<SiteState> init(topo.layout.size(), Ground{});
    init[topo.qubit_a] = PureQubitSpec(std::numbers::pi, 0.0);
    EvolveOptions opt;
    opt.sample_every = std::numeric_limits<std::size_t>::max();
    opt.store_states = false;
    opt.target = PureQubitSpec(std::numbers::pi, 0.0);
    const Trajectory traj =
        evolve(product_state(topo.layout, init), LinkModel{topo, params, sched},
               link_collapse_set(params, topo), t0, t1, dt > 0.0 ? dt : default_dt(params, sched),
               opt);
    return {pulse_width, t_delay, *traj.samples.back().fidelity, t1 - t0};
}

/// Grid search over (T, t_delay) maximizing final |1> transfer fidelity.
/// Ties go to the shorter window, then the smaller T.
inline StirapPoint tune_stirap(const LinkParams &params, const std::vector<double> &widths,
                               const std::vector<double> &delays, double dt = 0.0) {
    if (widths.empty() || delays.empty()) {
        throw std::invalid_argument("tune_stirap: empty grid");
    }
    std::optional<StirapPoint> best;
    for (double w : widths) {
        for (double d : delays) {
            StirapPoint pt;
            try {
                pt = evaluate_stirap(params, w, d, dt);
            } catch (const IntegrationFailure &e) {
                std::ostringstream os;
                os << "tune_stirap grid point (T = " << w << " s, t_delay = " << d
                   << " s): " << e.what();
                throw IntegrationFailure(os.str(), e.time);
            }
            const bool better =
                !best || pt.fidelity > best->fidelity ||
                (pt.fidelity == best->fidelity &&
                 (pt.window < best->window ||
                  (pt.window == best->window && pt.pulse_width < best->pulse_width)));
            if (better) {
                best = pt;
            }
        }
    }
    return *best;
}

}  // namespace qlinksim

#endif
