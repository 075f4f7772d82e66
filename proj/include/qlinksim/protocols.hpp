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

#ifndef QLINKSIM_PROTOCOLS_HPP
#define QLINKSIM_PROTOCOLS_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace qlinksim {

/// Qubit-mediator coupling envelopes g_A(t), g_B(t) in rad/s.
///
/// Stirap uses the counterintuitive Gaussian pair
///   g_B(t) = g0_B exp(-(t - t_center)^2 / T^2)
///   g_A(t) = g0_A exp(-(t - t_center - t_delay)^2 / T^2)
/// so the receiver-side coupling peaks first.
struct CouplingSchedule {
    enum class Kind { Constant, Stirap };

    Kind kind = Kind::Constant;
    double g0_a = 0.0;
    double g0_b = 0.0;
    double t_delay = 0.0;
    double pulse_width = 0.0;
    double t_center = 0.0;

    static CouplingSchedule constant(double g_a, double g_b) {
        CouplingSchedule s;
        s.g0_a = g_a;
        s.g0_b = g_b;
        s.validate();
        return s;
    }

    /// t_center < 0 selects the default 3T.
    static CouplingSchedule stirap(double g0_a, double g0_b, double pulse_width, double t_delay,
                                   double t_center = -1.0) {
        CouplingSchedule s;
        s.kind = Kind::Stirap;
        s.g0_a = g0_a;
        s.g0_b = g0_b;
        s.pulse_width = pulse_width;
        s.t_delay = t_delay;
        s.t_center = t_center < 0.0 ? 3.0 * pulse_width : t_center;
        s.validate();
        return s;
    }

    /// Adiabatic default: g0 T = 100 and t_delay = 1.2 T.
    static CouplingSchedule stirap_default(double g0) {
        const double width = 100.0 / g0;
        return stirap(g0, g0, width, 1.2 * width);
    }

    void validate() const {
        if (!(g0_a >= 0.0 && g0_b >= 0.0)) {
            throw std::invalid_argument("coupling amplitudes must be non-negative");
        }
        if (kind == Kind::Stirap) {
            if (!(pulse_width > 0.0) || !std::isfinite(pulse_width)) {
                throw std::invalid_argument("STIRAP pulse width must be positive");
            }
            if (!(t_delay > 0.0) || !std::isfinite(t_delay)) {
                throw std::invalid_argument("STIRAP delay must be positive (g_B peaks first)");
            }
            if (!std::isfinite(t_center)) {
                throw std::invalid_argument("STIRAP center must be finite");
            }
        }
    }
};

inline double g_a_at(double t, const CouplingSchedule &s) {
    if (s.kind == CouplingSchedule::Kind::Constant) {
        return s.g0_a;
    }
    const double x = (t - s.t_center - s.t_delay) / s.pulse_width;
    return s.g0_a * std::exp(-x * x);
}

inline double g_b_at(double t, const CouplingSchedule &s) {
    if (s.kind == CouplingSchedule::Kind::Constant) {
        return s.g0_b;
    }
    const double x = (t - s.t_center) / s.pulse_width;
    return s.g0_b * std::exp(-x * x);
}

/// [t_center - 3T, t_center + t_delay + 3T], start clamped at 0. Both
/// envelopes are below e^-9 of their peak at the ends.
inline std::pair<double, double> default_stirap_window(const CouplingSchedule &s) {
    if (s.kind != CouplingSchedule::Kind::Stirap) {
        throw std::invalid_argument("default_stirap_window needs a STIRAP schedule");
    }
    const double t0 = std::max(0.0, s.t_center - 3.0 * s.pulse_width);
    const double t1 = s.t_center + s.t_delay + 3.0 * s.pulse_width;
    return {t0, t1};
}

}  // namespace qlinksim

#endif
