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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qlinksim/dynamics.hpp"
#include "qlinksim/protocols.hpp"
#include "qlinksim/stirap_tuning.hpp"
#include "test_util.hpp"

namespace qlinksim {
namespace {

using testing::kTwoPiMHz;

TEST(Stirap, PeaksAtTheirCenters) {
    const auto s = CouplingSchedule::stirap(2.0, 3.0, 1e-6, 1.2e-6);
    EXPECT_DOUBLE_EQ(s.t_center, 3e-6);
    EXPECT_DOUBLE_EQ(g_b_at(s.t_center, s), 3.0);
    EXPECT_DOUBLE_EQ(g_a_at(s.t_center + s.t_delay, s), 2.0);
    EXPECT_LT(g_a_at(s.t_center, s), g_b_at(s.t_center, s));
}

TEST(Stirap, WidthIsOneOverEHalfWidth) {
    const auto s = CouplingSchedule::stirap(1.0, 1.0, 1e-6, 1.2e-6);
    EXPECT_NEAR(g_b_at(s.t_center + 1e-6, s), std::exp(-1.0), 1e-15);
    EXPECT_NEAR(g_b_at(s.t_center - 1e-6, s), std::exp(-1.0), 1e-15);
    EXPECT_NEAR(g_a_at(s.t_center + s.t_delay - 1e-6, s), std::exp(-1.0), 1e-15);
}

TEST(Stirap, DefaultWindow) {
    const auto s = CouplingSchedule::stirap(1.0, 1.0, 1e-6, 1.5e-6);
    const auto [t0, t1] = default_stirap_window(s);
    EXPECT_DOUBLE_EQ(t0, 0.0);
    EXPECT_DOUBLE_EQ(t1, 7.5e-6);
    EXPECT_LE(g_b_at(t0, s), std::exp(-9.0) * (1.0 + 1e-12));
    EXPECT_LE(g_a_at(t1, s), std::exp(-9.0) * (1.0 + 1e-12));
    EXPECT_THROW(default_stirap_window(CouplingSchedule::constant(1.0, 1.0)),
                 std::invalid_argument);
}

TEST(Stirap, DefaultShapeFromPeakCoupling) {
    const double g0 = 100.0 * kTwoPiMHz;
    const auto s = CouplingSchedule::stirap_default(g0);
    EXPECT_DOUBLE_EQ(s.pulse_width * g0, 100.0);
    EXPECT_DOUBLE_EQ(s.t_delay, 1.2 * s.pulse_width);
    EXPECT_DOUBLE_EQ(s.t_center, 3.0 * s.pulse_width);
}

TEST(Stirap, TinyDelayStillOrdersPulses) {
    const auto s = CouplingSchedule::stirap(1.0, 1.0, 1e-6, 1e-15);
    EXPECT_GT(g_a_at(s.t_center + 2e-6, s), g_b_at(s.t_center + 2e-6, s));
    EXPECT_LT(g_a_at(s.t_center - 2e-6, s), g_b_at(s.t_center - 2e-6, s));
}

TEST(Stirap, RejectsBadShapes) {
    EXPECT_THROW(CouplingSchedule::stirap(1.0, 1.0, 0.0, 1e-6), std::invalid_argument);
    EXPECT_THROW(CouplingSchedule::stirap(1.0, 1.0, 1e-6, 0.0), std::invalid_argument);
    EXPECT_THROW(CouplingSchedule::stirap(1.0, 1.0, 1e-6, -1e-6), std::invalid_argument);
    EXPECT_THROW(CouplingSchedule::constant(-1.0, 1.0), std::invalid_argument);
}

TEST(Stirap, MirrorSymmetryForEqualAmplitudes) {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double w = u(rng) * 1e-6;
        const auto s = CouplingSchedule::stirap(1.0, 1.0, w, u(rng) * 1e-6);
        const double mid = s.t_center + s.t_delay / 2.0;
        const double x = u(rng) * 1e-6;
        EXPECT_NEAR(g_b_at(mid - x, s), g_a_at(mid + x, s), 1e-12);
    }
}

TEST(Stirap, Deterministic) {
    const auto s = CouplingSchedule::stirap(7.0, 5.0, 1.3e-6, 1.7e-6);
    for (double t = 0.0; t < 1e-5; t += 3.7e-7) {
        EXPECT_EQ(g_a_at(t, s), g_a_at(t, s));
        EXPECT_EQ(g_b_at(t, s), g_b_at(t, s));
    }
}

TEST(Constant, IsFlat) {
    const auto s = CouplingSchedule::constant(2.0, 3.0);
    for (double t : {0.0, 1e-9, 1.0}) {
        EXPECT_EQ(g_a_at(t, s), 2.0);
        EXPECT_EQ(g_b_at(t, s), 3.0);
    }
}

LinkParams closed_link(double g) {
    LinkParams p;
    p.g_a = p.g_b = g;
    return p;
}

TEST(Tune, SinglePointGridReturnsThatPoint) {
    const LinkParams p = closed_link(100.0 * kTwoPiMHz);
    const auto best = tune_stirap(p, {0.2e-6}, {0.24e-6});
    EXPECT_DOUBLE_EQ(best.pulse_width, 0.2e-6);
    EXPECT_DOUBLE_EQ(best.t_delay, 0.24e-6);
    EXPECT_DOUBLE_EQ(best.window, 3.0 * 0.2e-6 + 0.24e-6 + 3.0 * 0.2e-6);
    EXPECT_THROW(tune_stirap(p, {}, {1e-6}), std::invalid_argument);
}

TEST(Tune, AdiabaticGridReachesHighFidelity) {
    const LinkParams p = closed_link(100.0 * kTwoPiMHz);
    // Windows here span ~3e5 default steps; RK4 phase error then pushes the
    // smallest eigenvalue past the failure threshold, so halve the step.
    const double dt = 0.5 * default_dt(p, CouplingSchedule::constant(p.g_a, p.g_b));
    const auto best = tune_stirap(p, {0.5e-6, 1e-6, 2e-6}, {0.6e-6, 1.2e-6}, dt);
    EXPECT_GE(best.fidelity, 0.99);
    EXPECT_LE(best.fidelity, 1.0 + 1e-9);
}

TEST(Tune, AdiabaticTransferAvoidsMediator) {
    const LinkParams p = closed_link(100.0 * kTwoPiMHz);
    const auto topo = LinkTopology::chain();
    std::vector<SiteState> init(3, Ground{});
    init[topo.qubit_a] = PureQubitSpec(std::numbers::pi, 0.0);
    const DensityMatrix rho0 = product_state(topo.layout, init);
    EvolveOptions opt;
    opt.sample_every = 20;

    const auto stirap = CouplingSchedule::stirap_default(p.g_a);
    const auto [t0, t1] = default_stirap_window(stirap);
    const auto adiabatic = evolve(rho0, LinkModel{topo, p, stirap}, {}, t0, t1,
                                  default_dt(p, stirap), opt);
    double peak_w = 0.0;
    for (const auto &s : adiabatic.samples) {
        peak_w = std::max(peak_w, s.pop_w[0]);
    }
    EXPECT_LT(peak_w, 0.1);
    EXPECT_GT(adiabatic.samples.back().pop_b, 0.99);

    const auto constant = CouplingSchedule::constant(p.g_a, p.g_b);
    const double t_transfer = std::numbers::pi / (std::numbers::sqrt2 * p.g_a);
    const auto rabi = evolve(rho0, LinkModel{topo, p, constant}, {}, 0.0, t_transfer,
                             default_dt(p, constant), opt);
    peak_w = 0.0;
    for (const auto &s : rabi.samples) {
        peak_w = std::max(peak_w, s.pop_w[0]);
    }
    EXPECT_GT(peak_w, 0.4);
}

}  // namespace
}  // namespace qlinksim
