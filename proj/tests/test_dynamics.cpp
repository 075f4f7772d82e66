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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qlinksim/dynamics.hpp"
#include "qlinksim/errors.hpp"
#include "qlinksim/oracle.hpp"
#include "test_util.hpp"

namespace qlinksim {
namespace {

using testing::kTwoPiMHz;
using testing::max_abs_diff;
using testing::random_density;

DensityMatrix excited_sender(const LinkTopology &topo) {
    std::vector<SiteState> s(topo.layout.size(), Ground{});
    s[topo.qubit_a] = PureQubitSpec(std::numbers::pi, 0.0);
    return product_state(topo.layout, s);
}

DensityMatrix sender_in(const LinkTopology &topo, const PureQubitSpec &q) {
    std::vector<SiteState> s(topo.layout.size(), Ground{});
    s[topo.qubit_a] = q;
    return product_state(topo.layout, s);
}

TEST(Hamiltonian, DecoupledIsDiagonalEnergy) {
    const auto topo = LinkTopology::chain();
    LinkParams p;
    p.omega_q = 3.0;
    p.omega_w = 3.0;
    const Operator h = hamiltonian_at(0.0, p, CouplingSchedule::constant(0.0, 0.0), topo);
    for (Eigen::Index i = 0; i < 8; ++i) {
        std::size_t excitations = 0;
        for (std::size_t s = 0; s < 3; ++s) {
            excitations += topo.layout.digit(static_cast<std::size_t>(i), s);
        }
        EXPECT_DOUBLE_EQ(h(i, i).real(), 3.0 * static_cast<double>(excitations));
    }
    EXPECT_LT(max_abs_diff(h, Matrix(h.diagonal().asDiagonal())), 1e-15);
}

TEST(Hamiltonian, ExchangeElementFollowsSchedule) {
    const auto topo = LinkTopology::chain();
    const double g0 = 100.0 * kTwoPiMHz;
    const auto s = CouplingSchedule::stirap(g0, g0, 1e-6, 1.2e-6);
    const double t = 3.5e-6;
    const Operator h = hamiltonian_at(t, LinkParams{}, s, topo);
    // <1,0,0| H |0,1,0> = g_A(t); <0,0,1| H |0,1,0> = g_B(t).
    EXPECT_NEAR(h(4, 2).real(), g_a_at(t, s), 1e-6);
    EXPECT_NEAR(h(1, 2).real(), g_b_at(t, s), 1e-6);
    EXPECT_NEAR(h(0, 0).real(), 0.0, 1e-15);
}

TEST(Hamiltonian, ExactlyHermitian) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.0, 1e9);
    const auto topo = LinkTopology::chain(2, 3);
    for (int trial = 0; trial < 10; ++trial) {
        LinkParams p{u(rng), u(rng), 0.0, 0.0, 0.0, 0.0, 0.0, u(rng)};
        const auto s = CouplingSchedule::stirap(u(rng), u(rng), 1e-6, 1e-6);
        const Operator h = hamiltonian_at(u(rng) * 1e-14, p, s, topo);
        EXPECT_EQ(hermiticity_error(h), 0.0);
    }
}

TEST(Hamiltonian, RejectsNonFiniteTime) {
    const auto topo = LinkTopology::chain();
    EXPECT_THROW(hamiltonian_at(std::nan(""), LinkParams{}, CouplingSchedule{}, topo),
                 std::invalid_argument);
}

TEST(LindbladRhs, GroundStateIsStationary) {
    const auto topo = LinkTopology::chain();
    LinkParams p{0.0, 0.0, 1e8, 1e8, 1e6, 2e6, 3e6, 0.0};
    std::vector<SiteState> s(3, Ground{});
    const Matrix rho = product_state(topo.layout, s).matrix();
    const Matrix d = lindblad_rhs(rho, hamiltonian_at(0.0, p, CouplingSchedule::constant(1e8, 1e8),
                                                      topo),
                                  link_collapse_set(p, topo));
    EXPECT_LT(d.cwiseAbs().maxCoeff(), 1e-6);
}

TEST(LindbladRhs, SingleQubitDecayByHand) {
    // rho = [[p0, c], [c*, p1]], L = sigma^-: d p1 = -g p1, d c = -g c / 2.
    Matrix rho(2, 2);
    rho << 0.3, Complex(0.2, 0.1), Complex(0.2, -0.1), 0.7;
    const double gamma = 5.0;
    const Matrix d = lindblad_rhs(rho, Matrix::Zero(2, 2),
                                  {{local_operator(LocalOp::SigmaMinus, 2), gamma}});
    EXPECT_NEAR(d(1, 1).real(), -gamma * 0.7, 1e-14);
    EXPECT_NEAR(d(0, 0).real(), gamma * 0.7, 1e-14);
    EXPECT_NEAR(std::abs(d(0, 1) - (-0.5 * gamma) * rho(0, 1)), 0.0, 1e-14);
}

TEST(LindbladRhs, TracelessAndHermitianPreserving) {
    std::mt19937_64 rng(43);
    const auto topo = LinkTopology::chain(1, 3);
    LinkParams p{1e7, 2e7, 3e7, 4e7, 5e6, 6e6, 7e6, 0.0};
    const Operator h = hamiltonian_at(0.0, p, CouplingSchedule::constant(p.g_a, p.g_b), topo);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix d = lindblad_rhs(random_density(rng, 12), h, link_collapse_set(p, topo));
        EXPECT_LT(std::abs(d.trace()), 1e-6);
        EXPECT_LT(hermiticity_error(d), 1e-6);
    }
}

TEST(LindbladGenerator, AgreesWithDenseForm) {
    std::mt19937_64 rng(47);
    const auto topo = LinkTopology::chain(2, 3);
    LinkParams p{1e7, 2e7, 3e7, 4e7, 5e6, 6e6, 7e6, 8e6};
    const auto s = CouplingSchedule::stirap(p.g_a, p.g_b, 1e-6, 1.3e-6);
    const CollapseSet c = link_collapse_set(p, topo);
    LindbladGenerator gen(p, s, topo, c);
    for (double t : {0.0, 2.5e-6, 4e-6}) {
        const Matrix rho = random_density(rng, static_cast<Eigen::Index>(topo.dim()));
        const Matrix dense = lindblad_rhs(rho, hamiltonian_at(t, p, s, topo), c);
        EXPECT_LT(max_abs_diff(gen(t, rho), dense), 1e-6 * dense.cwiseAbs().maxCoeff());
    }
}

TEST(LindbladGenerator, RejectsMismatchedCollapse) {
    const auto topo = LinkTopology::chain();
    EXPECT_THROW(LindbladGenerator(LinkParams{}, CouplingSchedule{}, topo,
                                   {{Matrix::Identity(2, 2), 1.0}}),
                 std::invalid_argument);
}

TEST(Evolve, ResonantRabiTransfer) {
    const auto topo = LinkTopology::chain();
    const double g = 100.0 * kTwoPiMHz;
    LinkParams p;
    p.g_a = p.g_b = g;
    const double t = std::numbers::pi / (std::numbers::sqrt2 * g);
    LinkModel model{topo, p, CouplingSchedule::constant(g, g)};
    const auto traj = evolve(excited_sender(topo), model, link_collapse_set(p, topo), 0.0, t,
                             default_dt(p, model.schedule));
    EXPECT_NEAR(traj.samples.back().pop_b, 1.0, 1e-6);
    EXPECT_NEAR(traj.samples.back().pop_a, 0.0, 1e-6);
    EXPECT_DOUBLE_EQ(traj.times.front(), 0.0);
    EXPECT_DOUBLE_EQ(traj.times.back(), t);
}

TEST(Evolve, PhaseCorrectedTransferOfSuperposition) {
    const auto topo = LinkTopology::chain();
    const double g = 100.0 * kTwoPiMHz;
    LinkParams p;
    p.g_a = p.g_b = g;
    const double t = std::numbers::pi / (std::numbers::sqrt2 * g);
    const PureQubitSpec plus(std::numbers::pi / 2, 0.0);
    EvolveOptions opt;
    opt.target = plus;
    LinkModel model{topo, p, CouplingSchedule::constant(g, g)};
    const auto traj = evolve(sender_in(topo, plus), model, link_collapse_set(p, topo), 0.0, t,
                             default_dt(p, model.schedule), opt);
    EXPECT_NEAR(*traj.samples.back().fidelity, 1.0, 1e-6);
    opt.phase_correction = false;
    const auto raw = evolve(sender_in(topo, plus), model, link_collapse_set(p, topo), 0.0, t,
                            default_dt(p, model.schedule), opt);
    EXPECT_NEAR(*raw.samples.back().fidelity, 0.0, 1e-6);
}

TEST(Evolve, QubitDecayMatchesExponential) {
    const auto topo = LinkTopology::chain();
    LinkParams p;
    p.gamma_a = 6.0 * kTwoPiMHz;
    LinkModel model{topo, p, CouplingSchedule::constant(0.0, 0.0)};
    const double t1 = 100e-9;
    const auto traj = evolve(excited_sender(topo), model, link_collapse_set(p, topo), 0.0, t1,
                             1e-10);
    for (std::size_t i = 0; i < traj.size(); ++i) {
        EXPECT_NEAR(traj.samples[i].pop_a, std::exp(-p.gamma_a * traj.times[i]), 1e-9);
    }
}

TEST(Evolve, NullGeneratorKeepsStateExactly) {
    const auto topo = LinkTopology::chain();
    std::mt19937_64 rng(53);
    const DensityMatrix rho0(random_density(rng, 8));
    LinkModel model{topo, LinkParams{}, CouplingSchedule::constant(0.0, 0.0)};
    const auto traj = evolve(rho0, model, {}, 0.0, 1e-6, 1e-8);
    for (const auto &s : traj.states) {
        EXPECT_LT(max_abs_diff(s, rho0.matrix()), 1e-15);
    }
}

TEST(Evolve, MatchesPropagatorOracle) {
    const auto topo = LinkTopology::chain();
    LinkParams p = {0.0, 0.0, 5.8 * kTwoPiMHz, 5.8 * kTwoPiMHz, 0.34 * kTwoPiMHz,
                    6.0 * kTwoPiMHz, 6.0 * kTwoPiMHz, 0.0};
    const auto sched = CouplingSchedule::constant(p.g_a, p.g_b);
    const CollapseSet c = link_collapse_set(p, topo);
    const DensityMatrix rho0 = sender_in(topo, PureQubitSpec(1.1, 0.7));
    const double t = 40e-9;
    const auto traj = evolve(rho0, LinkModel{topo, p, sched}, c, 0.0, t, 1e-11);
    const Matrix ref = propagator_oracle(rho0.matrix(), hamiltonian_at(0.0, p, sched, topo), c, t);
    EXPECT_LT(max_abs_diff(traj.final_state(), ref), 1e-8);
}

TEST(Evolve, HalvingDtConverges) {
    const auto topo = LinkTopology::chain();
    LinkParams p = {0.0, 0.0, 100.0 * kTwoPiMHz, 100.0 * kTwoPiMHz, 6.0 * kTwoPiMHz,
                    65.0 * kTwoPiMHz, 65.0 * kTwoPiMHz, 0.0};
    LinkModel model{topo, p, CouplingSchedule::constant(p.g_a, p.g_b)};
    const double dt = default_dt(p, model.schedule);
    const auto a = evolve(excited_sender(topo), model, link_collapse_set(p, topo), 0.0, 20e-9, dt);
    const auto b =
        evolve(excited_sender(topo), model, link_collapse_set(p, topo), 0.0, 20e-9, dt / 2);
    EXPECT_LT(max_abs_diff(a.final_state(), b.final_state()), 1e-7);
}

TEST(Evolve, ClosedSystemKeepsPurityAndExcitations) {
    const auto topo = LinkTopology::chain(2, 3);
    LinkParams p;
    p.g_a = p.g_b = 20.0 * kTwoPiMHz;
    p.hopping = 15.0 * kTwoPiMHz;
    EvolveOptions opt;
    opt.sample_every = 10;
    LinkModel model{topo, p, CouplingSchedule::constant(p.g_a, p.g_b)};
    const auto traj = evolve(excited_sender(topo), model, link_collapse_set(p, topo), 0.0, 100e-9,
                             default_dt(p, model.schedule), opt);
    for (const auto &s : traj.samples) {
        EXPECT_NEAR(s.purity, 1.0, 1e-6);
        double total = s.pop_a + s.pop_b;
        for (double w : s.pop_w) {
            total += w;
        }
        EXPECT_NEAR(total, 1.0, 1e-8);
    }
}

TEST(Evolve, SampleGridAndStoredStates) {
    const auto topo = LinkTopology::chain();
    LinkModel model{topo, LinkParams{}, CouplingSchedule::constant(0.0, 0.0)};
    EvolveOptions opt;
    opt.sample_every = 3;
    const auto traj = evolve(excited_sender(topo), model, {}, 0.0, 1e-8, 1e-9, opt);
    // Steps 3, 6, 9 and the final step 10, plus t0.
    ASSERT_EQ(traj.size(), 5u);
    EXPECT_EQ(traj.states.size(), 5u);
    EXPECT_DOUBLE_EQ(traj.times.back(), 1e-8);
    opt.store_states = false;
    const auto lean = evolve(excited_sender(topo), model, {}, 0.0, 1e-8, 1e-9, opt);
    EXPECT_EQ(lean.size(), 5u);
    EXPECT_EQ(lean.states.size(), 1u);
}

TEST(Evolve, RejectsBadArguments) {
    const auto topo = LinkTopology::chain();
    LinkModel model{topo, LinkParams{}, CouplingSchedule{}};
    const auto rho = excited_sender(topo);
    EXPECT_THROW(evolve(rho, model, {}, 0.0, 1e-6, 0.0), std::invalid_argument);
    EXPECT_THROW(evolve(rho, model, {}, 1e-6, 1e-6, 1e-9), std::invalid_argument);
    LinkModel bad = model;
    bad.params.kappa = -1.0;
    EXPECT_THROW(evolve(rho, bad, {}, 0.0, 1e-6, 1e-9), std::invalid_argument);
    const auto other = LinkTopology::chain(2);
    EXPECT_THROW(evolve(excited_sender(other), model, {}, 0.0, 1e-6, 1e-9),
                 std::invalid_argument);
}

TEST(Evolve, UnstableStepReportsFailureTime) {
    const auto topo = LinkTopology::chain();
    LinkParams p;
    p.gamma_a = 1e10;
    LinkModel model{topo, p, CouplingSchedule::constant(0.0, 0.0)};
    try {
        evolve(excited_sender(topo), model, link_collapse_set(p, topo), 0.0, 1e-7, 1e-9);
        FAIL() << "expected IntegrationFailure";
    } catch (const IntegrationFailure &e) {
        EXPECT_GT(e.time, 0.0);
        EXPECT_LE(e.time, 1e-7);
    }
}

TEST(DefaultDt, ResolvesFastestRate) {
    LinkParams p;
    EXPECT_DOUBLE_EQ(default_dt(p, CouplingSchedule{}), 1e-9);
    p.gamma_b = 100.0 * kTwoPiMHz;
    EXPECT_NEAR(default_dt(p, CouplingSchedule{}), 1.0 / (200.0 * 100e6), 1e-20);
}

TEST(PropagatorOracle, ZeroTimeAndSizeLimit) {
    std::mt19937_64 rng(59);
    const Matrix rho = random_density(rng, 4);
    EXPECT_EQ(propagator_oracle(rho, Matrix::Zero(4, 4), {}, 0.0), rho);
    const Matrix big = Matrix::Identity(128, 128) / 128.0;
    EXPECT_THROW(propagator_oracle(big, Matrix::Zero(128, 128), {}, 1.0), std::invalid_argument);
}

TEST(PropagatorOracle, PhotonDecay) {
    Matrix rho = Matrix::Zero(3, 3);
    rho(2, 2) = 1.0;
    const double kappa = 2.0;
    const Matrix a = local_operator(LocalOp::Annihilate, 3);
    const Matrix out = propagator_oracle(rho, Matrix::Zero(3, 3), {{a, kappa}}, 0.4);
    const Matrix n = local_operator(LocalOp::Number, 3);
    EXPECT_NEAR((n * out).trace().real(), 2.0 * std::exp(-kappa * 0.4), 1e-12);
}

}  // namespace
}  // namespace qlinksim
