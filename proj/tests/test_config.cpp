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
#include <string>

#include "qlinksim/config.hpp"

namespace qlinksim {
namespace {

TEST(Presets, CaptionValues) {
    const LinkParams fig4 = preset_params("fig4");
    EXPECT_NEAR(fig4.g_a, 5.8 * kTwoPiMHz, 1e-6);
    EXPECT_NEAR(fig4.g_b, 5.8 * kTwoPiMHz, 1e-6);
    EXPECT_NEAR(fig4.kappa, 0.34 * kTwoPiMHz, 1e-6);
    EXPECT_NEAR(fig4.gamma_a, 6.0 * kTwoPiMHz, 1e-6);

    const LinkParams red = preset_params("fig5-red");
    EXPECT_NEAR(red.g_a, 100.0 * kTwoPiMHz, 1e-6);
    EXPECT_NEAR(red.kappa, 6.0 * kTwoPiMHz, 1e-6);
    EXPECT_NEAR(red.gamma_b, 65.0 * kTwoPiMHz, 1e-6);
    EXPECT_THROW(preset_params("fig9"), ConfigError);
}

TEST(Presets, AllListedPresetsResolve) {
    for (const auto &p : kPresets) {
        const ScenarioConfig c = parse_config("preset = " + std::string(p.name));
        EXPECT_EQ(c.g_A, p.g);
        EXPECT_EQ(c.kappa, p.kappa);
        EXPECT_EQ(c.gamma_B, p.gamma);
    }
}

TEST(Parse, DefaultsAndComments) {
    const ScenarioConfig c = parse_config("# nothing\n\n  g_A = 2.5  # inline\n");
    EXPECT_EQ(c.g_A, 2.5);
    EXPECT_EQ(c.theta_deg, 90.0);
    EXPECT_EQ(c.hops, 7u);
    EXPECT_EQ(c.resolved_protocol(), "constant");
}

TEST(Parse, ExplicitKeysOverridePresetInAnyOrder) {
    const ScenarioConfig c = parse_config("kappa = 1.5\npreset = fig4\n");
    EXPECT_EQ(c.kappa, 1.5);
    EXPECT_EQ(c.g_A, 5.8);
}

TEST(Parse, PresetOverrideWins) {
    const ScenarioConfig c = parse_config("preset = fig4\n", "<t>", "fig5-red");
    EXPECT_EQ(c.g_A, 100.0);
    EXPECT_EQ(*c.preset, "fig5-red");
}

TEST(Parse, RejectsUnknownKeyWithLocation) {
    try {
        parse_config("g_A = 1\nfrobnicate = 2\n", "cfg.txt");
        FAIL() << "expected ConfigError";
    } catch (const ConfigError &e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("cfg.txt:2"), std::string::npos) << msg;
        EXPECT_NE(msg.find("frobnicate"), std::string::npos) << msg;
    }
}

TEST(Parse, RejectsMalformedInput) {
    EXPECT_THROW(parse_config("g_A 1\n"), ConfigError);
    EXPECT_THROW(parse_config("g_A = 1\ng_A = 2\n"), ConfigError);
    EXPECT_THROW(parse_config("g_A = fast\n"), ConfigError);
    EXPECT_THROW(parse_config("kappa = -1\n"), ConfigError);
    EXPECT_THROW(parse_config("protocol = pulsed\n"), ConfigError);
    EXPECT_THROW(parse_config("preset = fig9\n"), ConfigError);
    EXPECT_THROW(parse_config("media = cavity, vacuum\n"), ConfigError);
    EXPECT_THROW(parse_config("theta_deg = 181\n"), ConfigError);
    EXPECT_THROW(parse_config("mode_dim = 9\n"), ConfigError);
    EXPECT_THROW(parse_config("g_A = inf\n"), ConfigError);
    EXPECT_THROW(parse_config("scenario = teleport\n"), ConfigError);
}

TEST(Load, MissingFileIsAConfigError) {
    EXPECT_THROW(load_config("/nonexistent/qlinksim.cfg"), ConfigError);
}

TEST(Serialize, RoundTrips) {
    ScenarioConfig c = parse_config(
        "scenario = sweep-distance\npreset = fig4\nprotocol = stirap\npulse_width_us = 0.3\n"
        "lengths_km = 0, 0.1, 3\nmedia = fiber\nbase_kappa = 0.5\nseed = 99\n"
        "width_grid_us = 1, 2\nt_final_us = 0.07\nphase_correction = false\n");
    const std::string text = serialize_config(c);
    const ScenarioConfig back = parse_config(text);
    EXPECT_EQ(serialize_config(back), text);
    EXPECT_EQ(back.scenario, Scenario::SweepDistance);
    EXPECT_EQ(back.lengths_km, c.lengths_km);
    EXPECT_EQ(*back.base_kappa, 0.5);
    EXPECT_FALSE(back.phase_correction);
    EXPECT_EQ(back.seed, 99u);
}

TEST(Serialize, ShortestRoundTripNumbers) {
    for (double x : {0.1, 1.0 / 3.0, 6.02214076e23, 2.2250738585072014e-308, 123456.789}) {
        EXPECT_EQ(std::stod(format_double(x)), x);
    }
}

TEST(Scenario, NamesRoundTrip) {
    for (const auto &[s, name] : kScenarioNames) {
        EXPECT_EQ(parse_scenario(name), s);
        EXPECT_EQ(scenario_name(s), name);
    }
}

TEST(Accessors, SiUnitsAndDefaults) {
    ScenarioConfig c = parse_config("preset = fig5-red\nscenario = chain\n");
    EXPECT_EQ(c.resolved_protocol(), "stirap");
    EXPECT_DOUBLE_EQ(c.t_final(), 20e-6);
    const CouplingSchedule s = c.schedule();
    EXPECT_EQ(s.kind, CouplingSchedule::Kind::Stirap);
    EXPECT_NEAR(s.pulse_width * c.link_params().g_a, 100.0, 1e-9);
    EXPECT_NEAR(c.transfer_time(), std::numbers::pi / (std::numbers::sqrt2 * 100.0 * kTwoPiMHz),
                1e-20);
    const MediumModel m = c.medium();
    EXPECT_NEAR(m.base_kappa, 6.0 * kTwoPiMHz, 1e-6);
    EXPECT_EQ(c.width_grid().size(), 3u);
}

}  // namespace
}  // namespace qlinksim
