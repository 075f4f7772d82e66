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

// qlinksim <scenario> --config <path> [--out <dir>] [--preset <name>] [--seed <u64>]
// qlinksim --list-presets

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qlinksim/config.hpp"
#include "qlinksim/runner.hpp"

namespace {

void print_presets(std::ostream &os) {
    os << "name,g_2pi_MHz,kappa_2pi_MHz,gamma_2pi_MHz\n";
    for (const auto &p : qlinksim::kPresets) {
        os << p.name << ',' << qlinksim::format_double(p.g) << ','
           << qlinksim::format_double(p.kappa) << ',' << qlinksim::format_double(p.gamma) << '\n';
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum link state-transfer simulator"};
    std::string scenario;
    std::string config_path;
    std::optional<std::string> out_dir;
    std::optional<std::string> preset;
    std::optional<std::uint64_t> seed;
    bool list_presets = false;

    std::string scenarios;
    for (const auto &[k, n] : qlinksim::kScenarioNames) {
        scenarios += (scenarios.empty() ? "" : ", ") + std::string(n);
    }
    app.add_option("scenario", scenario, "One of: " + scenarios);
    app.add_option("--config", config_path, "Scenario config file (key = value)");
    app.add_option("--out", out_dir, "Output directory (overrides out_path)");
    app.add_option("--preset", preset, "Parameter preset (overrides the config's preset)");
    app.add_option("--seed", seed, "Random seed (overrides the config's seed)");
    app.add_flag("--list-presets", list_presets, "Print the parameter presets and exit");
    CLI11_PARSE(app, argc, argv);

    if (list_presets) {
        print_presets(std::cout);
        return 0;
    }
    if (scenario.empty()) {
        std::cerr << "qlinksim: missing scenario (" << scenarios << ")\n";
        return 1;
    }

    qlinksim::ScenarioConfig config;
    try {
        if (!config_path.empty()) {
            config = qlinksim::load_config(config_path, preset);
        } else {
            config = qlinksim::parse_config("", "<defaults>", preset);
        }
        config.scenario = qlinksim::parse_scenario(scenario);
        if (seed) {
            config.seed = *seed;
        }
        if (out_dir) {
            config.out_path = *out_dir;
        }
        config.validate();
    } catch (const std::exception &e) {
        std::cerr << "qlinksim: " << e.what() << "\n";
        return 1;
    }

    std::cerr << "qlinksim: running " << scenario << " -> " << config.out_path << "\n";
    qlinksim::RunResult result;
    try {
        result = qlinksim::run_scenario(config, config.out_path);
    } catch (const std::exception &e) {
        std::cerr << "qlinksim: " << e.what() << "\n";
        return 1;
    }
    if (result.exit_code != 0) {
        std::cerr << "qlinksim: run failed: " << result.message << "\n";
        return result.exit_code;
    }
    for (const auto &[name, body] : result.artifacts) {
        std::cerr << "  wrote " << name << "\n";
    }
    if (auto it = result.artifacts.find("summary.csv"); it != result.artifacts.end()) {
        std::cout << it->second;
    }
    return 0;
}
