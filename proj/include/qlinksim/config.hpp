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

#ifndef QLINKSIM_CONFIG_HPP
#define QLINKSIM_CONFIG_HPP

// Scenario configuration: a strict `key = value` text format ('#' starts a
// comment, lists are comma separated). Rates are given in units of
// 2 pi MHz, times in us (dt in ns); conversion to SI happens in one place,
// the SI accessors of ScenarioConfig.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <tuple>
#include <vector>

#include "qlinksim/dynamics.hpp"
#include "qlinksim/network.hpp"
#include "qlinksim/protocols.hpp"
#include "qlinksim/qspace.hpp"

namespace qlinksim {

/// One unit of "x 2 pi MHz" in rad/s.
inline constexpr double kTwoPiMHz = 2.0 * std::numbers::pi * 1e6;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Caption parameter sets, in 2 pi MHz.
struct ParamPreset {
    std::string_view name;
    double g;
    double kappa;
    double gamma;
};

inline constexpr std::array<ParamPreset, 6> kPresets{{
    {"fig4", 5.8, 0.34, 6.0},
    {"fig5-red", 100.0, 6.0, 65.0},
    {"fig5-blue", 38.0, 1.3, 96.0},
    {"fig5-yellow", 98.0, 253.0, 6.0},
    {"fig5-green", 21.0, 10.0, 30.0},
    {"fig6a", 100.0, 6.0, 65.0},
}};

inline const ParamPreset &find_preset(std::string_view name) {
    for (const auto &p : kPresets) {
        if (p.name == name) {
            return p;
        }
    }
    throw ConfigError("unknown preset '" + std::string(name) + "'");
}

/// Resonant rotating-frame LinkParams for a preset, in rad/s.
inline LinkParams preset_params(std::string_view name) {
    const auto &p = find_preset(name);
    LinkParams lp;
    lp.g_a = lp.g_b = p.g * kTwoPiMHz;
    lp.kappa = p.kappa * kTwoPiMHz;
    lp.gamma_a = lp.gamma_b = p.gamma * kTwoPiMHz;
    return lp;
}

enum class Scenario { Transfer, StirapCompare, Chain, SweepDistance, CoherentInfo, TuneStirap };

inline constexpr std::array<std::pair<Scenario, std::string_view>, 6> kScenarioNames{{
    {Scenario::Transfer, "transfer"},
    {Scenario::StirapCompare, "stirap-compare"},
    {Scenario::Chain, "chain"},
    {Scenario::SweepDistance, "sweep-distance"},
    {Scenario::CoherentInfo, "coherent-info"},
    {Scenario::TuneStirap, "tune-stirap"},
}};

inline std::string_view scenario_name(Scenario s) {
    for (const auto &[k, n] : kScenarioNames) {
        if (k == s) {
            return n;
        }
    }
    return "?";
}

inline Scenario parse_scenario(std::string_view s) {
    for (const auto &[k, n] : kScenarioNames) {
        if (n == s) {
            return k;
        }
    }
    throw ConfigError("unknown scenario '" + std::string(s) + "'");
}

/// Shortest round-trip decimal form.
inline std::string format_double(double x) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_double failed");
    }
    return std::string(buf.data(), end);
}

/// Seconds as microseconds, rounded to 15 significant digits so that unit
/// round trips (0.2 us -> 2e-7 s -> 0.2 us) print cleanly.
inline std::string format_us(double seconds) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), seconds * 1e6,
                                   std::chars_format::general, 15);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_us failed");
    }
    return std::string(buf.data(), end);
}

/// Raw scenario configuration in config units. Unset optionals take
/// scenario-dependent defaults when resolved.
struct ScenarioConfig {
    Scenario scenario = Scenario::Transfer;
    std::optional<std::string> preset;

    // Link parameters, 2 pi MHz.
    double omega_q = 0.0;
    double omega_w = 0.0;
    double g_A = 0.0;
    double g_B = 0.0;
    double kappa = 0.0;
    double gamma_A = 0.0;
    double gamma_B = 0.0;
    double hopping = 0.0;
    std::size_t n_mediators = 1;
    std::size_t mode_dim = 2;

    // Schedule.
    std::optional<std::string> protocol;  // constant | stirap
    std::optional<double> pulse_width_us;
    std::optional<double> t_delay_us;
    std::optional<double> t_center_us;

    // Target / input state.
    double theta_deg = 90.0;
    double phi_deg = 0.0;
    bool phase_correction = true;

    // Integration.
    std::optional<double> t_final_us;
    double dt_ns = 0.0;  // 0: automatic
    std::size_t sample_every = 0;  // 0: automatic

    // Scenario specifics.
    std::size_t hops = 7;
    std::vector<double> lengths_km{0.0, 0.001, 0.002, 0.005, 0.01, 0.02, 0.05,
                                   0.1, 0.2,   0.5,   1.0,   2.0,  5.0,  10.0};
    std::vector<std::string> media{"cavity", "cavity+fiber"};
    std::optional<double> base_kappa;  // 2 pi MHz, defaults to kappa
    double cavity_loss_per_m = 1e5;    // 1/(s m)
    double fiber_attenuation_db_per_km = 0.2;
    double fiber_interface_loss_db = 1.0;
    double fiber_refractive_index = 1.468;
    std::vector<double> kappa_sweep{0.0, 0.04, 0.34, 6.0};
    std::size_t n_samples = 500;
    std::optional<std::vector<double>> width_grid_us;
    std::optional<std::vector<double>> delay_grid_us;
    std::uint64_t seed = 1;
    std::string out_path = "out";

    // -- SI accessors --------------------------------------------------------

    LinkParams link_params() const {
        LinkParams p;
        p.omega_q = omega_q * kTwoPiMHz;
        p.omega_w = omega_w * kTwoPiMHz;
        p.g_a = g_A * kTwoPiMHz;
        p.g_b = g_B * kTwoPiMHz;
        p.kappa = kappa * kTwoPiMHz;
        p.gamma_a = gamma_A * kTwoPiMHz;
        p.gamma_b = gamma_B * kTwoPiMHz;
        p.hopping = hopping * kTwoPiMHz;
        return p;
    }

    std::string resolved_protocol() const {
        if (protocol) {
            return *protocol;
        }
        return scenario == Scenario::Chain ? "stirap" : "constant";
    }

    /// Default STIRAP shape: g0 T = 100, t_delay = 1.2 T, t_center = 3 T.
    CouplingSchedule stirap_schedule() const {
        const LinkParams p = link_params();
        const double g0 = std::max(p.g_a, p.g_b);
        if (!(g0 > 0.0) && !pulse_width_us) {
            throw ConfigError("STIRAP needs a nonzero coupling or an explicit pulse_width_us");
        }
        const double width = pulse_width_us ? *pulse_width_us * 1e-6 : 100.0 / g0;
        const double delay = t_delay_us ? *t_delay_us * 1e-6 : 1.2 * width;
        const double center = t_center_us ? *t_center_us * 1e-6 : 3.0 * width;
        return CouplingSchedule::stirap(p.g_a, p.g_b, width, delay, center);
    }

    CouplingSchedule constant_schedule() const {
        const LinkParams p = link_params();
        return CouplingSchedule::constant(p.g_a, p.g_b);
    }

    CouplingSchedule schedule() const {
        return resolved_protocol() == "stirap" ? stirap_schedule() : constant_schedule();
    }

    PureQubitSpec target() const {
        return PureQubitSpec::from_degrees(theta_deg, phi_deg);
    }

    /// pi / (sqrt(2) g), the resonant single-excitation transfer time.
    double transfer_time() const {
        const double g = link_params().g_a;
        if (!(g > 0.0)) {
            throw ConfigError("transfer time needs g_A > 0");
        }
        return std::numbers::pi / (std::numbers::sqrt2 * g);
    }

    double t_final() const {
        if (t_final_us) {
            return *t_final_us * 1e-6;
        }
        switch (scenario) {
            case Scenario::Transfer:
            case Scenario::StirapCompare:
                return 100e-6;
            case Scenario::Chain:
                return 20e-6;
            case Scenario::SweepDistance:
            case Scenario::CoherentInfo:
                return transfer_time();
            case Scenario::TuneStirap:
                return 0.0;
        }
        return 0.0;
    }

    double dt() const {
        return dt_ns * 1e-9;
    }

    MediumModel medium() const {
        MediumModel m;
        m.base_kappa = (base_kappa ? *base_kappa : kappa) * kTwoPiMHz;
        m.cavity_loss_per_m = cavity_loss_per_m;
        m.fiber_attenuation = fiber_attenuation_db_per_km;
        m.fiber_interface_loss = fiber_interface_loss_db;
        m.fiber_refractive_index = fiber_refractive_index;
        return m;
    }

    std::vector<double> width_grid() const {
        if (width_grid_us) {
            return scaled(*width_grid_us, 1e-6);
        }
        const double g0 = std::max(link_params().g_a, link_params().g_b);
        return {50.0 / g0, 100.0 / g0, 200.0 / g0};
    }

    std::vector<double> delay_grid() const {
        if (delay_grid_us) {
            return scaled(*delay_grid_us, 1e-6);
        }
        const double g0 = std::max(link_params().g_a, link_params().g_b);
        return {100.0 / g0, 120.0 / g0, 150.0 / g0};
    }

    void validate() const;

   private:
    static std::vector<double> scaled(const std::vector<double> &v, double f) {
        std::vector<double> out;
        for (double x : v) {
            out.push_back(x * f);
        }
        return out;
    }
};

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline double parse_number(const std::string &key, const std::string &v) {
    double x = 0.0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc{} || p != v.data() + v.size() || !std::isfinite(x)) {
        throw ConfigError(key + ": expected a finite number, got '" + v + "'");
    }
    return x;
}

inline double parse_non_negative(const std::string &key, const std::string &v) {
    const double x = parse_number(key, v);
    if (x < 0.0) {
        throw ConfigError(key + ": must be >= 0, got " + v);
    }
    return x;
}

inline std::uint64_t parse_unsigned(const std::string &key, const std::string &v) {
    std::uint64_t x = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc{} || p != v.data() + v.size()) {
        throw ConfigError(key + ": expected a non-negative integer, got '" + v + "'");
    }
    return x;
}

inline bool parse_bool(const std::string &key, const std::string &v) {
    if (v == "true" || v == "1") {
        return true;
    }
    if (v == "false" || v == "0") {
        return false;
    }
    throw ConfigError(key + ": expected true or false, got '" + v + "'");
}

inline std::vector<std::string> split_list(const std::string &v) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(v);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

inline std::vector<double> parse_number_list(const std::string &key, const std::string &v) {
    std::vector<double> out;
    for (const auto &item : split_list(v)) {
        out.push_back(parse_non_negative(key, item));
    }
    if (out.empty()) {
        throw ConfigError(key + ": list must not be empty");
    }
    return out;
}

template <class T>
std::string join(const std::vector<T> &v, const std::function<std::string(const T &)> &f) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += f(v[i]);
    }
    return out;
}

using Setter = std::function<void(ScenarioConfig &, const std::string &key, const std::string &)>;

/// Known keys. Manifest-only keys (status, failure*) are accepted and ignored.
inline const std::map<std::string, Setter, std::less<>> &setters() {
    static const std::map<std::string, Setter, std::less<>> table = [] {
        std::map<std::string, Setter, std::less<>> t;
        auto rate = [](double ScenarioConfig::*m) {
            return [m](ScenarioConfig &c, const std::string &k, const std::string &v) {
                c.*m = parse_non_negative(k, v);
            };
        };
        t["scenario"] = [](ScenarioConfig &c, const std::string &, const std::string &v) {
            c.scenario = parse_scenario(v);
        };
        t["preset"] = [](ScenarioConfig &c, const std::string &, const std::string &v) {
            find_preset(v);
            c.preset = v;
        };
        t["omega_q"] = rate(&ScenarioConfig::omega_q);
        t["omega_w"] = rate(&ScenarioConfig::omega_w);
        t["g_A"] = rate(&ScenarioConfig::g_A);
        t["g_B"] = rate(&ScenarioConfig::g_B);
        t["kappa"] = rate(&ScenarioConfig::kappa);
        t["gamma_A"] = rate(&ScenarioConfig::gamma_A);
        t["gamma_B"] = rate(&ScenarioConfig::gamma_B);
        t["hopping"] = rate(&ScenarioConfig::hopping);
        t["cavity_loss_per_m"] = rate(&ScenarioConfig::cavity_loss_per_m);
        t["fiber_attenuation_db_per_km"] = rate(&ScenarioConfig::fiber_attenuation_db_per_km);
        t["fiber_interface_loss_db"] = rate(&ScenarioConfig::fiber_interface_loss_db);
        t["fiber_refractive_index"] = rate(&ScenarioConfig::fiber_refractive_index);
        t["theta_deg"] = rate(&ScenarioConfig::theta_deg);
        t["phi_deg"] = rate(&ScenarioConfig::phi_deg);
        t["dt_ns"] = rate(&ScenarioConfig::dt_ns);
        t["n_mediators"] = [](ScenarioConfig &c, const std::string &k, const std::string &v) {
            c.n_mediators = parse_unsigned(k, v);
        };
        t["mode_dim"] = [](ScenarioConfig &c, const std::string &k, const std::string &v) {
            c.mode_dim = parse_unsigned(k, v);
        };
        t["protocol"] = [](ScenarioConfig &c, const std::string &k, const std::string &v) {
            if (v != "constant" && v != "stirap") {
                throw ConfigError(k + ": expected constant or stirap, got '" + v + "'");
            }
            c.protocol = v;
        };
        auto opt_time = [](std::optional<double> ScenarioConfig::*m) {
            return [m](ScenarioConfig &c, const std::string &k, const std::string &v) {
                c.*m = parse_non_negative(k, v);
            };
        };
        t["pulse_width_us"] = opt_time(&ScenarioConfig::pulse_width_us);
        t["t_delay_us"] = opt_time(&ScenarioConfig::t_delay_us);
        t["t_center_us"] = opt_time(&ScenarioConfig::t_center_us);
        t["t_final_us"] = opt_time(&ScenarioConfig::t_final_us);
        t["base_kappa"] = opt_time(&ScenarioConfig::base_kappa);
        t["phase_correction"] = [](ScenarioConfig &c, const std::string &k, const std::string &v) {
            c.phase_correction = parse_bool(k, v);
        };
        t["sample_every"] = [](ScenarioConfig &c, const std::string &k, const std::string &v) {
            c.sample_every = parse_unsigned(k, v);
        };
        t["hops"] = [](ScenarioConfig &c, const std::string &k, const std::string &v) {
            c.hops = parse_unsigned(k, v);
        };
        t["n_samples"] = [](ScenarioConfig &c, const std::string &k, const std::string &v) {
            c.n_samples = parse_unsigned(k, v);
        };
        t["seed"] = [](ScenarioConfig &c, const std::string &k, const std::string &v) {
            c.seed = parse_unsigned(k, v);
        };
        t["lengths_km"] = [](ScenarioConfig &c, const std::string &k, const std::string &v) {
            c.lengths_km = parse_number_list(k, v);
        };
        t["kappa_sweep"] = [](ScenarioConfig &c, const std::string &k, const std::string &v) {
            c.kappa_sweep = parse_number_list(k, v);
        };
        t["width_grid_us"] = [](ScenarioConfig &c, const std::string &k, const std::string &v) {
            c.width_grid_us = parse_number_list(k, v);
        };
        t["delay_grid_us"] = [](ScenarioConfig &c, const std::string &k, const std::string &v) {
            c.delay_grid_us = parse_number_list(k, v);
        };
        t["media"] = [](ScenarioConfig &c, const std::string &k, const std::string &v) {
            auto items = split_list(v);
            if (items.empty()) {
                throw ConfigError(k + ": list must not be empty");
            }
            for (const auto &i : items) {
                try {
                    parse_medium_kind(i);
                } catch (const std::invalid_argument &e) {
                    throw ConfigError(k + ": " + e.what());
                }
            }
            c.media = std::move(items);
        };
        t["out_path"] = [](ScenarioConfig &c, const std::string &, const std::string &v) {
            c.out_path = v;
        };
        auto ignore = [](ScenarioConfig &, const std::string &, const std::string &) {};
        t["status"] = ignore;
        t["failure"] = ignore;
        t["failure_time_us"] = ignore;
        return t;
    }();
    return table;
}

}  // namespace detail

/// Copies a preset's rates into the config (g, kappa, gamma in 2 pi MHz).
inline void apply_preset(ScenarioConfig &c, std::string_view name) {
    const auto &p = find_preset(name);
    c.preset = std::string(name);
    c.g_A = c.g_B = p.g;
    c.kappa = p.kappa;
    c.gamma_A = c.gamma_B = p.gamma;
}

inline void ScenarioConfig::validate() const {
    if (!(theta_deg <= 180.0)) {
        throw ConfigError("theta_deg: must lie in [0, 180]");
    }
    if (!(phi_deg < 360.0)) {
        throw ConfigError("phi_deg: must lie in [0, 360)");
    }
    if (n_mediators < 1) {
        throw ConfigError("n_mediators: must be >= 1");
    }
    if (mode_dim < 2 || mode_dim > kMaxModeDim) {
        throw ConfigError("mode_dim: must lie in [2, 8]");
    }
    if (fiber_refractive_index < 1.0) {
        throw ConfigError("fiber_refractive_index: must be >= 1");
    }
    if (scenario == Scenario::Chain && hops < 1) {
        throw ConfigError("hops: must be >= 1");
    }
    if (n_samples < 1) {
        throw ConfigError("n_samples: must be >= 1");
    }
    if (t_final_us && !(*t_final_us > 0.0)) {
        throw ConfigError("t_final_us: must be > 0");
    }
    if (pulse_width_us && !(*pulse_width_us > 0.0)) {
        throw ConfigError("pulse_width_us: must be > 0");
    }
    if (t_delay_us && !(*t_delay_us > 0.0)) {
        throw ConfigError("t_delay_us: must be > 0");
    }
    for (auto *grid : {&width_grid_us, &delay_grid_us}) {
        if (*grid) {
            for (double x : **grid) {
                if (!(x > 0.0)) {
                    throw ConfigError("STIRAP grids must be strictly positive");
                }
            }
        }
    }
}

/// Parses config text. Preset values are applied first, so explicit keys in
/// the same file override them regardless of order.
inline ScenarioConfig parse_config(std::string_view text, std::string_view source = "<config>",
                                   std::optional<std::string> preset_override = std::nullopt) {
    std::vector<std::tuple<std::size_t, std::string, std::string>> entries;
    std::map<std::string, std::size_t, std::less<>> seen;
    std::istringstream is{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string body = detail::trim(line);
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        auto where = [&] { return std::string(source) + ":" + std::to_string(lineno) + ": "; };
        if (eq == std::string::npos) {
            throw ConfigError(where() + "expected 'key = value', got '" + body + "'");
        }
        std::string key = detail::trim(std::string_view(body).substr(0, eq));
        std::string value = detail::trim(std::string_view(body).substr(eq + 1));
        if (!detail::setters().contains(key)) {
            throw ConfigError(where() + "unknown key '" + key + "'");
        }
        if (auto it = seen.find(key); it != seen.end()) {
            throw ConfigError(where() + "duplicate key '" + key + "' (first set on line " +
                              std::to_string(it->second) + ")");
        }
        seen[key] = lineno;
        entries.emplace_back(lineno, std::move(key), std::move(value));
    }

    ScenarioConfig c;
    auto apply = [&](std::size_t ln, const std::string &k, const std::string &v) {
        try {
            detail::setters().find(k)->second(c, k, v);
        } catch (const ConfigError &e) {
            throw ConfigError(std::string(source) + ":" + std::to_string(ln) + ": " + e.what());
        }
    };
    std::optional<std::string> preset = preset_override;
    for (const auto &[ln, k, v] : entries) {
        if (k == "preset" && !preset) {
            apply(ln, k, v);
            preset = c.preset;
        }
    }
    if (preset) {
        try {
            apply_preset(c, *preset);
        } catch (const ConfigError &e) {
            throw ConfigError(std::string(source) + ": " + e.what());
        }
    }
    for (const auto &[ln, k, v] : entries) {
        if (k != "preset") {
            apply(ln, k, v);
        }
    }
    c.validate();
    return c;
}

inline ScenarioConfig load_config(const std::string &path,
                                  std::optional<std::string> preset_override = std::nullopt) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path, std::move(preset_override));
}

/// Serializes every field in config units; parse_config of the result
/// reproduces the same config.
inline std::string serialize_config(const ScenarioConfig &c) {
    using detail::join;
    auto num = [](double x) { return format_double(x); };
    std::ostringstream os;
    os << "scenario = " << scenario_name(c.scenario) << "\n";
    if (c.preset) {
        os << "preset = " << *c.preset << "\n";
    }
    os << "omega_q = " << num(c.omega_q) << "\n"
       << "omega_w = " << num(c.omega_w) << "\n"
       << "g_A = " << num(c.g_A) << "\n"
       << "g_B = " << num(c.g_B) << "\n"
       << "kappa = " << num(c.kappa) << "\n"
       << "gamma_A = " << num(c.gamma_A) << "\n"
       << "gamma_B = " << num(c.gamma_B) << "\n"
       << "hopping = " << num(c.hopping) << "\n"
       << "n_mediators = " << c.n_mediators << "\n"
       << "mode_dim = " << c.mode_dim << "\n"
       << "protocol = " << c.resolved_protocol() << "\n";
    if (c.pulse_width_us) {
        os << "pulse_width_us = " << num(*c.pulse_width_us) << "\n";
    }
    if (c.t_delay_us) {
        os << "t_delay_us = " << num(*c.t_delay_us) << "\n";
    }
    if (c.t_center_us) {
        os << "t_center_us = " << num(*c.t_center_us) << "\n";
    }
    os << "theta_deg = " << num(c.theta_deg) << "\n"
       << "phi_deg = " << num(c.phi_deg) << "\n"
       << "phase_correction = " << (c.phase_correction ? "true" : "false") << "\n";
    if (c.t_final_us) {
        os << "t_final_us = " << num(*c.t_final_us) << "\n";
    }
    os << "dt_ns = " << num(c.dt_ns) << "\n"
       << "sample_every = " << c.sample_every << "\n"
       << "hops = " << c.hops << "\n"
       << "lengths_km = " << join<double>(c.lengths_km, num) << "\n"
       << "media = "
       << join<std::string>(c.media, [](const std::string &s) { return s; }) << "\n";
    if (c.base_kappa) {
        os << "base_kappa = " << num(*c.base_kappa) << "\n";
    }
    os << "cavity_loss_per_m = " << num(c.cavity_loss_per_m) << "\n"
       << "fiber_attenuation_db_per_km = " << num(c.fiber_attenuation_db_per_km) << "\n"
       << "fiber_interface_loss_db = " << num(c.fiber_interface_loss_db) << "\n"
       << "fiber_refractive_index = " << num(c.fiber_refractive_index) << "\n"
       << "kappa_sweep = " << join<double>(c.kappa_sweep, num) << "\n"
       << "n_samples = " << c.n_samples << "\n";
    if (c.width_grid_us) {
        os << "width_grid_us = " << join<double>(*c.width_grid_us, num) << "\n";
    }
    if (c.delay_grid_us) {
        os << "delay_grid_us = " << join<double>(*c.delay_grid_us, num) << "\n";
    }
    os << "seed = " << c.seed << "\n"
       << "out_path = " << c.out_path << "\n";
    return os.str();
}

}  // namespace qlinksim

#endif
