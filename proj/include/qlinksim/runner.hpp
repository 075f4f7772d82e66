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

#ifndef QLINKSIM_RUNNER_HPP
#define QLINKSIM_RUNNER_HPP

// Scenario execution and CSV/manifest output. All artifacts are rendered in
// memory and written only when the whole scenario succeeded; on failure only
// the manifest is written, recording where the run broke.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qlinksim/config.hpp"
#include "qlinksim/dynamics.hpp"
#include "qlinksim/metrics.hpp"
#include "qlinksim/network.hpp"
#include "qlinksim/stirap_tuning.hpp"

namespace qlinksim {

inline constexpr std::size_t kTargetSamples = 2000;

/// Files produced by a run, keyed by file name.
using Artifacts = std::map<std::string, std::string>;

struct RunResult {
    int exit_code = 0;
    std::string message;
    Artifacts artifacts;  // includes manifest.txt
};

/// `t_us,pop_A,pop_W[,pop_W2...],pop_B,fidelity,trace,purity`; times are
/// shifted by `t_offset` seconds.
inline std::string trajectory_csv(const Trajectory &traj, std::size_t n_mediators,
                                  double t_offset = 0.0) {
    std::ostringstream os;
    os << "t_us,pop_A,pop_W";
    for (std::size_t k = 2; k <= n_mediators; ++k) {
        os << ",pop_W" << k;
    }
    os << ",pop_B,fidelity,trace,purity\n";
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const Sample &s = traj.samples[i];
        os << format_us(traj.times[i] + t_offset) << ',' << format_double(s.pop_a);
        for (double w : s.pop_w) {
            os << ',' << format_double(w);
        }
        os << ',' << format_double(s.pop_b) << ','
           << (s.fidelity ? format_double(clamp_fidelity(*s.fidelity)) : std::string()) << ','
           << format_double(s.trace) << ',' << format_double(s.purity) << '\n';
    }
    return os.str();
}

namespace detail {

inline std::size_t auto_sample_every(const ScenarioConfig &c, double span, double dt) {
    if (c.sample_every > 0) {
        return c.sample_every;
    }
    const auto steps = static_cast<std::size_t>(std::ceil(span / dt - 1e-9));
    return std::max<std::size_t>(1, steps / kTargetSamples);
}

inline LinkSpec link_spec(const ScenarioConfig &c, const CouplingSchedule &sched, double hop_time) {
    LinkSpec l;
    l.params = c.link_params();
    l.schedule = sched;
    l.hop_time = hop_time;
    l.dt = c.dt();
    l.n_mediators = c.n_mediators;
    l.mode_dim = c.mode_dim;
    l.phase_correction = c.phase_correction;
    const double dt = l.resolved_dt();
    l.sample_every = auto_sample_every(c, hop_time, dt);
    return l;
}

/// Latency: time after which the fidelity stays within 0.01 of its final
/// value, but never before the coupling protocol has finished.
inline double protocol_latency(const Trajectory &traj, const CouplingSchedule &s) {
    double t = stabilization_time(traj, 0.01);
    if (s.kind == CouplingSchedule::Kind::Stirap) {
        t = std::max(t, default_stirap_window(s).second);
    }
    return t;
}

inline double peak_fidelity(const Trajectory &traj) {
    double best = 0.0;
    for (const auto &s : traj.samples) {
        best = std::max(best, *s.fidelity);
    }
    return best;
}

inline Artifacts run_transfer(const ScenarioConfig &c) {
    const CouplingSchedule sched = c.schedule();
    const LinkSpec link = link_spec(c, sched, c.t_final());
    const HopResult hop = run_hop(c.target().density(), link, c.target());
    std::ostringstream sum;
    sum << "protocol,final_fidelity,peak_fidelity,stabilization_us\n"
        << c.resolved_protocol() << ','
        << format_double(clamp_fidelity(transfer_fidelity(hop.output, c.target()))) << ','
        << format_double(clamp_fidelity(peak_fidelity(hop.trajectory))) << ','
        << format_us(stabilization_time(hop.trajectory)) << '\n';
    return {{"trajectory.csv", trajectory_csv(hop.trajectory, c.n_mediators)},
            {"summary.csv", sum.str()}};
}

inline Artifacts run_stirap_compare(const ScenarioConfig &c) {
    Artifacts out;
    std::ostringstream sum;
    sum << "protocol,final_fidelity,latency_us\n";
    for (const auto &[name, sched] : {std::pair{std::string("constant"), c.constant_schedule()},
                                      std::pair{std::string("stirap"), c.stirap_schedule()}}) {
        const LinkSpec link = link_spec(c, sched, c.t_final());
        const HopResult hop = run_hop(c.target().density(), link, c.target());
        out["trajectory_" + name + ".csv"] = trajectory_csv(hop.trajectory, c.n_mediators);
        sum << name << ','
            << format_double(clamp_fidelity(transfer_fidelity(hop.output, c.target()))) << ','
            << format_us(protocol_latency(hop.trajectory, sched)) << '\n';
    }
    out["summary.csv"] = sum.str();
    return out;
}

inline Artifacts run_chain_scenario(const ScenarioConfig &c) {
    const double hop_time = c.t_final();
    const LinkSpec link = link_spec(c, c.schedule(), hop_time);
    const ChainResult chain = run_chain(c.target(), std::vector<LinkSpec>(c.hops, link));
    Artifacts out;
    std::ostringstream sum;
    sum << "hop,fidelity\n";
    for (const auto &h : chain.per_hop) {
        sum << h.hop_index << ',' << format_double(clamp_fidelity(h.fidelity)) << '\n';
        out["trajectory_hop" + std::to_string(h.hop_index) + ".csv"] = trajectory_csv(
            h.trajectory, c.n_mediators, static_cast<double>(h.hop_index - 1) * hop_time);
    }
    out["summary.csv"] = sum.str();
    return out;
}

inline Artifacts run_sweep(const ScenarioConfig &c, std::vector<std::string> &failures) {
    const LinkSpec link = link_spec(c, c.schedule(), c.t_final());
    std::vector<MediumModel::Kind> kinds;
    for (const auto &m : c.media) {
        kinds.push_back(parse_medium_kind(m));
    }
    std::vector<double> lengths;
    for (double km : c.lengths_km) {
        lengths.push_back(km * 1000.0);
    }
    const auto rows = distance_sweep(link, c.medium(), kinds, lengths, c.target());
    // Sorted by sweep key: medium as listed, then length.
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto ka = std::find(kinds.begin(), kinds.end(), rows[a].kind) - kinds.begin();
        const auto kb = std::find(kinds.begin(), kinds.end(), rows[b].kind) - kinds.begin();
        return ka != kb ? ka < kb : rows[a].length < rows[b].length;
    });
    std::ostringstream sum;
    sum << "kind,length_km,fidelity\n";
    for (auto i : order) {
        const auto &r = rows[i];
        const double km = c.lengths_km[i % c.lengths_km.size()];
        sum << medium_name(r.kind) << ',' << format_double(km) << ','
            << (r.error ? std::string("nan") : format_double(clamp_fidelity(r.fidelity))) << '\n';
        if (r.error) {
            failures.push_back(std::string(medium_name(r.kind)) + " @ " +
                               format_double(km) + " km: " + *r.error);
        }
    }
    return {{"summary.csv", sum.str()}};
}

inline Artifacts run_coherent_info(const ScenarioConfig &c) {
    const CouplingSchedule sched = c.schedule();
    const double t_final = c.t_final();
    Artifacts out;

    // Time series at the configured kappa.
    {
        const LinkParams p = c.link_params();
        const double dt = c.dt() > 0.0 ? c.dt() : default_dt(p, sched);
        ChannelProbe probe = make_channel_probe(c.n_mediators, c.mode_dim);
        probe.phase_correction = c.phase_correction;
        EvolveOptions opt;
        opt.sample_every = auto_sample_every(c, t_final, dt);
        const Trajectory traj =
            evolve(probe.joint_initial, LinkModel{probe.topology, p, sched},
                   link_collapse_set(p, probe.topology), 0.0, t_final, dt, opt);
        std::ostringstream os;
        os << "t_us,coherent_information,entanglement_fidelity\n";
        for (std::size_t i = 0; i < traj.size(); ++i) {
            probe.evolved_joint = DensityMatrix::unchecked(traj.states[i]);
            os << format_us(traj.times[i]) << ','
               << format_double(coherent_information(probe)) << ','
               << format_double(clamp_fidelity(entanglement_fidelity(probe))) << '\n';
        }
        out["coherent_info.csv"] = os.str();
    }

    std::ostringstream sum;
    sum << "kappa_2pi_MHz,coherent_information,entanglement_fidelity,average_fidelity\n";
    for (double k : c.kappa_sweep) {
        ScenarioConfig ck = c;
        ck.kappa = k;
        const LinkParams p = ck.link_params();
        const double dt = c.dt() > 0.0 ? c.dt() : default_dt(p, sched);
        ChannelProbe probe = make_channel_probe(c.n_mediators, c.mode_dim);
        probe.phase_correction = c.phase_correction;
        probe = run_channel_probe(std::move(probe), p, sched, t_final, dt);
        const LinkSpec link = link_spec(ck, sched, t_final);
        const double f_avg = average_fidelity(
            [&](const Matrix &in) { return run_hop(in, link, std::nullopt).output; }, c.n_samples,
            c.seed);
        sum << format_double(k) << ',' << format_double(coherent_information(probe)) << ','
            << format_double(clamp_fidelity(entanglement_fidelity(probe))) << ','
            << format_double(clamp_fidelity(f_avg)) << '\n';
    }
    out["summary.csv"] = sum.str();
    return out;
}

inline Artifacts run_tune(const ScenarioConfig &c) {
    const LinkParams p = c.link_params();
    std::ostringstream grid;
    grid << "pulse_width_us,t_delay_us,window_us,fidelity\n";
    for (double w : c.width_grid()) {
        for (double d : c.delay_grid()) {
            const StirapPoint pt = evaluate_stirap(p, w, d, c.dt());
            grid << format_us(w) << ',' << format_us(d) << ','
                 << format_us(pt.window) << ','
                 << format_double(clamp_fidelity(pt.fidelity)) << '\n';
        }
    }
    const StirapPoint best = tune_stirap(p, c.width_grid(), c.delay_grid(), c.dt());
    std::ostringstream sum;
    sum << "pulse_width_us,t_delay_us,window_us,fidelity\n"
        << format_us(best.pulse_width) << ',' << format_us(best.t_delay) << ','
        << format_us(best.window) << ','
        << format_double(clamp_fidelity(best.fidelity)) << '\n';
    return {{"grid.csv", grid.str()}, {"summary.csv", sum.str()}};
}

inline std::string manifest(const ScenarioConfig &c, const std::string &status,
                            const std::vector<std::string> &extra) {
    std::ostringstream os;
    os << "# qlinksim run manifest\n"
       << "status = " << status << "\n";
    for (const auto &e : extra) {
        os << e << "\n";
    }
    os << serialize_config(c);
    // Derived SI values, informational only.
    const LinkParams p = c.link_params();
    os << "# resolved: g_A = " << format_double(p.g_a) << " rad/s, kappa = "
       << format_double(p.kappa) << " 1/s, gamma_A = " << format_double(p.gamma_a)
       << " 1/s, gamma_B = " << format_double(p.gamma_b) << " 1/s\n";
    return os.str();
}

inline std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

}  // namespace detail

/// Runs the scenario and returns its artifacts without touching the disk.
inline RunResult execute_scenario(const ScenarioConfig &c) {
    RunResult r;
    std::vector<std::string> failures;
    try {
        switch (c.scenario) {
            case Scenario::Transfer:
                r.artifacts = detail::run_transfer(c);
                break;
            case Scenario::StirapCompare:
                r.artifacts = detail::run_stirap_compare(c);
                break;
            case Scenario::Chain:
                r.artifacts = detail::run_chain_scenario(c);
                break;
            case Scenario::SweepDistance:
                r.artifacts = detail::run_sweep(c, failures);
                break;
            case Scenario::CoherentInfo:
                r.artifacts = detail::run_coherent_info(c);
                break;
            case Scenario::TuneStirap:
                r.artifacts = detail::run_tune(c);
                break;
        }
    } catch (const IntegrationFailure &e) {
        r.artifacts.clear();
        r.exit_code = 2;
        r.message = e.what();
        r.artifacts["manifest.txt"] = detail::manifest(
            c, "failed",
            {"failure_time_us = " + format_us(e.time),
             "failure = " + detail::one_line(e.what())});
        return r;
    } catch (const std::invalid_argument &e) {
        r.artifacts.clear();
        r.exit_code = 1;
        r.message = e.what();
        r.artifacts["manifest.txt"] =
            detail::manifest(c, "failed", {"failure = " + detail::one_line(e.what())});
        return r;
    }
    if (!failures.empty()) {
        std::vector<std::string> extra;
        for (const auto &f : failures) {
            extra.push_back("# failed point: " + detail::one_line(f));
        }
        extra.push_back("failure = " + std::to_string(failures.size()) + " sweep point(s) failed");
        r.artifacts.clear();
        r.exit_code = 2;
        r.message = failures.front();
        r.artifacts["manifest.txt"] = detail::manifest(c, "failed", extra);
        return r;
    }
    r.artifacts["manifest.txt"] = detail::manifest(c, "ok", {});
    return r;
}

/// Executes and writes artifacts under `out_dir`. Nothing but the manifest
/// is written for a failed run.
inline RunResult run_scenario(const ScenarioConfig &c, const std::filesystem::path &out_dir) {
    RunResult r = execute_scenario(c);
    std::filesystem::create_directories(out_dir);
    for (const auto &[name, body] : r.artifacts) {
        std::ofstream f(out_dir / name, std::ios::binary | std::ios::trunc);
        f << body;
        if (!f) {
            throw std::runtime_error("cannot write " + (out_dir / name).string());
        }
    }
    return r;
}

}  // namespace qlinksim

#endif
