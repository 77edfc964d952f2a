// SPDX-License-Identifier: Apache-2.0
//
// v2xmpc: multipath-component statistics for vehicular mmWave channel traces
// Copyright (C) 2026 The v2xmpc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Command-line front end: synthesize, validate and analyse MPC trajectories.
//
// Exit codes: 0 success, 2 parse error, 3 config error, 4 computation error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "v2xmpc/canyon.hpp"
#include "v2xmpc/config.hpp"
#include "v2xmpc/errors.hpp"
#include "v2xmpc/pipeline.hpp"
#include "v2xmpc/trajectory_io.hpp"

namespace
{
    constexpr int kExitParse = 2;
    constexpr int kExitConfig = 3;
    constexpr int kExitComputation = 4;

    /// Flag overrides; each one mirrors a RunConfig field.
    struct Overrides
    {
        std::string config_path;
        std::optional<double> mpct_db;
        std::vector<double> mpct_sweep;
        std::vector<double> bew_values;
        std::optional<double> window_scale;
        std::vector<std::string> cone_hpbw;
        std::optional<int> max_cones;
        std::optional<double> cone_scale;
        std::optional<std::string> cone_domain;
        std::optional<std::string> pl_averaging;
        std::optional<bool> rx_weighting;
        std::optional<bool> tx_weighting;
        std::optional<double> weight_hpbw_az;
        std::optional<double> weight_hpbw_el;
        std::optional<bool> weight_planar;
        std::optional<unsigned> threads;
        std::optional<std::string> output_dir;

        void attach(CLI::App &app)
        {
            app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
            app.add_option("--mpct-db", mpct_db, "MPC threshold below the strongest MPC (dB)");
            app.add_option("--mpct-sweep", mpct_sweep, "thresholds for the MPC-count sweep (dB)");
            app.add_option("--bew", bew_values, "beamwidth sweep values (deg)");
            app.add_option("--window-scale", window_scale, "scale applied to the beam half-width");
            app.add_option("--cone-hpbw", cone_hpbw, "cone HPBW pairs as AZ:EL (deg), repeatable");
            app.add_option("--max-cones", max_cones, "number of cones per location");
            app.add_option("--cone-scale", cone_scale, "scale applied to the cone semi-axes");
            app.add_option("--cone-domain", cone_domain, "AOA or AOD");
            app.add_option("--pl-averaging", pl_averaging, "db or linear");
            app.add_option("--rx-weighting", rx_weighting, "apply receive antenna gain (true/false)");
            app.add_option("--tx-weighting", tx_weighting, "apply transmit antenna gain (true/false)");
            app.add_option("--weight-hpbw-az", weight_hpbw_az, "beam-weight azimuth HPBW (deg)");
            app.add_option("--weight-hpbw-el", weight_hpbw_el, "beam-weight elevation HPBW (deg)");
            app.add_option("--weight-planar", weight_planar, "ignore elevation offsets in the gain (true/false)");
            app.add_option("--threads", threads, "worker threads, 0 = all cores");
            app.add_option("-o,--output-dir", output_dir, "directory for CSV results");
        }

        v2xmpc::RunConfig resolve() const
        {
            v2xmpc::RunConfig c = config_path.empty() ? v2xmpc::RunConfig{} : v2xmpc::load_config(config_path);
            if (mpct_db)
                c.mpct_db = *mpct_db;
            if (!mpct_sweep.empty())
                c.mpct_sweep = mpct_sweep;
            if (!bew_values.empty())
                c.bew_values = bew_values;
            if (window_scale)
                c.window_scale = *window_scale;
            if (!cone_hpbw.empty())
            {
                c.cone_hpbw.clear();
                for (const auto &s : cone_hpbw)
                {
                    const auto colon = s.find(':');
                    try
                    {
                        if (colon == std::string::npos)
                            throw std::invalid_argument(s);
                        c.cone_hpbw.push_back({std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))});
                    }
                    catch (const std::exception &)
                    {
                        throw v2xmpc::ConfigError("--cone-hpbw expects AZ:EL, got '" + s + "'");
                    }
                }
            }
            if (max_cones)
                c.max_cones = *max_cones;
            if (cone_scale)
                c.cone_scale = *cone_scale;
            if (cone_domain)
            {
                if (*cone_domain == "AOA" || *cone_domain == "aoa")
                    c.cone_domain = v2xmpc::Domain::Aoa;
                else if (*cone_domain == "AOD" || *cone_domain == "aod")
                    c.cone_domain = v2xmpc::Domain::Aod;
                else
                    throw v2xmpc::ConfigError("--cone-domain expects AOA or AOD");
            }
            if (pl_averaging)
            {
                if (*pl_averaging == "db")
                    c.pl_averaging = v2xmpc::PlAveraging::Db;
                else if (*pl_averaging == "linear")
                    c.pl_averaging = v2xmpc::PlAveraging::Linear;
                else
                    throw v2xmpc::ConfigError("--pl-averaging expects db or linear");
            }
            if (rx_weighting)
                c.rx_weighting = *rx_weighting;
            if (tx_weighting)
                c.tx_weighting = *tx_weighting;
            if (weight_hpbw_az)
                c.weight_hpbw_az_deg = *weight_hpbw_az;
            if (weight_hpbw_el)
                c.weight_hpbw_el_deg = *weight_hpbw_el;
            if (weight_planar)
                c.weight_planar = *weight_planar;
            if (threads)
                c.threads = *threads;
            if (output_dir)
                c.output_dir = *output_dir;
            v2xmpc::validate(c);
            return c;
        }
    };

    void emit(const std::vector<v2xmpc::ResultFile> &results, const std::string &dir)
    {
        v2xmpc::write_results(results, dir);
        for (const auto &r : results)
            std::cout << dir << "/" << r.name << " (" << r.table.rows.size() << " rows)\n";
    }

    void summarize(const v2xmpc::Trajectory &t)
    {
        std::size_t n_mpcs = 0, n_los = 0, n_nlos = 0;
        for (const auto &s : t.snapshots)
        {
            n_mpcs += s.mpcs.size();
            (s.segment == v2xmpc::Segment::Los ? n_los : n_nlos) += 1;
        }
        std::cout << "band " << t.band.label << " (" << t.band.freq_ghz << " GHz), tx " << t.tx_power_dbm
                  << " dBm\n"
                  << t.snapshots.size() << " locations (" << n_nlos << " NLOS, " << n_los << " LOS), " << n_mpcs
                  << " MPCs\n";
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Multipath-component statistics for vehicular channel traces"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "v2xmpc 1.0 (trajectory format v1, CSV schema v1)");

    std::string scene_path, out_path;
    bool print_scene = false;
    auto *synth = app.add_subcommand("synth", "generate a street-canyon trajectory");
    synth->add_option("--scene", scene_path, "JSON scene description (defaults if omitted)")->check(CLI::ExistingFile);
    synth->add_option("--out", out_path, "trajectory file to write (stdout if omitted)");
    synth->add_flag("--print-scene", print_scene, "print the effective scene as JSON and exit");

    std::string traj_path, hint_path, other_path;
    auto *validate = app.add_subcommand("validate", "parse a trajectory file and print a summary");
    validate->add_option("trajectory", traj_path, "trajectory file")->required();

    Overrides stats_opts, cones_opts, blockage_opts, pipeline_opts, congruency_opts;
    auto *stats = app.add_subcommand("stats", "MPCT sweep, path loss, spread sweeps and beam-weighted spreads");
    stats->add_option("trajectory", traj_path, "trajectory file")->required();
    stats_opts.attach(*stats);

    auto *cones = app.add_subcommand("cones", "cone fractional power and per-cone strongest-MPC tracks");
    cones->add_option("trajectory", traj_path, "trajectory file")->required();
    cones->add_option("--hint", hint_path, "companion band trajectory providing the cone boresights")
        ->check(CLI::ExistingFile);
    cones_opts.attach(*cones);

    auto *blockage = app.add_subcommand("blockage", "fallback MPC when cones are blocked");
    blockage->add_option("trajectory", traj_path, "trajectory file")->required();
    blockage_opts.attach(*blockage);

    auto *pipeline = app.add_subcommand("pipeline", "every CSV result");
    pipeline->add_option("trajectory", traj_path, "trajectory file")->required();
    pipeline_opts.attach(*pipeline);

    auto *congruency = app.add_subcommand("congruency", "strongest-path AOA offset between two bands");
    congruency->add_option("trajectory", traj_path, "first band")->required();
    congruency->add_option("other", other_path, "second band")->required();
    congruency_opts.attach(*congruency);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try
    {
        if (*synth)
        {
            const v2xmpc::CanyonScene scene = scene_path.empty() ? v2xmpc::CanyonScene{} : v2xmpc::load_scene(scene_path);
            v2xmpc::validate(scene);
            if (print_scene)
            {
                std::cout << v2xmpc::scene_to_json(scene);
                return 0;
            }
            const auto trajectory = v2xmpc::generate(scene);
            if (out_path.empty())
                std::cout << v2xmpc::format_trajectory(trajectory);
            else
                v2xmpc::write_trajectory(trajectory, out_path);
        }
        else if (*validate)
        {
            const auto t = v2xmpc::parse_trajectory(traj_path);
            v2xmpc::validate(t);
            summarize(t);
        }
        else if (*stats)
        {
            const auto config = stats_opts.resolve();
            emit(v2xmpc::stats_tables(config, v2xmpc::parse_trajectory(traj_path)), config.output_dir);
        }
        else if (*cones)
        {
            const auto config = cones_opts.resolve();
            const auto t = v2xmpc::parse_trajectory(traj_path);
            std::optional<v2xmpc::Trajectory> hint;
            if (!hint_path.empty())
                hint = v2xmpc::parse_trajectory(hint_path);
            emit(v2xmpc::cone_tables(config, t, hint ? &*hint : nullptr), config.output_dir);
        }
        else if (*blockage)
        {
            const auto config = blockage_opts.resolve();
            emit(v2xmpc::blockage_tables(config, v2xmpc::parse_trajectory(traj_path)), config.output_dir);
        }
        else if (*pipeline)
        {
            const auto config = pipeline_opts.resolve();
            emit(v2xmpc::run_pipeline(config, v2xmpc::parse_trajectory(traj_path)), config.output_dir);
        }
        else if (*congruency)
        {
            const auto config = congruency_opts.resolve();
            emit(v2xmpc::congruency_tables(v2xmpc::parse_trajectory(traj_path), v2xmpc::parse_trajectory(other_path)),
                 config.output_dir);
        }
    }
    catch (const v2xmpc::ParseError &e)
    {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    catch (const v2xmpc::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return 0;
}
