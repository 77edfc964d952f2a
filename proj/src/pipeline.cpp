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

#include "v2xmpc/pipeline.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <optional>
#include <thread>

#include "v2xmpc/antenna.hpp"
#include "v2xmpc/cones.hpp"
#include "v2xmpc/errors.hpp"

namespace v2xmpc
{
    namespace
    {
        Cell text(std::string_view s) { return std::string(s); }
        Cell integer(std::int64_t v) { return v; }

        constexpr Domain kDomains[] = {Domain::Aoa, Domain::Aod};
        constexpr Plane kPlanes[] = {Plane::Azimuth, Plane::Elevation};

        Trajectory prepared(const RunConfig &config, const Trajectory &trajectory)
        {
            validate(config);
            validate(trajectory);
            if (trajectory.snapshots.empty())
                throw ComputationError("trajectory has no snapshots");
            return apply_mpct(trajectory, config.mpct_db);
        }

        Table mpct_sweep_table(const RunConfig &config, const Trajectory &raw)
        {
            Table t{{"mpct_db", "segment", "bounce_class", "mean_mpc_count"}, {}};
            for (const auto &r : mpct_sweep(raw, config.mpct_sweep))
                t.add_row({r.mpct_db, text(to_string(r.segment)), text(to_string(r.bounce_class)), r.mean_count});
            return t;
        }

        Table path_loss_table(const RunConfig &config, const Trajectory &raw)
        {
            Table t{{"mpct_db", "segment", "bounce_class", "mean_pl_db", "n_mpcs"}, {}};
            for (const auto &r : avg_path_loss(raw, config.mpct_db, config.pl_averaging))
                t.add_row({config.mpct_db, text(to_string(r.segment)), text(to_string(r.bounce_class)), r.mean_pl_db,
                           integer(std::int64_t(r.n_mpcs))});
            return t;
        }

        Table spread_table(const RunConfig &config, const Trajectory &traj)
        {
            const auto &bews = config.bew_values;
            const std::size_t n = traj.snapshots.size();
            // [domain][plane][bew][location]
            std::vector<std::vector<LocationSpread>> per[2][2];
            for (auto &d : per)
                for (auto &p : d)
                    p.assign(bews.size(), std::vector<LocationSpread>(n));

            parallel_for(n, config.threads, [&](std::size_t i) {
                for (int d = 0; d < 2; ++d)
                    for (int p = 0; p < 2; ++p)
                        for (std::size_t b = 0; b < bews.size(); ++b)
                            per[d][p][b][i] =
                                location_spread(traj.snapshots[i], kDomains[d], kPlanes[p], bews[b], config.window_scale);
            });

            Table t{{"domain", "plane", "bew_deg", "segment", "mean_rms_as_deg", "mean_rms_ds_s", "n_locations"}, {}};
            for (int d = 0; d < 2; ++d)
                for (int p = 0; p < 2; ++p)
                    for (const auto &r : average_spreads(traj, bews, per[d][p]))
                        t.add_row({text(to_string(kDomains[d])), text(to_string(kPlanes[p])), r.bew_deg,
                                   text(to_string(r.segment)), r.mean_rms_as_deg, r.mean_rms_ds_s,
                                   integer(std::int64_t(r.n_locations))});
            return t;
        }

        Table weighted_table(const RunConfig &config, const Trajectory &traj)
        {
            constexpr std::string_view kModes[] = {"unweighted", "beamweight", "beamweight_windowed"};
            struct Entry
            {
                SpreadResult angular, delay;
            };
            const std::size_t n = traj.snapshots.size();
            std::vector<std::array<std::array<Entry, 3>, 2>> per(n);

            parallel_for(n, config.threads, [&](std::size_t i) {
                const Snapshot &s = traj.snapshots[i];
                std::optional<AntennaPattern> rx, tx;
                if (config.rx_weighting)
                    rx = aligned_pattern(s, Domain::Aoa, config.weight_hpbw_az_deg, config.weight_hpbw_el_deg,
                                         config.weight_planar);
                if (config.tx_weighting)
                    tx = aligned_pattern(s, Domain::Aod, config.weight_hpbw_az_deg, config.weight_hpbw_el_deg,
                                         config.weight_planar);
                for (int d = 0; d < 2; ++d)
                {
                    const Domain domain = kDomains[d];
                    const Snapshot windowed =
                        filter_beam(s, BeamConfig::in_plane(select_boresight(s, domain), domain, Plane::Azimuth,
                                                            config.weight_hpbw_az_deg, config.window_scale));
                    auto eval = [&](const Snapshot &snap, const std::optional<AntennaPattern> &r,
                                    const std::optional<AntennaPattern> &x) {
                        return Entry{weighted_spread(snap, r, x, domain, Plane::Azimuth, SpreadMetric::Angular),
                                     weighted_spread(snap, r, x, domain, Plane::Azimuth, SpreadMetric::Delay)};
                    };
                    per[i][std::size_t(d)][0] = eval(s, std::nullopt, std::nullopt);
                    per[i][std::size_t(d)][1] = eval(s, rx, tx);
                    per[i][std::size_t(d)][2] = eval(windowed, rx, tx);
                }
            });

            Table t{{"location_index", "segment", "domain", "mode", "mean_deg", "rms_as_deg", "mean_delay_s",
                     "rms_ds_s", "n_mpcs"},
                    {}};
            for (std::size_t i = 0; i < n; ++i)
                for (int d = 0; d < 2; ++d)
                    for (int m = 0; m < 3; ++m)
                    {
                        const Entry &e = per[i][std::size_t(d)][std::size_t(m)];
                        t.add_row({integer(traj.snapshots[i].location_index),
                                   text(to_string(traj.snapshots[i].segment)), text(to_string(kDomains[d])),
                                   text(kModes[m]), e.angular.mean, e.angular.rms, e.delay.mean, e.delay.rms,
                                   integer(std::int64_t(e.angular.n_mpcs_in_beam))});
                    }
            return t;
        }

        ConeGeometry geometry_for(const RunConfig &config, const HpbwPair &h)
        {
            return {h.az_deg, h.el_deg, config.cone_scale, config.cone_domain};
        }

        /// decompositions[location][hpbw pair]
        std::vector<std::vector<ConeDecomposition>> decompose(const RunConfig &config, const Trajectory &traj,
                                                              const Trajectory *companion)
        {
            if (companion && (companion->snapshots.size() != traj.snapshots.size()))
                throw ComputationError("companion trajectory covers different locations");
            std::vector<std::vector<ConeDecomposition>> out(traj.snapshots.size());
            parallel_for(traj.snapshots.size(), config.threads, [&](std::size_t i) {
                for (const auto &h : config.cone_hpbw)
                {
                    const ConeGeometry g = geometry_for(config, h);
                    out[i].push_back(companion
                                         ? build_cones_hinted(traj.snapshots[i], companion->snapshots[i], g,
                                                              config.max_cones)
                                         : build_cones(traj.snapshots[i], g, config.max_cones));
                }
            });
            return out;
        }

        std::vector<Cell> location_cells(const Snapshot &s, const HpbwPair &h)
        {
            return {integer(s.location_index), text(to_string(s.segment)), h.az_deg, h.el_deg};
        }
    }

    void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &fn)
    {
        unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
        workers = unsigned(std::min<std::size_t>(workers, n));
        if (workers <= 1)
        {
            for (std::size_t i = 0; i < n; ++i)
                fn(i);
            return;
        }

        std::vector<std::exception_ptr> errors(n);
        std::atomic<std::size_t> next{0};
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&] {
                    for (std::size_t i = next++; i < n; i = next++)
                    {
                        try
                        {
                            fn(i);
                        }
                        catch (...)
                        {
                            errors[i] = std::current_exception();
                        }
                    }
                });
        }
        for (const auto &e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    std::vector<ResultFile> stats_tables(const RunConfig &config, const Trajectory &trajectory)
    {
        const Trajectory traj = prepared(config, trajectory);
        return {{"mpct_sweep.csv", mpct_sweep_table(config, trajectory)},
                {"path_loss.csv", path_loss_table(config, trajectory)},
                {"spread_vs_bew.csv", spread_table(config, traj)},
                {"weighted_spread.csv", weighted_table(config, traj)}};
    }

    std::vector<ResultFile> cone_tables(const RunConfig &config, const Trajectory &trajectory,
                                        const Trajectory *companion)
    {
        const Trajectory traj = prepared(config, trajectory);
        std::optional<Trajectory> hint;
        if (companion)
            hint = prepared(config, *companion);
        const auto decomps = decompose(config, traj, hint ? &*hint : nullptr);

        Table fractions{{"location_index", "segment", "hpbw_az_deg", "hpbw_el_deg"}, {}};
        for (int r = 1; r <= config.max_cones; ++r)
            fractions.columns.push_back("cone_" + std::to_string(r));
        fractions.columns.push_back("residual");

        Table tracks{{"location_index", "segment", "hpbw_az_deg", "hpbw_el_deg", "rank", "present", "power_dbm",
                      "aoa_az_deg", "aoa_el_deg", "aod_az_deg", "aod_el_deg"},
                     {}};

        for (std::size_t i = 0; i < traj.snapshots.size(); ++i)
        {
            const Snapshot &s = traj.snapshots[i];
            for (std::size_t h = 0; h < config.cone_hpbw.size(); ++h)
            {
                const ConeDecomposition &d = decomps[i][h];
                auto row = location_cells(s, config.cone_hpbw[h]);
                const auto frac = fractional_power(d);
                for (int r = 0; r < config.max_cones; ++r)
                    row.emplace_back(std::size_t(r) < frac.size() ? frac[std::size_t(r)] : 0.0);
                row.emplace_back(residual_fraction(d));
                fractions.add_row(std::move(row));

                for (const auto &rec : cone_track_records(s, d, config.max_cones))
                {
                    auto tr = location_cells(s, config.cone_hpbw[h]);
                    tr.push_back(integer(rec.rank));
                    tr.push_back(integer(rec.strongest ? 1 : 0));
                    if (rec.strongest)
                    {
                        const auto &m = *rec.strongest;
                        tr.insert(tr.end(), {m.power_dbm, m.aoa.az_deg, m.aoa.el_deg, m.aod.az_deg, m.aod.el_deg});
                    }
                    else
                        tr.resize(tr.size() + 5);
                    tracks.add_row(std::move(tr));
                }
            }
        }
        return {{"cone_fractions.csv", std::move(fractions)}, {"cone_tracks.csv", std::move(tracks)}};
    }

    std::vector<ResultFile> blockage_tables(const RunConfig &config, const Trajectory &trajectory)
    {
        const Trajectory traj = prepared(config, trajectory);
        const auto decomps = decompose(config, traj, nullptr);

        Table t{{"location_index", "segment", "hpbw_az_deg", "hpbw_el_deg", "blocked", "outage", "fallback_cone",
                 "mpc_index", "power_dbm", "power_drop_db"},
                {}};
        for (std::size_t i = 0; i < traj.snapshots.size(); ++i)
        {
            const Snapshot &s = traj.snapshots[i];
            const double best = s.mpcs[strongest_index(s.mpcs)].power_dbm;
            for (std::size_t h = 0; h < config.cone_hpbw.size(); ++h)
            {
                const ConeDecomposition &d = decomps[i][h];
                const int n_cones = int(d.cones.size());

                // nothing blocked, each cone alone, then cones 1..r together
                std::vector<std::pair<std::string, std::vector<int>>> scenarios{{"none", {}}};
                for (int r = 1; r <= n_cones; ++r)
                    scenarios.push_back({std::to_string(r), {r}});
                for (int r = 2; r <= n_cones; ++r)
                {
                    std::vector<int> ranks;
                    std::string label;
                    for (int k = 1; k <= r; ++k)
                    {
                        ranks.push_back(k);
                        label += (k > 1 ? "+" : "") + std::to_string(k);
                    }
                    scenarios.push_back({label, ranks});
                }

                for (const auto &[label, ranks] : scenarios)
                {
                    auto row = location_cells(s, config.cone_hpbw[h]);
                    row.push_back(text(label));
                    const auto fb = blocked_fallback(s, d, ranks);
                    row.push_back(integer(fb ? 0 : 1));
                    if (fb)
                    {
                        row.push_back(fb->cone_rank ? text(std::to_string(*fb->cone_rank)) : text("residual"));
                        row.push_back(integer(std::int64_t(fb->mpc_index)));
                        row.push_back(fb->power_dbm);
                        row.push_back(best - fb->power_dbm);
                    }
                    else
                        row.resize(row.size() + 4);
                    t.add_row(std::move(row));
                }
            }
        }
        return {{"blockage.csv", std::move(t)}};
    }

    std::vector<ResultFile> congruency_tables(const Trajectory &a, const Trajectory &b)
    {
        validate(a);
        validate(b);
        Table t{{"location_index", "band_a", "band_b", "offset_deg"}, {}};
        for (const auto &r : congruency_offset(a, b))
            t.add_row({integer(r.location_index), text(a.band.label), text(b.band.label), r.offset_deg});
        return {{"congruency.csv", std::move(t)}};
    }

    std::vector<ResultFile> run_pipeline(const RunConfig &config, const Trajectory &trajectory)
    {
        auto out = stats_tables(config, trajectory);
        auto cones = cone_tables(config, trajectory);
        auto blockage = blockage_tables(config, trajectory);
        out.insert(out.end(), std::make_move_iterator(cones.begin()), std::make_move_iterator(cones.end()));
        out.insert(out.end(), std::make_move_iterator(blockage.begin()), std::make_move_iterator(blockage.end()));
        return out;
    }

    void write_results(const std::vector<ResultFile> &results, const std::string &directory)
    {
        std::error_code ec;
        std::filesystem::create_directories(directory, ec);
        if (ec)
            throw ComputationError("cannot create output directory " + directory + ": " + ec.message());
        for (const auto &r : results)
        {
            const auto path = std::filesystem::path(directory) / r.name;
            const std::string csv = to_csv(r.table);
            std::ofstream out(path, std::ios::binary);
            if (!out || !out.write(csv.data(), std::streamsize(csv.size())))
                throw ComputationError("cannot write " + path.string());
        }
    }
}
