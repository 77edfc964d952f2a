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

#include "brute_force.hpp"

#include <cmath>
#include <cstdint>

namespace reference
{
    using v2xmpc::Mpc;
    using v2xmpc::Table;
    using v2xmpc::Trajectory;

    namespace
    {
        const double kPi = std::acos(-1.0);

        const char *segment_name(v2xmpc::Segment s) { return s == v2xmpc::Segment::Los ? "LOS" : "NLOS"; }

        int bounce(const Mpc &m)
        {
            if (m.n_diffractions > 0 || m.n_reflections > 2)
                return 3;
            return m.n_reflections;
        }

        const char *bounce_name(int c)
        {
            static const char *names[] = {"direct", "single", "double", "beyond_double"};
            return names[c];
        }

        double az_of(const Mpc &m, bool aoa) { return aoa ? m.aoa_az_deg : m.aod_az_deg; }
        double el_of(const Mpc &m, bool aoa) { return aoa ? m.aoa_el_deg : m.aod_el_deg; }

        v2xmpc::Cell s(const std::string &x) { return x; }
        v2xmpc::Cell i64(long long x) { return std::int64_t(x); }

        /// In-plane hard window: `azimuth_plane` restricts azimuth, otherwise elevation.
        std::vector<Mpc> window(const std::vector<Mpc> &mpcs, bool aoa, bool azimuth_plane, double bew, double scale)
        {
            const Mpc &b = mpcs[strongest(mpcs)];
            std::vector<Mpc> out;
            for (const Mpc &m : mpcs)
            {
                bool keep = true;
                if (azimuth_plane && bew < 360.0)
                    keep = std::fabs(wrap_offset(az_of(m, aoa) - az_of(b, aoa))) <= scale * bew / 2.0;
                if (!azimuth_plane && bew < 180.0)
                    keep = std::fabs(el_of(m, aoa) - el_of(b, aoa)) <= scale * bew / 2.0;
                if (keep)
                    out.push_back(m);
            }
            return out;
        }

        std::vector<double> plain_weights(const std::vector<Mpc> &mpcs)
        {
            std::vector<double> w;
            for (const Mpc &m : mpcs)
                w.push_back(std::pow(10.0, m.power_dbm / 10.0));
            return w;
        }
    }

    double wrap_offset(double deg)
    {
        double r = std::remainder(deg, 360.0);
        if (r <= -180.0)
            r += 360.0;
        return r;
    }

    double wrap_azimuth(double deg)
    {
        double r = std::remainder(deg, 360.0);
        if (r >= 180.0)
            r -= 360.0;
        return r;
    }

    std::size_t strongest(const std::vector<Mpc> &mpcs)
    {
        std::size_t best = 0;
        for (std::size_t i = 0; i < mpcs.size(); ++i)
        {
            if (mpcs[i].power_dbm > mpcs[best].power_dbm)
                best = i;
            else if (mpcs[i].power_dbm == mpcs[best].power_dbm && mpcs[i].delay_s < mpcs[best].delay_s)
                best = i;
        }
        return best;
    }

    std::vector<Mpc> threshold(const std::vector<Mpc> &mpcs, double mpct_db)
    {
        const double top = mpcs[strongest(mpcs)].power_dbm;
        std::vector<Mpc> out;
        for (const Mpc &m : mpcs)
            if (m.power_dbm >= top - mpct_db)
                out.push_back(m);
        return out;
    }

    MeanRms weighted(const std::vector<double> &values, const std::vector<double> &weights)
    {
        // moments about the heaviest value, so a lone dominant path gives an exact zero
        std::size_t pivot = 0;
        for (std::size_t k = 1; k < values.size(); ++k)
            if (weights[k] > weights[pivot])
                pivot = k;
        const double x0 = values[pivot];
        double sw = 0.0, sx = 0.0;
        for (std::size_t k = 0; k < values.size(); ++k)
        {
            sw += weights[k];
            sx += weights[k] * (values[k] - x0);
        }
        const double shift = sx / sw;
        double sq = 0.0;
        for (std::size_t k = 0; k < values.size(); ++k)
            sq += weights[k] * (values[k] - x0 - shift) * (values[k] - x0 - shift);
        return {x0 + shift, std::sqrt(sq / sw)};
    }

    double gaussian_gain_db(double hpbw_az, double hpbw_el, double off_az, double off_el)
    {
        const double wa = hpbw_az * kPi / 180.0, we = hpbw_el * kPi / 180.0;
        return 10.0 * std::log10(16.0 * kPi / (6.76 * wa * we)) - 12.0 * (off_az / hpbw_az) * (off_az / hpbw_az) -
               12.0 * (off_el / hpbw_el) * (off_el / hpbw_el);
    }

    std::vector<int> greedy_cones(const std::vector<Mpc> &mpcs, bool aoa, double hpbw_az, double hpbw_el, double scale,
                                  int max_cones, std::vector<std::size_t> &seeds)
    {
        std::vector<int> owner(mpcs.size(), -1);
        seeds.clear();
        for (int cone = 0; cone < max_cones; ++cone)
        {
            int seed = -1;
            for (std::size_t k = 0; k < mpcs.size(); ++k)
            {
                if (owner[k] != -1)
                    continue;
                if (seed < 0 || mpcs[k].power_dbm > mpcs[std::size_t(seed)].power_dbm ||
                    (mpcs[k].power_dbm == mpcs[std::size_t(seed)].power_dbm &&
                     mpcs[k].delay_s < mpcs[std::size_t(seed)].delay_s))
                    seed = int(k);
            }
            if (seed < 0)
                break;
            seeds.push_back(std::size_t(seed));
            const double baz = az_of(mpcs[std::size_t(seed)], aoa), bel = el_of(mpcs[std::size_t(seed)], aoa);
            for (std::size_t k = 0; k < mpcs.size(); ++k)
            {
                if (owner[k] != -1)
                    continue;
                const double u = wrap_offset(az_of(mpcs[k], aoa) - baz) / (scale * hpbw_az / 2.0);
                const double v = (el_of(mpcs[k], aoa) - bel) / (scale * hpbw_el / 2.0);
                if (u * u + v * v <= 1.0)
                    owner[k] = cone;
            }
        }
        return owner;
    }

    std::map<std::string, Table> all_tables(const v2xmpc::RunConfig &cfg, const Trajectory &raw)
    {
        std::map<std::string, Table> out;
        const v2xmpc::Segment segs[] = {v2xmpc::Segment::Los, v2xmpc::Segment::Nlos};

        // MPC count sweep over the raw data
        {
            Table t{{"mpct_db", "segment", "bounce_class", "mean_mpc_count"}, {}};
            for (double mpct : cfg.mpct_sweep)
                for (auto seg : segs)
                {
                    double counts[4] = {0, 0, 0, 0};
                    int n = 0;
                    for (const auto &snap : raw.snapshots)
                    {
                        if (snap.segment != seg)
                            continue;
                        ++n;
                        for (const Mpc &m : threshold(snap.mpcs, mpct))
                            counts[bounce(m)] += 1.0;
                    }
                    if (n == 0)
                        continue;
                    for (int c = 0; c < 4; ++c)
                        t.rows.push_back({mpct, s(segment_name(seg)), s(bounce_name(c)), counts[c] / n});
                }
            out["mpct_sweep.csv"] = t;
        }

        // path loss
        {
            Table t{{"mpct_db", "segment", "bounce_class", "mean_pl_db", "n_mpcs"}, {}};
            for (auto seg : segs)
                for (int c = 0; c < 4; ++c)
                {
                    double sum_db = 0.0, sum_lin = 0.0;
                    long long n = 0;
                    for (const auto &snap : raw.snapshots)
                    {
                        if (snap.segment != seg)
                            continue;
                        for (const Mpc &m : threshold(snap.mpcs, cfg.mpct_db))
                        {
                            if (bounce(m) != c)
                                continue;
                            sum_db += raw.tx_power_dbm - m.power_dbm;
                            sum_lin += std::pow(10.0, m.power_dbm / 10.0);
                            ++n;
                        }
                    }
                    if (n == 0)
                        continue;
                    const double pl = cfg.pl_averaging == v2xmpc::PlAveraging::Db
                                          ? sum_db / double(n)
                                          : raw.tx_power_dbm - 10.0 * std::log10(sum_lin / double(n));
                    t.rows.push_back({cfg.mpct_db, s(segment_name(seg)), s(bounce_name(c)), pl, i64(n)});
                }
            out["path_loss.csv"] = t;
        }

        std::vector<v2xmpc::Snapshot> snaps;
        for (const auto &snap : raw.snapshots)
            snaps.push_back({snap.location_index, threshold(snap.mpcs, cfg.mpct_db), snap.segment});

        // beamwidth sweeps
        {
            Table t{{"domain", "plane", "bew_deg", "segment", "mean_rms_as_deg", "mean_rms_ds_s", "n_locations"}, {}};
            for (bool aoa : {true, false})
                for (bool az_plane : {true, false})
                    for (double bew : cfg.bew_values)
                        for (auto seg : segs)
                        {
                            double sum_as = 0.0, sum_ds = 0.0;
                            long long n = 0;
                            for (const auto &snap : snaps)
                            {
                                if (snap.segment != seg)
                                    continue;
                                const Mpc &b = snap.mpcs[strongest(snap.mpcs)];
                                const auto in = window(snap.mpcs, aoa, az_plane, bew, cfg.window_scale);
                                std::vector<double> ang, del;
                                for (const Mpc &m : in)
                                {
                                    ang.push_back(az_plane ? wrap_offset(az_of(m, aoa) - az_of(b, aoa))
                                                           : el_of(m, aoa) - el_of(b, aoa));
                                    del.push_back(m.delay_s);
                                }
                                const auto w = plain_weights(in);
                                sum_as += weighted(ang, w).rms;
                                sum_ds += weighted(del, w).rms;
                                ++n;
                            }
                            if (n == 0)
                                continue;
                            t.rows.push_back({s(aoa ? "AOA" : "AOD"), s(az_plane ? "azimuth" : "elevation"), bew,
                                              s(segment_name(seg)), sum_as / double(n), sum_ds / double(n), i64(n)});
                        }
            out["spread_vs_bew.csv"] = t;
        }

        // antenna-gain weighted spreads, azimuth plane
        {
            Table t{{"location_index", "segment", "domain", "mode", "mean_deg", "rms_as_deg", "mean_delay_s",
                     "rms_ds_s", "n_mpcs"},
                    {}};
            for (const auto &snap : snaps)
            {
                const Mpc &b = snap.mpcs[strongest(snap.mpcs)];
                for (bool aoa : {true, false})
                {
                    const double ref_az = az_of(b, aoa);
                    for (int mode = 0; mode < 3; ++mode)
                    {
                        const auto in = mode == 2 ? window(snap.mpcs, aoa, true, cfg.weight_hpbw_az_deg,
                                                           cfg.window_scale)
                                                  : snap.mpcs;
                        std::vector<double> ang, del, w;
                        for (const Mpc &m : in)
                        {
                            double g = 1.0;
                            if (mode > 0 && cfg.rx_weighting)
                            {
                                const double oa = wrap_offset(m.aoa_az_deg - b.aoa_az_deg);
                                const double oe = cfg.weight_planar ? 0.0 : wrap_offset(m.aoa_el_deg - b.aoa_el_deg);
                                g *= std::pow(10.0, gaussian_gain_db(cfg.weight_hpbw_az_deg, cfg.weight_hpbw_el_deg,
                                                                     oa, oe) / 10.0);
                            }
                            if (mode > 0 && cfg.tx_weighting)
                            {
                                const double oa = wrap_offset(m.aod_az_deg - b.aod_az_deg);
                                const double oe = cfg.weight_planar ? 0.0 : wrap_offset(m.aod_el_deg - b.aod_el_deg);
                                g *= std::pow(10.0, gaussian_gain_db(cfg.weight_hpbw_az_deg, cfg.weight_hpbw_el_deg,
                                                                     oa, oe) / 10.0);
                            }
                            w.push_back(std::pow(10.0, m.power_dbm / 10.0) * g);
                            ang.push_back(wrap_offset(az_of(m, aoa) - ref_az));
                            del.push_back(m.delay_s);
                        }
                        const auto a = weighted(ang, w);
                        const auto d = weighted(del, w);
                        static const char *modes[] = {"unweighted", "beamweight", "beamweight_windowed"};
                        t.rows.push_back({i64(snap.location_index), s(segment_name(snap.segment)),
                                          s(aoa ? "AOA" : "AOD"), s(modes[mode]), wrap_azimuth(ref_az + a.mean), a.rms,
                                          d.mean, d.rms, i64((long long)in.size())});
                    }
                }
            }
            out["weighted_spread.csv"] = t;
        }

        // cones, tracks and blockage
        {
            const bool aoa = cfg.cone_domain == v2xmpc::Domain::Aoa;
            Table fr{{"location_index", "segment", "hpbw_az_deg", "hpbw_el_deg"}, {}};
            for (int r = 1; r <= cfg.max_cones; ++r)
                fr.columns.push_back("cone_" + std::to_string(r));
            fr.columns.push_back("residual");
            Table tr{{"location_index", "segment", "hpbw_az_deg", "hpbw_el_deg", "rank", "present", "power_dbm",
                      "aoa_az_deg", "aoa_el_deg", "aod_az_deg", "aod_el_deg"},
                     {}};
            Table bl{{"location_index", "segment", "hpbw_az_deg", "hpbw_el_deg", "blocked", "outage", "fallback_cone",
                      "mpc_index", "power_dbm", "power_drop_db"},
                     {}};

            for (const auto &snap : snaps)
                for (const auto &h : cfg.cone_hpbw)
                {
                    std::vector<std::size_t> seeds;
                    const auto owner =
                        greedy_cones(snap.mpcs, aoa, h.az_deg, h.el_deg, cfg.cone_scale, cfg.max_cones, seeds);
                    const int n_cones = int(seeds.size());
                    std::vector<v2xmpc::Cell> prefix{i64(snap.location_index), s(segment_name(snap.segment)),
                                                     h.az_deg, h.el_deg};

                    double total = 0.0;
                    std::vector<double> cone_power(std::size_t(cfg.max_cones), 0.0);
                    double residual = 0.0;
                    for (std::size_t k = 0; k < snap.mpcs.size(); ++k)
                    {
                        const double p = std::pow(10.0, snap.mpcs[k].power_dbm / 10.0);
                        total += p;
                        (owner[k] < 0 ? residual : cone_power[std::size_t(owner[k])]) += p;
                    }
                    auto row = prefix;
                    for (double p : cone_power)
                        row.push_back(p / total);
                    row.push_back(residual / total);
                    fr.rows.push_back(row);

                    for (int r = 0; r < cfg.max_cones; ++r)
                    {
                        auto rec = prefix;
                        rec.push_back(i64(r + 1));
                        if (r < n_cones)
                        {
                            // the seed is the strongest member by construction
                            const Mpc &m = snap.mpcs[seeds[std::size_t(r)]];
                            rec.insert(rec.end(), {i64(1), m.power_dbm, m.aoa_az_deg, m.aoa_el_deg, m.aod_az_deg,
                                                   m.aod_el_deg});
                        }
                        else
                            rec.insert(rec.end(), {i64(0), {}, {}, {}, {}, {}});
                        tr.rows.push_back(rec);
                    }

                    const double top = snap.mpcs[strongest(snap.mpcs)].power_dbm;
                    std::vector<std::pair<std::string, std::vector<int>>> scen{{"none", {}}};
                    for (int r = 0; r < n_cones; ++r)
                        scen.push_back({std::to_string(r + 1), {r}});
                    for (int r = 1; r < n_cones; ++r)
                    {
                        std::vector<int> set;
                        std::string label;
                        for (int k = 0; k <= r; ++k)
                        {
                            set.push_back(k);
                            label += (k ? "+" : "") + std::to_string(k + 1);
                        }
                        scen.push_back({label, set});
                    }
                    for (const auto &[label, set] : scen)
                    {
                        int pick = -1;
                        for (std::size_t k = 0; k < snap.mpcs.size(); ++k)
                        {
                            bool blocked = false;
                            for (int c : set)
                                blocked = blocked || owner[k] == c;
                            if (blocked)
                                continue;
                            const Mpc &m = snap.mpcs[k];
                            if (pick < 0 || m.power_dbm > snap.mpcs[std::size_t(pick)].power_dbm ||
                                (m.power_dbm == snap.mpcs[std::size_t(pick)].power_dbm &&
                                 m.delay_s < snap.mpcs[std::size_t(pick)].delay_s))
                                pick = int(k);
                        }
                        auto row = prefix;
                        row.push_back(s(label));
                        if (pick < 0)
                            row.insert(row.end(), {i64(1), {}, {}, {}, {}});
                        else
                        {
                            const int o = owner[std::size_t(pick)];
                            const double p = snap.mpcs[std::size_t(pick)].power_dbm;
                            row.insert(row.end(), {i64(0), o < 0 ? s("residual") : s(std::to_string(o + 1)),
                                                   i64(pick), p, top - p});
                        }
                        bl.rows.push_back(row);
                    }
                }
            out["cone_fractions.csv"] = fr;
            out["cone_tracks.csv"] = tr;
            out["blockage.csv"] = bl;
        }
        return out;
    }
}
