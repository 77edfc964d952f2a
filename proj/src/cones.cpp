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

#include "v2xmpc/cones.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "v2xmpc/errors.hpp"

namespace v2xmpc
{
    namespace
    {
        bool stronger(const Mpc &a, const Mpc &b)
        {
            return a.power_dbm > b.power_dbm || (a.power_dbm == b.power_dbm && a.delay_s < b.delay_s);
        }

        std::optional<std::size_t> strongest_unassigned(std::span<const Mpc> mpcs, const std::vector<bool> &assigned)
        {
            std::optional<std::size_t> best;
            for (std::size_t i = 0; i < mpcs.size(); ++i)
                if (!assigned[i] && (!best || stronger(mpcs[i], mpcs[*best])))
                    best = i;
            return best;
        }

        ConeDecomposition start(const Snapshot &snapshot, const ConeGeometry &geometry, int max_cones)
        {
            validate(geometry);
            if (max_cones < 1)
                throw ConfigError("max_cones must be >= 1");
            if (snapshot.mpcs.empty())
                throw ComputationError("no MPCs");
            ConeDecomposition d;
            const Eigen::ArrayXd w = relative_linear_power(snapshot.mpcs);
            d.power_lin.assign(w.begin(), w.end());
            d.total_power_lin = w.sum();
            return d;
        }

        Cone claim(const Snapshot &snapshot, const ConeGeometry &geometry, int rank, Direction boresight,
                   std::vector<bool> &assigned)
        {
            Cone cone{rank, boresight, geometry.hpbw_az_deg, geometry.hpbw_el_deg, {}, std::nullopt};
            for (std::size_t i = 0; i < snapshot.mpcs.size(); ++i)
            {
                if (assigned[i] ||
                    !cone_region_contains(geometry, boresight, mpc_direction(snapshot.mpcs[i], geometry.domain)))
                    continue;
                assigned[i] = true;
                cone.member_indices.push_back(i);
            }
            return cone;
        }

        void finish(ConeDecomposition &d, const std::vector<bool> &assigned)
        {
            for (std::size_t i = 0; i < assigned.size(); ++i)
                if (!assigned[i])
                    d.residual_indices.push_back(i);
        }
    }

    void validate(const ConeGeometry &g)
    {
        auto ok = [](double w) { return w > 0.0 && w <= 180.0; };
        if (!ok(g.hpbw_az_deg) || !ok(g.hpbw_el_deg))
            throw ConfigError("cone HPBW must lie in (0, 180] degrees");
        if (!(g.scale > 0.0) || !std::isfinite(g.scale))
            throw ConfigError("cone scale must be > 0");
    }

    bool cone_region_contains(const ConeGeometry &g, Direction boresight, Direction d)
    {
        const double a = 0.5 * g.scale * g.hpbw_az_deg, b = 0.5 * g.scale * g.hpbw_el_deg;
        const double u = wrap_offset(d.az_deg - boresight.az_deg) / a;
        const double v = (d.el_deg - boresight.el_deg) / b;
        return u * u + v * v <= 1.0;
    }

    ConeDecomposition build_cones(const Snapshot &snapshot, const ConeGeometry &geometry, int max_cones)
    {
        ConeDecomposition d = start(snapshot, geometry, max_cones);
        std::vector<bool> assigned(snapshot.mpcs.size(), false);
        for (int rank = 1; rank <= max_cones; ++rank)
        {
            const auto seed = strongest_unassigned(snapshot.mpcs, assigned);
            if (!seed)
                break;
            Cone cone = claim(snapshot, geometry, rank, mpc_direction(snapshot.mpcs[*seed], geometry.domain), assigned);
            cone.boresight_index = *seed;
            d.cones.push_back(std::move(cone));
        }
        finish(d, assigned);
        return d;
    }

    ConeDecomposition build_cones_hinted(const Snapshot &target, const Snapshot &companion,
                                         const ConeGeometry &geometry, int max_cones)
    {
        if (target.location_index != companion.location_index)
            throw ComputationError("hinted cones: companion snapshot is for location " +
                                   std::to_string(companion.location_index));
        const ConeDecomposition hint = build_cones(companion, geometry, max_cones);
        ConeDecomposition d = start(target, geometry, max_cones);
        std::vector<bool> assigned(target.mpcs.size(), false);
        for (const Cone &h : hint.cones)
            d.cones.push_back(claim(target, geometry, h.rank, h.boresight, assigned));
        finish(d, assigned);
        return d;
    }

    std::vector<double> fractional_power(const ConeDecomposition &d)
    {
        std::vector<double> out;
        out.reserve(d.cones.size());
        for (const Cone &c : d.cones)
        {
            double p = 0.0;
            for (auto i : c.member_indices)
                p += d.power_lin[i];
            out.push_back(p / d.total_power_lin);
        }
        return out;
    }

    double residual_fraction(const ConeDecomposition &d)
    {
        double p = 0.0;
        for (auto i : d.residual_indices)
            p += d.power_lin[i];
        return p / d.total_power_lin;
    }

    std::optional<Fallback> blocked_fallback(const Snapshot &snapshot, const ConeDecomposition &d,
                                             std::span<const int> blocked_ranks)
    {
        std::vector<std::optional<int>> rank_of(snapshot.mpcs.size());
        for (const Cone &c : d.cones)
            for (auto i : c.member_indices)
                rank_of.at(i) = c.rank;

        for (int r : blocked_ranks)
            if (std::none_of(d.cones.begin(), d.cones.end(), [r](const Cone &c) { return c.rank == r; }))
                throw ConfigError("blocked cone rank " + std::to_string(r) + " does not exist");

        auto blocked = [&](std::size_t i) {
            return rank_of[i] && std::find(blocked_ranks.begin(), blocked_ranks.end(), *rank_of[i]) != blocked_ranks.end();
        };

        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < snapshot.mpcs.size(); ++i)
            if (!blocked(i) && (!best || stronger(snapshot.mpcs[i], snapshot.mpcs[*best])))
                best = i;
        if (!best)
            return std::nullopt;
        return Fallback{*best, snapshot.mpcs[*best].power_dbm, rank_of[*best]};
    }

    std::vector<ConeTrackRecord> cone_track_records(const Snapshot &snapshot, const ConeDecomposition &d,
                                                    int max_cones)
    {
        std::vector<ConeTrackRecord> out;
        for (int rank = 1; rank <= max_cones; ++rank)
        {
            ConeTrackRecord rec{snapshot.location_index, snapshot.segment, rank, std::nullopt};
            auto it = std::find_if(d.cones.begin(), d.cones.end(), [rank](const Cone &c) { return c.rank == rank; });
            if (it != d.cones.end() && !it->member_indices.empty())
            {
                std::size_t best = it->member_indices.front();
                for (auto i : it->member_indices)
                    if (stronger(snapshot.mpcs[i], snapshot.mpcs[best]))
                        best = i;
                const Mpc &m = snapshot.mpcs[best];
                rec.strongest = ConeTrackSample{m.power_dbm, m.aoa(), m.aod()};
            }
            out.push_back(rec);
        }
        return out;
    }

    std::vector<ConeTrackRecord> cone_tracks(const Trajectory &trajectory, const ConeGeometry &geometry, int max_cones)
    {
        if (trajectory.snapshots.empty())
            throw ComputationError("cone tracks: trajectory has no snapshots");
        std::vector<ConeTrackRecord> out;
        for (const auto &s : trajectory.snapshots)
        {
            auto recs = cone_track_records(s, build_cones(s, geometry, max_cones), max_cones);
            out.insert(out.end(), recs.begin(), recs.end());
        }
        return out;
    }
}
