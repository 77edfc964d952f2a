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

#include "v2xmpc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "v2xmpc/errors.hpp"
#include "v2xmpc/weighted_stats.hpp"

namespace v2xmpc
{
    std::string_view to_string(Segment s) noexcept
    {
        return s == Segment::Los ? "LOS" : "NLOS";
    }

    std::string_view to_string(BounceClass c) noexcept
    {
        switch (c)
        {
        case BounceClass::Direct:
            return "direct";
        case BounceClass::Single:
            return "single";
        case BounceClass::Double:
            return "double";
        case BounceClass::BeyondDouble:
            return "beyond_double";
        }
        return "?";
    }

    void validate(const Mpc &m)
    {
        auto fail = [](const std::string &what) { throw ComputationError("invalid MPC: " + what); };
        if (!std::isfinite(m.power_dbm))
            fail("power_dbm must be finite");
        if (!(m.phase_deg >= 0.0 && m.phase_deg < 360.0))
            fail("phase_deg outside [0, 360)");
        if (!(m.delay_s >= 0.0) || !std::isfinite(m.delay_s))
            fail("delay_s must be finite and >= 0");
        if (!(m.aoa_az_deg >= -180.0 && m.aoa_az_deg < 180.0) || !(m.aod_az_deg >= -180.0 && m.aod_az_deg < 180.0))
            fail("azimuth outside [-180, 180)");
        if (!(m.aoa_el_deg >= -90.0 && m.aoa_el_deg <= 90.0) || !(m.aod_el_deg >= -90.0 && m.aod_el_deg <= 90.0))
            fail("elevation outside [-90, 90]");
        if (m.n_reflections < 0 || m.n_diffractions < 0)
            fail("interaction counts must be >= 0");
    }

    void validate(const Trajectory &t)
    {
        if (!(t.band.freq_ghz > 0.0) || !std::isfinite(t.band.freq_ghz))
            throw ComputationError("band frequency must be > 0 GHz");
        if (!std::isfinite(t.tx_power_dbm))
            throw ComputationError("tx power must be finite");
        int previous = 0;
        for (const auto &s : t.snapshots)
        {
            if (s.location_index < 1)
                throw ComputationError("location_index must be >= 1");
            if (s.location_index <= previous)
                throw ComputationError("snapshots must be strictly ordered by location_index (at " +
                                       std::to_string(s.location_index) + ")");
            previous = s.location_index;
            if (s.mpcs.empty())
                throw ComputationError("no MPCs at location " + std::to_string(s.location_index));
            for (const auto &m : s.mpcs)
                validate(m);
        }
    }

    Eigen::ArrayXd powers_dbm(std::span<const Mpc> mpcs)
    {
        Eigen::ArrayXd p(static_cast<Eigen::Index>(mpcs.size()));
        for (std::size_t i = 0; i < mpcs.size(); ++i)
            p(static_cast<Eigen::Index>(i)) = mpcs[i].power_dbm;
        return p;
    }

    Eigen::ArrayXd relative_linear_power(std::span<const Mpc> mpcs)
    {
        if (mpcs.empty())
            return {};
        const Eigen::ArrayXd p = powers_dbm(mpcs);
        return db_to_linear((p - p.maxCoeff()).eval());
    }

    std::size_t strongest_index(std::span<const Mpc> mpcs)
    {
        if (mpcs.empty())
            throw ComputationError("no MPCs");
        std::size_t best = 0;
        for (std::size_t i = 1; i < mpcs.size(); ++i)
        {
            const auto &c = mpcs[i], &b = mpcs[best];
            if (c.power_dbm > b.power_dbm || (c.power_dbm == b.power_dbm && c.delay_s < b.delay_s))
                best = i;
        }
        return best;
    }

    std::vector<std::size_t> mpct_survivors(std::span<const Mpc> mpcs, double mpct_db)
    {
        if (mpcs.empty())
            throw ComputationError("no MPCs");
        if (!(mpct_db >= 0.0))
            throw ConfigError("MPCT must be >= 0 dB");
        const double pmax = mpcs[strongest_index(mpcs)].power_dbm;
        std::vector<std::size_t> keep;
        keep.reserve(mpcs.size());
        // compare the gap rather than an absolute floor so a uniform offset cannot flip a boundary case
        for (std::size_t i = 0; i < mpcs.size(); ++i)
            if (pmax - mpcs[i].power_dbm <= mpct_db)
                keep.push_back(i);
        return keep;
    }

    Snapshot apply_mpct(const Snapshot &snapshot, double mpct_db)
    {
        Snapshot out{snapshot.location_index, {}, snapshot.segment};
        const auto keep = mpct_survivors(snapshot.mpcs, mpct_db);
        out.mpcs.reserve(keep.size());
        for (auto i : keep)
            out.mpcs.push_back(snapshot.mpcs[i]);
        return out;
    }

    Trajectory apply_mpct(const Trajectory &trajectory, double mpct_db)
    {
        Trajectory out{trajectory.band, {}, trajectory.tx_power_dbm};
        out.snapshots.reserve(trajectory.snapshots.size());
        for (const auto &s : trajectory.snapshots)
            out.snapshots.push_back(apply_mpct(s, mpct_db));
        return out;
    }

    BounceClass classify_bounce(const Mpc &mpc) noexcept
    {
        if (mpc.n_diffractions > 0)
            return BounceClass::BeyondDouble;
        switch (mpc.n_reflections)
        {
        case 0:
            return BounceClass::Direct;
        case 1:
            return BounceClass::Single;
        case 2:
            return BounceClass::Double;
        default:
            return BounceClass::BeyondDouble;
        }
    }

    std::vector<MpctSweepRow> mpct_sweep(const Trajectory &trajectory, std::span<const double> mpct_values)
    {
        if (mpct_values.empty())
            throw ConfigError("MPCT sweep needs at least one value");

        std::vector<MpctSweepRow> rows;
        for (double mpct : mpct_values)
        {
            for (Segment seg : kSegments)
            {
                std::size_t n_snapshots = 0;
                std::map<BounceClass, std::size_t> counts;
                for (const auto &s : trajectory.snapshots)
                {
                    if (s.segment != seg)
                        continue;
                    ++n_snapshots;
                    for (auto i : mpct_survivors(s.mpcs, mpct))
                        ++counts[classify_bounce(s.mpcs[i])];
                }
                if (n_snapshots == 0)
                    continue;
                for (BounceClass c : kBounceClasses)
                    rows.push_back({mpct, seg, c, double(counts[c]) / double(n_snapshots)});
            }
        }
        return rows;
    }

    std::vector<PathLossRow> avg_path_loss(const Trajectory &trajectory, double mpct_db, PlAveraging averaging)
    {
        if (trajectory.snapshots.empty())
            throw ComputationError("path loss: trajectory has no snapshots");

        std::vector<PathLossRow> rows;
        for (Segment seg : kSegments)
        {
            std::map<BounceClass, std::vector<double>> by_class;
            for (const auto &s : trajectory.snapshots)
            {
                if (s.segment != seg)
                    continue;
                for (auto i : mpct_survivors(s.mpcs, mpct_db))
                    by_class[classify_bounce(s.mpcs[i])].push_back(s.mpcs[i].power_dbm);
            }
            for (BounceClass c : kBounceClasses)
            {
                auto it = by_class.find(c);
                if (it == by_class.end())
                    continue;
                const Eigen::Map<const Eigen::ArrayXd> p(it->second.data(), Eigen::Index(it->second.size()));
                double mean_pl = 0.0;
                if (averaging == PlAveraging::Db)
                    mean_pl = (trajectory.tx_power_dbm - p).mean();
                else
                {
                    const double pmax = p.maxCoeff();
                    const double mean_rel = db_to_linear((p - pmax).eval()).mean();
                    mean_pl = trajectory.tx_power_dbm - (pmax + 10.0 * std::log10(mean_rel));
                }
                rows.push_back({seg, c, mean_pl, it->second.size()});
            }
        }
        if (rows.empty())
            throw ComputationError("path loss: no MPCs after thresholding");
        return rows;
    }

    std::vector<CongruencyRow> congruency_offset(const Trajectory &a, const Trajectory &b)
    {
        if (a.snapshots.size() != b.snapshots.size())
            throw ComputationError("congruency: trajectories cover different locations");
        std::vector<CongruencyRow> rows;
        rows.reserve(a.snapshots.size());
        for (std::size_t i = 0; i < a.snapshots.size(); ++i)
        {
            const auto &sa = a.snapshots[i], &sb = b.snapshots[i];
            if (sa.location_index != sb.location_index)
                throw ComputationError("congruency: location " + std::to_string(sa.location_index) +
                                       " has no counterpart");
            const Mpc &ma = sa.mpcs[strongest_index(sa.mpcs)];
            const Mpc &mb = sb.mpcs[strongest_index(sb.mpcs)];
            rows.push_back({sa.location_index, angular_distance_deg(ma.aoa(), mb.aoa())});
        }
        return rows;
    }
}
