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

#include "v2xmpc/spread.hpp"

#include <cmath>

#include "v2xmpc/errors.hpp"
#include "v2xmpc/weighted_stats.hpp"

namespace v2xmpc
{
    std::string_view to_string(Domain d) noexcept
    {
        return d == Domain::Aoa ? "AOA" : "AOD";
    }

    std::string_view to_string(Plane p) noexcept
    {
        return p == Plane::Azimuth ? "azimuth" : "elevation";
    }

    Direction mpc_direction(const Mpc &mpc, Domain domain) noexcept
    {
        return domain == Domain::Aoa ? mpc.aoa() : mpc.aod();
    }

    BeamConfig BeamConfig::in_plane(Direction boresight, Domain domain, Plane plane, double bew_deg,
                                    double window_scale)
    {
        BeamConfig beam{boresight, 360.0, 180.0, domain, window_scale};
        (plane == Plane::Azimuth ? beam.bew_az_deg : beam.bew_el_deg) = bew_deg;
        return beam;
    }

    void validate(const BeamConfig &beam)
    {
        auto in_range = [](double w) { return w > 0.0 && w <= 360.0; };
        if (!in_range(beam.bew_az_deg) || !in_range(beam.bew_el_deg))
            throw ConfigError("beamwidth must lie in (0, 360] degrees");
        if (!(beam.window_scale > 0.0) || !std::isfinite(beam.window_scale))
            throw ConfigError("beam window scale must be > 0");
    }

    bool beam_contains(const BeamConfig &beam, Direction d)
    {
        if (beam.bew_az_deg < 360.0 &&
            std::abs(wrap_offset(d.az_deg - beam.boresight.az_deg)) > 0.5 * beam.window_scale * beam.bew_az_deg)
            return false;
        if (beam.bew_el_deg < 180.0 &&
            std::abs(d.el_deg - beam.boresight.el_deg) > 0.5 * beam.window_scale * beam.bew_el_deg)
            return false;
        return true;
    }

    Direction select_boresight(const Snapshot &snapshot, Domain domain)
    {
        return mpc_direction(snapshot.mpcs[strongest_index(snapshot.mpcs)], domain);
    }

    Snapshot filter_beam(const Snapshot &snapshot, const BeamConfig &beam)
    {
        validate(beam);
        Snapshot out{snapshot.location_index, {}, snapshot.segment};
        for (const auto &m : snapshot.mpcs)
            if (beam_contains(beam, mpc_direction(m, beam.domain)))
                out.mpcs.push_back(m);
        return out;
    }

    SpreadResult angular_spread_about(std::span<const Mpc> mpcs, const Eigen::ArrayXd &weights, Domain domain,
                                      Plane plane, Direction reference)
    {
        if (mpcs.empty())
            throw ComputationError("no MPCs in beam");
        const auto n = Eigen::Index(mpcs.size());
        Eigen::ArrayXd offsets(n);
        for (Eigen::Index i = 0; i < n; ++i)
        {
            const Direction d = mpc_direction(mpcs[std::size_t(i)], domain);
            offsets(i) = plane == Plane::Azimuth ? wrap_offset(d.az_deg - reference.az_deg)
                                                 : d.el_deg - reference.el_deg;
        }
        const double mean_offset = weighted_mean(offsets, weights);
        const double rms = weighted_rms(offsets, weights, mean_offset);
        const double mean = plane == Plane::Azimuth ? wrap_azimuth(reference.az_deg + mean_offset)
                                                    : reference.el_deg + mean_offset;
        return {mean, rms, mpcs.size()};
    }

    SpreadResult delay_spread_weighted(std::span<const Mpc> mpcs, const Eigen::ArrayXd &weights)
    {
        if (mpcs.empty())
            throw ComputationError("no MPCs in beam");
        const auto n = Eigen::Index(mpcs.size());
        Eigen::ArrayXd delays(n);
        for (Eigen::Index i = 0; i < n; ++i)
            delays(i) = mpcs[std::size_t(i)].delay_s;
        const double mean = weighted_mean(delays, weights);
        return {mean, weighted_rms(delays, weights, mean), mpcs.size()};
    }

    double mean_angle(const Snapshot &snapshot, const BeamConfig &beam, Plane plane)
    {
        return rms_angular_spread(snapshot, beam, plane).mean;
    }

    SpreadResult rms_angular_spread(const Snapshot &snapshot, const BeamConfig &beam, Plane plane)
    {
        const Snapshot in_beam = filter_beam(snapshot, beam);
        return angular_spread_about(in_beam.mpcs, relative_linear_power(in_beam.mpcs), beam.domain, plane,
                                    beam.boresight);
    }

    SpreadResult rms_delay_spread(const Snapshot &snapshot, const BeamConfig &beam)
    {
        const Snapshot in_beam = filter_beam(snapshot, beam);
        return delay_spread_weighted(in_beam.mpcs, relative_linear_power(in_beam.mpcs));
    }

    LocationSpread location_spread(const Snapshot &snapshot, Domain domain, Plane plane, double bew_deg,
                                   double window_scale)
    {
        const BeamConfig beam =
            BeamConfig::in_plane(select_boresight(snapshot, domain), domain, plane, bew_deg, window_scale);
        const Snapshot in_beam = filter_beam(snapshot, beam);
        const Eigen::ArrayXd w = relative_linear_power(in_beam.mpcs);
        return {angular_spread_about(in_beam.mpcs, w, domain, plane, beam.boresight),
                delay_spread_weighted(in_beam.mpcs, w)};
    }

    std::vector<SpreadSweepRow> average_spreads(const Trajectory &trajectory, std::span<const double> bew_values,
                                                const std::vector<std::vector<LocationSpread>> &per_location)
    {
        std::vector<SpreadSweepRow> rows;
        for (std::size_t b = 0; b < bew_values.size(); ++b)
        {
            for (Segment seg : kSegments)
            {
                double sum_as = 0.0, sum_ds = 0.0;
                std::size_t n = 0;
                for (std::size_t i = 0; i < trajectory.snapshots.size(); ++i)
                {
                    if (trajectory.snapshots[i].segment != seg)
                        continue;
                    sum_as += per_location[b][i].angular.rms;
                    sum_ds += per_location[b][i].delay.rms;
                    ++n;
                }
                if (n > 0)
                    rows.push_back({bew_values[b], seg, sum_as / double(n), sum_ds / double(n), n});
            }
        }
        return rows;
    }

    std::vector<SpreadSweepRow> spread_vs_bew(const Trajectory &trajectory, Domain domain, Plane plane,
                                              std::span<const double> bew_values, double window_scale)
    {
        if (bew_values.empty())
            throw ConfigError("beamwidth sweep needs at least one value");
        std::vector<std::vector<LocationSpread>> per_location(bew_values.size());
        for (std::size_t b = 0; b < bew_values.size(); ++b)
        {
            per_location[b].reserve(trajectory.snapshots.size());
            for (const auto &s : trajectory.snapshots)
                per_location[b].push_back(location_spread(s, domain, plane, bew_values[b], window_scale));
        }
        return average_spreads(trajectory, bew_values, per_location);
    }
}
