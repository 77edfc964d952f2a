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

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "v2xmpc/channel.hpp"

namespace v2xmpc
{
    enum class Domain
    {
        Aoa, ///< arrival side (UE)
        Aod  ///< departure side (BS)
    };

    enum class Plane
    {
        Azimuth,
        Elevation
    };

    std::string_view to_string(Domain d) noexcept;
    std::string_view to_string(Plane p) noexcept;

    Direction mpc_direction(const Mpc &mpc, Domain domain) noexcept;

    /// Hard angular window around a boresight.
    ///
    /// An MPC is inside when |wrapped az offset| <= window_scale * bew_az / 2 and
    /// |el offset| <= window_scale * bew_el / 2. An azimuth width of 360 or an
    /// elevation width of 180 (or more) leaves that plane unconstrained.
    struct BeamConfig
    {
        Direction boresight;
        double bew_az_deg = 360.0;
        double bew_el_deg = 180.0;
        Domain domain = Domain::Aoa;
        double window_scale = 1.0;

        /// Beam restricted in one plane only; the other plane spans its entire domain.
        static BeamConfig in_plane(Direction boresight, Domain domain, Plane plane, double bew_deg,
                                   double window_scale = 1.0);
    };

    /// Throws ConfigError for widths outside (0, 360] or a non-positive window scale.
    void validate(const BeamConfig &beam);

    bool beam_contains(const BeamConfig &beam, Direction direction);

    /// Mean and RMS spread. `mean` is degrees for angular spread and seconds for delay spread.
    struct SpreadResult
    {
        double mean = 0.0;
        double rms = 0.0;
        std::size_t n_mpcs_in_beam = 0;
    };

    /// Direction of the strongest MPC in the given domain (beam alignment).
    Direction select_boresight(const Snapshot &snapshot, Domain domain);

    /// MPCs inside the beam window, in input order.
    Snapshot filter_beam(const Snapshot &snapshot, const BeamConfig &beam);

    /// Power-weighted mean angle of in-beam MPCs in one plane.
    double mean_angle(const Snapshot &snapshot, const BeamConfig &beam, Plane plane = Plane::Azimuth);

    /// Power-weighted RMS angular spread of in-beam MPCs in one plane.
    ///
    /// Angles enter the sums as offsets from the beam boresight (azimuth offsets
    /// wrapped to (-180, 180]); the mean is translated back afterwards.
    SpreadResult rms_angular_spread(const Snapshot &snapshot, const BeamConfig &beam, Plane plane = Plane::Azimuth);

    /// Power-weighted RMS delay spread of in-beam MPCs, in seconds.
    SpreadResult rms_delay_spread(const Snapshot &snapshot, const BeamConfig &beam);

    /// Weighted mean/RMS of angle offsets in `plane` relative to `reference`.
    /// Lower-level entry used by the beam-weighted statistics.
    SpreadResult angular_spread_about(std::span<const Mpc> mpcs, const Eigen::ArrayXd &weights, Domain domain,
                                      Plane plane, Direction reference);

    SpreadResult delay_spread_weighted(std::span<const Mpc> mpcs, const Eigen::ArrayXd &weights);

    /// Per-location spreads for one beamwidth with the boresight re-selected at the location.
    struct LocationSpread
    {
        SpreadResult angular;
        SpreadResult delay;
    };

    LocationSpread location_spread(const Snapshot &snapshot, Domain domain, Plane plane, double bew_deg,
                                   double window_scale = 1.0);

    struct SpreadSweepRow
    {
        double bew_deg;
        Segment segment;
        double mean_rms_as_deg;
        double mean_rms_ds_s;
        std::size_t n_locations;
    };

    /// Segment averages of per-location RMS angular and delay spread for each beamwidth.
    std::vector<SpreadSweepRow> spread_vs_bew(const Trajectory &trajectory, Domain domain, Plane plane,
                                              std::span<const double> bew_values, double window_scale = 1.0);

    /// Averages per-location spreads (laid out [bew][snapshot]) into sweep rows.
    std::vector<SpreadSweepRow> average_spreads(const Trajectory &trajectory, std::span<const double> bew_values,
                                                const std::vector<std::vector<LocationSpread>> &per_location);
}
