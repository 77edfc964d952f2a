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
#include <optional>
#include <span>
#include <vector>

#include "v2xmpc/spread.hpp"

namespace v2xmpc
{
    /// Angular extent of the cones built around successive strongest MPCs.
    /// A direction belongs to a cone when
    ///   (d_az / (scale * hpbw_az / 2))^2 + (d_el / (scale * hpbw_el / 2))^2 <= 1
    /// with d_az the wrapped azimuth offset from the cone boresight.
    struct ConeGeometry
    {
        double hpbw_az_deg = 30.0;
        double hpbw_el_deg = 30.0;
        double scale = 1.0;
        Domain domain = Domain::Aoa;
    };

    void validate(const ConeGeometry &geometry);

    bool cone_region_contains(const ConeGeometry &geometry, Direction boresight, Direction direction);

    struct Cone
    {
        int rank = 1; ///< 1 is the strongest
        Direction boresight;
        double hpbw_az_deg = 0.0;
        double hpbw_el_deg = 0.0;
        std::vector<std::size_t> member_indices; ///< ascending snapshot indices
        /// Snapshot index of the MPC the cone was built around. Empty for hinted cones
        /// whose boresight comes from another band.
        std::optional<std::size_t> boresight_index;
    };

    struct ConeDecomposition
    {
        std::vector<Cone> cones;
        std::vector<std::size_t> residual_indices;
        /// Per-MPC linear power relative to the strongest MPC of the snapshot.
        std::vector<double> power_lin;
        double total_power_lin = 0.0;
    };

    /// Greedy cone construction: each new cone is centred on the strongest MPC not yet
    /// assigned and takes every unassigned MPC inside its region. Stops after
    /// `max_cones` cones or when every MPC is assigned.
    ConeDecomposition build_cones(const Snapshot &snapshot, const ConeGeometry &geometry, int max_cones = 3);

    /// Cones on `target` whose boresights are the cone boresights of `companion`
    /// (same location, another band). Membership and powers use the target band.
    ConeDecomposition build_cones_hinted(const Snapshot &target, const Snapshot &companion,
                                         const ConeGeometry &geometry, int max_cones = 3);

    /// Fraction of the total linear power carried by each cone, in rank order.
    std::vector<double> fractional_power(const ConeDecomposition &decomposition);

    double residual_fraction(const ConeDecomposition &decomposition);

    struct Fallback
    {
        std::size_t mpc_index;
        double power_dbm;
        std::optional<int> cone_rank; ///< empty when the MPC is in no cone
    };

    /// Strongest MPC outside every blocked cone, or nullopt on outage.
    /// Throws ConfigError if a blocked rank does not exist.
    std::optional<Fallback> blocked_fallback(const Snapshot &snapshot, const ConeDecomposition &decomposition,
                                             std::span<const int> blocked_ranks);

    struct ConeTrackSample
    {
        double power_dbm;
        Direction aoa;
        Direction aod;
    };

    struct ConeTrackRecord
    {
        int location_index;
        Segment segment;
        int rank;
        std::optional<ConeTrackSample> strongest; ///< empty when the location has fewer cones
    };

    /// Strongest-member record for cone ranks 1..max_cones at every location.
    std::vector<ConeTrackRecord> cone_tracks(const Trajectory &trajectory, const ConeGeometry &geometry,
                                             int max_cones = 3);

    /// Track records for one location's decomposition.
    std::vector<ConeTrackRecord> cone_track_records(const Snapshot &snapshot, const ConeDecomposition &decomposition,
                                                    int max_cones);
}
