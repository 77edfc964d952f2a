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

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "v2xmpc/angles.hpp"

namespace v2xmpc
{
    /// Default relative power gate below the strongest MPC.
    inline constexpr double kDefaultMpctDb = 40.0;

    enum class Segment
    {
        Los,
        Nlos
    };

    enum class BounceClass
    {
        Direct,
        Single,
        Double,
        BeyondDouble
    };

    inline constexpr BounceClass kBounceClasses[] = {BounceClass::Direct, BounceClass::Single, BounceClass::Double,
                                                     BounceClass::BeyondDouble};
    inline constexpr Segment kSegments[] = {Segment::Los, Segment::Nlos};

    std::string_view to_string(Segment s) noexcept;
    std::string_view to_string(BounceClass c) noexcept;

    /// One multipath component. Angles in degrees, delay in seconds.
    struct Mpc
    {
        double power_dbm = 0.0;
        double phase_deg = 0.0;
        double delay_s = 0.0;
        double aoa_az_deg = 0.0;
        double aoa_el_deg = 0.0;
        double aod_az_deg = 0.0;
        double aod_el_deg = 0.0;
        int n_reflections = 0;
        int n_diffractions = 0;

        Direction aoa() const noexcept { return {aoa_az_deg, aoa_el_deg}; }
        Direction aod() const noexcept { return {aod_az_deg, aod_el_deg}; }

        friend bool operator==(const Mpc &, const Mpc &) = default;
    };

    /// All MPCs seen at one vehicle location.
    struct Snapshot
    {
        int location_index = 1;
        std::vector<Mpc> mpcs;
        Segment segment = Segment::Los;

        friend bool operator==(const Snapshot &, const Snapshot &) = default;
    };

    struct BandSpec
    {
        std::string label = "f6";
        double freq_ghz = 28.0;

        friend bool operator==(const BandSpec &, const BandSpec &) = default;
    };

    struct Trajectory
    {
        BandSpec band;
        std::vector<Snapshot> snapshots;
        double tx_power_dbm = 0.0;

        friend bool operator==(const Trajectory &, const Trajectory &) = default;
    };

    /// Throws ComputationError naming the violated invariant.
    void validate(const Mpc &mpc);
    void validate(const Trajectory &trajectory);

    // ---- column views --------------------------------------------------------

    /// Received powers in dBm as an Eigen column.
    Eigen::ArrayXd powers_dbm(std::span<const Mpc> mpcs);

    /// Linear powers relative to the strongest member of `mpcs` (max entry is 1).
    /// A uniform dB offset of all powers leaves the result unchanged.
    Eigen::ArrayXd relative_linear_power(std::span<const Mpc> mpcs);

    // ---- operations ----------------------------------------------------------

    /// Index of the strongest MPC; ties go to the smaller delay, then to input order.
    std::size_t strongest_index(std::span<const Mpc> mpcs);

    /// Indices of MPCs within `mpct_db` of the strongest, in input order.
    std::vector<std::size_t> mpct_survivors(std::span<const Mpc> mpcs, double mpct_db);

    /// Drops MPCs weaker than (strongest - mpct_db). Order is preserved.
    Snapshot apply_mpct(const Snapshot &snapshot, double mpct_db = kDefaultMpctDb);

    Trajectory apply_mpct(const Trajectory &trajectory, double mpct_db = kDefaultMpctDb);

    BounceClass classify_bounce(const Mpc &mpc) noexcept;

    struct MpctSweepRow
    {
        double mpct_db;
        Segment segment;
        BounceClass bounce_class;
        double mean_count;
    };

    /// Mean surviving MPC count per bounce class and segment, for every threshold.
    /// Segments without snapshots produce no rows.
    std::vector<MpctSweepRow> mpct_sweep(const Trajectory &trajectory, std::span<const double> mpct_values);

    enum class PlAveraging
    {
        Db,    ///< arithmetic mean of per-MPC path loss in dB
        Linear ///< path loss of the mean linear received power
    };

    struct PathLossRow
    {
        Segment segment;
        BounceClass bounce_class;
        double mean_pl_db;
        std::size_t n_mpcs;
    };

    /// Mean path loss per segment and bounce class over MPCT survivors.
    /// Classes without survivors in a segment are absent from the result.
    std::vector<PathLossRow> avg_path_loss(const Trajectory &trajectory, double mpct_db = kDefaultMpctDb,
                                           PlAveraging averaging = PlAveraging::Db);

    struct CongruencyRow
    {
        int location_index;
        double offset_deg;
    };

    /// Great-circle angle between the strongest-MPC AOAs of two bands, per location.
    std::vector<CongruencyRow> congruency_offset(const Trajectory &a, const Trajectory &b);
}
