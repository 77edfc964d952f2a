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

#include <iosfwd>
#include <string>
#include <string_view>

#include "v2xmpc/channel.hpp"

namespace v2xmpc
{
    /// Magic first line of a trajectory file, format version 1.
    inline constexpr std::string_view kTrajectoryMagic = "# v2xmpc trajectory v1";

    /// Column header of the MPC table, in fixed order.
    inline constexpr std::string_view kTrajectoryColumns =
        "location_index,power_dbm,phase_deg,delay_s,aoa_az_deg,aoa_el_deg,aod_az_deg,aod_el_deg,n_reflections,"
        "n_diffractions";

    /// Parses a trajectory document.
    ///
    /// Layout:
    ///   # v2xmpc trajectory v1
    ///   band,<label>
    ///   freq_ghz,<GHz>
    ///   tx_power_dbm,<dBm>
    ///   nlos_through,<k>        locations with index <= k are NLOS, the rest LOS
    ///   <column header>
    ///   one MPC per row, rows grouped by ascending location_index
    ///
    /// Blank lines and further lines starting with '#' are ignored. Every failure
    /// throws ParseError naming the line and field.
    Trajectory parse_trajectory_text(std::string_view text, const std::string &source = "<trajectory>");

    Trajectory parse_trajectory(const std::string &path);

    /// Canonical serialization: shortest round-trip decimal form for every double.
    /// Throws ComputationError if the segments are not an NLOS prefix followed by LOS.
    std::string format_trajectory(const Trajectory &trajectory);

    void write_trajectory(const Trajectory &trajectory, const std::string &path);
}
