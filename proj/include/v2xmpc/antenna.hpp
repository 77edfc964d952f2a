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

#include <optional>

#include "v2xmpc/spread.hpp"

namespace v2xmpc
{
    /// Gaussian main-lobe pattern:
    ///
    ///   G_dB = 10 log10(16 pi / (6.76 w_az w_el)) - 12 (off_az / w_az)^2 - 12 (off_el / w_el)^2
    ///
    /// with the half-power beamwidths w in radians inside the directivity term.
    /// The roll-off terms are ratios, so the unit cancels there.
    struct AntennaPattern
    {
        double hpbw_az_deg = 30.0;
        double hpbw_el_deg = 30.0;
        Direction boresight;
        /// Fixed-elevation (2D) evaluation: the elevation offset is taken as zero.
        bool planar = false;
        /// Optional lower bound on the gain in dB. No floor by default.
        std::optional<double> min_gain_db;
    };

    void validate(const AntennaPattern &pattern);

    /// Peak (boresight) gain in dB.
    double boresight_gain_db(const AntennaPattern &pattern);

    double gain_db(const AntennaPattern &pattern, Direction direction);

    /// Pattern with the given HPBWs steered at the strongest MPC of `domain`.
    AntennaPattern aligned_pattern(const Snapshot &snapshot, Domain domain, double hpbw_az_deg, double hpbw_el_deg,
                                   bool planar = false);

    enum class SpreadMetric
    {
        Angular,
        Delay
    };

    /// Linear MPC weights: relative received power times rx gain at the AOA offset
    /// and tx gain at the AOD offset (an absent pattern contributes unity gain).
    Eigen::ArrayXd beam_weights(std::span<const Mpc> mpcs, const std::optional<AntennaPattern> &rx,
                                const std::optional<AntennaPattern> &tx);

    /// Mean/RMS spread with antenna-gain weighted powers.
    ///
    /// Angular offsets are measured from the boresight of the pattern for `domain`
    /// (rx for AOA, tx for AOD), falling back to the strongest MPC when that pattern
    /// is absent. No hard window is applied; compose with filter_beam for that.
    SpreadResult weighted_spread(const Snapshot &snapshot, const std::optional<AntennaPattern> &rx,
                                 const std::optional<AntennaPattern> &tx, Domain domain = Domain::Aoa,
                                 Plane plane = Plane::Azimuth, SpreadMetric metric = SpreadMetric::Angular);
}
