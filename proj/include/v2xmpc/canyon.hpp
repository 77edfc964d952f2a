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
#include <string>
#include <vector>

#include "v2xmpc/channel.hpp"

namespace v2xmpc
{
    inline constexpr double kSpeedOfLight = 299792458.0;

    /// Free-space (Friis) path loss in dB.
    double friis_path_loss_db(double distance_m, double freq_ghz);

    /// Rectangular street canyon. The street runs along x; the two building walls
    /// are the planes y = +/- street_width / 2 and the ground is z = 0.
    struct CanyonScene
    {
        double street_width_m = 20.0;
        double wall_height_m = 30.0;
        Eigen::Vector3d bs_position_m{0.0, 8.0, 10.0};
        double ue_height_m = 2.0;
        /// Polyline the UE follows; `n_points` locations are spaced evenly along it.
        std::vector<Eigen::Vector2d> ue_waypoints{{10.0, -4.0}, {307.0, -4.0}};
        int n_points = 100;
        /// The first `nlos_points` locations have the direct ray occluded.
        int nlos_points = 30;
        std::string band_label = "f6";
        double freq_ghz = 28.0;
        double wall_reflection_loss_db = 6.0; ///< per bounce, walls and ground
        double tx_power_dbm = 0.0;
    };

    /// Throws ConfigError describing the first violated constraint.
    void validate(const CanyonScene &scene);

    /// UE positions (x, y, z) for every location.
    std::vector<Eigen::Vector3d> ue_positions(const CanyonScene &scene);

    /// Image-method paths between two points: direct ray (unless occluded),
    /// first-order ground and wall reflections, and second-order wall-wall
    /// reflections. Reflection points must lie on the finite wall.
    std::vector<Mpc> trace_paths(const CanyonScene &scene, const Eigen::Vector3d &tx, const Eigen::Vector3d &rx,
                                 bool direct_occluded);

    /// Deterministic trajectory for the scene; no randomness.
    Trajectory generate(const CanyonScene &scene);

    /// Scene from a JSON document. Missing keys keep their defaults.
    CanyonScene parse_scene(const std::string &json_text, const std::string &source = "<scene>");
    CanyonScene load_scene(const std::string &path);
    std::string scene_to_json(const CanyonScene &scene);
}
