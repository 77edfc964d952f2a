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

#include "v2xmpc/angles.hpp"

namespace v2xmpc
{
    double angular_distance_deg(const Direction &a, const Direction &b)
    {
        const Eigen::Vector3d u = unit_vector(a.az_deg, a.el_deg);
        const Eigen::Vector3d v = unit_vector(b.az_deg, b.el_deg);
        // atan2 form stays accurate near 0 and 180 degrees
        return rad_to_deg(std::atan2(u.cross(v).norm(), u.dot(v)));
    }
}
