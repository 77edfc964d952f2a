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

#include <catch_amalgamated.hpp>

#include <cmath>

#include "reference/brute_force.hpp"

using Catch::Matchers::WithinAbs;

// The oracle itself gets a few hand-checked values before anything is compared against it.

TEST_CASE("Reference helpers")
{
    CHECK(reference::wrap_offset(180.0) == 180.0);
    CHECK(reference::wrap_offset(-180.0) == 180.0);
    CHECK_THAT(reference::wrap_offset(350.0), WithinAbs(-10.0, 1e-12));
    CHECK(reference::wrap_azimuth(180.0) == -180.0);
    CHECK_THAT(reference::wrap_azimuth(-190.0), WithinAbs(170.0, 1e-12));

    const auto r = reference::weighted({-15.0, 0.0, 15.0}, {1.0, 1.0, 1.0});
    CHECK(r.mean == 0.0);
    CHECK_THAT(r.rms, WithinAbs(12.24744871391589, 1e-12));

    CHECK_THAT(reference::gaussian_gain_db(30, 30, 0, 0), WithinAbs(14.333259147874424, 1e-12));
    CHECK_THAT(reference::gaussian_gain_db(30, 30, 15, 0), WithinAbs(14.333259147874424 - 3.0, 1e-12));
}

TEST_CASE("Reference MPCT and cones")
{
    v2xmpc::Mpc a, b, c;
    a.power_dbm = -60;
    a.delay_s = 2e-7;
    b.power_dbm = -60;
    b.delay_s = 1e-7;
    b.aoa_az_deg = 5;
    c.power_dbm = -101;
    c.aoa_az_deg = 90;
    const std::vector<v2xmpc::Mpc> mpcs{a, b, c};
    CHECK(reference::strongest(mpcs) == 1);
    CHECK(reference::threshold(mpcs, 40).size() == 2);
    CHECK(reference::threshold(mpcs, 41).size() == 3);

    std::vector<std::size_t> seeds;
    const auto owner = reference::greedy_cones(mpcs, true, 30, 30, 1.0, 3, seeds);
    CHECK(seeds == std::vector<std::size_t>{1, 2});
    CHECK(owner == std::vector<int>{0, 0, 1});
}
