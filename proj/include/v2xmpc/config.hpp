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

#include <string>
#include <utility>
#include <vector>

#include "v2xmpc/channel.hpp"
#include "v2xmpc/spread.hpp"

namespace v2xmpc
{
    struct HpbwPair
    {
        double az_deg;
        double el_deg;

        friend bool operator==(const HpbwPair &, const HpbwPair &) = default;
    };

    /// Parameters of a statistics run. Loaded from JSON; every key is optional.
    struct RunConfig
    {
        double mpct_db = kDefaultMpctDb;
        std::vector<double> mpct_sweep{0, 5, 10, 15, 20, 25, 30, 35, 40, 45, 50, 55, 60};
        std::vector<double> bew_values{5, 10, 20, 30, 45, 60, 90, 120, 180, 360};
        double window_scale = 1.0;

        std::vector<HpbwPair> cone_hpbw{{10.0, 10.0}, {30.0, 30.0}};
        int max_cones = 3;
        double cone_scale = 1.0;
        Domain cone_domain = Domain::Aoa;

        PlAveraging pl_averaging = PlAveraging::Db;

        bool rx_weighting = true;
        bool tx_weighting = true;
        double weight_hpbw_az_deg = 30.0;
        double weight_hpbw_el_deg = 30.0;
        /// Fixed-elevation evaluation of the antenna gain.
        bool weight_planar = true;

        unsigned threads = 1; ///< 0 selects the hardware concurrency
        std::string output_dir = "results";

        friend bool operator==(const RunConfig &, const RunConfig &) = default;
    };

    /// Throws ConfigError naming the offending field.
    void validate(const RunConfig &config);

    RunConfig parse_config(const std::string &json_text, const std::string &source = "<config>");
    RunConfig load_config(const std::string &path);
    std::string config_to_json(const RunConfig &config);
}
