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
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "v2xmpc/config.hpp"
#include "v2xmpc/table.hpp"

namespace v2xmpc
{
    /// Runs fn(0) .. fn(n - 1) on up to `threads` workers (0: hardware concurrency).
    /// fn must only write to slots owned by its index. The exception of the lowest
    /// failing index is rethrown, so failures are reported deterministically.
    void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &fn);

    struct ResultFile
    {
        std::string name; ///< e.g. "path_loss.csv"
        Table table;
    };

    /// mpct_sweep.csv, path_loss.csv, spread_vs_bew.csv, weighted_spread.csv
    std::vector<ResultFile> stats_tables(const RunConfig &config, const Trajectory &trajectory);

    /// cone_fractions.csv, cone_tracks.csv. With a companion trajectory (another band
    /// over the same locations) the cone boresights come from the companion.
    std::vector<ResultFile> cone_tables(const RunConfig &config, const Trajectory &trajectory,
                                        const Trajectory *companion = nullptr);

    /// blockage.csv
    std::vector<ResultFile> blockage_tables(const RunConfig &config, const Trajectory &trajectory);

    /// congruency.csv for two bands over the same locations.
    std::vector<ResultFile> congruency_tables(const Trajectory &a, const Trajectory &b);

    /// Every table above (except congruency), in a fixed order.
    std::vector<ResultFile> run_pipeline(const RunConfig &config, const Trajectory &trajectory);

    /// Writes each table as CSV into `directory` (created if missing).
    void write_results(const std::vector<ResultFile> &results, const std::string &directory);
}
