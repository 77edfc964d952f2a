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

// Shared helpers for the test binaries: random snapshot generators and table comparison.

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <variant>

#include "v2xmpc/channel.hpp"
#include "v2xmpc/table.hpp"

namespace testing
{
    inline v2xmpc::Mpc random_mpc(std::mt19937_64 &rng, bool integer_powers = false)
    {
        std::uniform_real_distribution<double> power(-140.0, -40.0), phase(0.0, 360.0), delay(0.0, 2e-6),
            az(-180.0, 180.0), el(-90.0, 90.0);
        std::uniform_int_distribution<int> refl(0, 6), diff(0, 1);
        v2xmpc::Mpc m;
        m.power_dbm = integer_powers ? std::round(power(rng) / 10.0) * 10.0 : power(rng);
        m.phase_deg = phase(rng);
        m.delay_s = delay(rng);
        m.aoa_az_deg = az(rng);
        m.aoa_el_deg = el(rng);
        m.aod_az_deg = az(rng);
        m.aod_el_deg = el(rng);
        m.n_reflections = refl(rng);
        m.n_diffractions = diff(rng) * diff(rng);
        return m;
    }

    /// 1..max_mpcs random MPCs; every fourth snapshot uses coarse powers to provoke ties.
    inline v2xmpc::Snapshot random_snapshot(std::mt19937_64 &rng, int location_index = 1, int max_mpcs = 40)
    {
        std::uniform_int_distribution<int> count(1, max_mpcs);
        const bool coarse = rng() % 4 == 0;
        v2xmpc::Snapshot s{location_index, {}, rng() % 2 ? v2xmpc::Segment::Los : v2xmpc::Segment::Nlos};
        const int n = count(rng);
        for (int i = 0; i < n; ++i)
            s.mpcs.push_back(random_mpc(rng, coarse));
        return s;
    }

    inline v2xmpc::Trajectory random_trajectory(std::mt19937_64 &rng, int n_locations, int nlos = -1)
    {
        v2xmpc::Trajectory t{{"f6", 28.0}, {}, 0.0};
        if (nlos < 0)
            nlos = n_locations / 3;
        for (int i = 1; i <= n_locations; ++i)
        {
            auto s = random_snapshot(rng, i);
            s.segment = i <= nlos ? v2xmpc::Segment::Nlos : v2xmpc::Segment::Los;
            t.snapshots.push_back(std::move(s));
        }
        return t;
    }

    /// Cell-by-cell comparison. Reals match when |a - b| <= rel * max(|a|, |b|).
    inline bool tables_match(const v2xmpc::Table &a, const v2xmpc::Table &b, double rel, std::string &why,
                             double *worst = nullptr)
    {
        std::ostringstream msg;
        if (a.columns != b.columns)
        {
            why = "column mismatch";
            return false;
        }
        if (a.rows.size() != b.rows.size())
        {
            msg << "row count " << a.rows.size() << " vs " << b.rows.size();
            why = msg.str();
            return false;
        }
        for (std::size_t r = 0; r < a.rows.size(); ++r)
            for (std::size_t c = 0; c < a.columns.size(); ++c)
            {
                const auto &x = a.rows[r][c], &y = b.rows[r][c];
                bool ok = x.index() == y.index();
                if (ok && std::holds_alternative<double>(x))
                {
                    const double u = std::get<double>(x), v = std::get<double>(y);
                    const double scale = std::max(std::abs(u), std::abs(v));
                    const double err = scale == 0.0 ? 0.0 : std::abs(u - v) / scale;
                    if (worst)
                        *worst = std::max(*worst, err);
                    ok = std::abs(u - v) <= rel * scale;
                }
                else if (ok)
                    ok = x == y;
                if (!ok)
                {
                    msg << "row " << r << " column " << a.columns[c] << ": '" << v2xmpc::format_cell(x) << "' vs '"
                        << v2xmpc::format_cell(y) << "'";
                    why = msg.str();
                    return false;
                }
            }
        return true;
    }
}
