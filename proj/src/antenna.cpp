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

#include "v2xmpc/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "v2xmpc/errors.hpp"
#include "v2xmpc/weighted_stats.hpp"

namespace v2xmpc
{
    void validate(const AntennaPattern &p)
    {
        auto ok = [](double w) { return w > 0.0 && w <= 180.0; };
        if (!ok(p.hpbw_az_deg) || !ok(p.hpbw_el_deg))
            throw ConfigError("HPBW must lie in (0, 180] degrees");
    }

    double boresight_gain_db(const AntennaPattern &p)
    {
        validate(p);
        const double w_az = deg_to_rad(p.hpbw_az_deg), w_el = deg_to_rad(p.hpbw_el_deg);
        return 10.0 * std::log10(16.0 * std::numbers::pi / (6.76 * w_az * w_el));
    }

    double gain_db(const AntennaPattern &p, Direction d)
    {
        const double off_az = wrap_offset(d.az_deg - p.boresight.az_deg);
        const double off_el = p.planar ? 0.0 : wrap_offset(d.el_deg - p.boresight.el_deg);
        const double r_az = off_az / p.hpbw_az_deg, r_el = off_el / p.hpbw_el_deg;
        const double g = boresight_gain_db(p) - 12.0 * r_az * r_az - 12.0 * r_el * r_el;
        return p.min_gain_db ? std::max(g, *p.min_gain_db) : g;
    }

    AntennaPattern aligned_pattern(const Snapshot &snapshot, Domain domain, double hpbw_az_deg, double hpbw_el_deg,
                                   bool planar)
    {
        AntennaPattern p{hpbw_az_deg, hpbw_el_deg, select_boresight(snapshot, domain), planar, std::nullopt};
        validate(p);
        return p;
    }

    Eigen::ArrayXd beam_weights(std::span<const Mpc> mpcs, const std::optional<AntennaPattern> &rx,
                                const std::optional<AntennaPattern> &tx)
    {
        Eigen::ArrayXd w = relative_linear_power(mpcs);
        // relative gains keep the weights O(1); the peak gain cancels in every ratio
        for (std::size_t i = 0; i < mpcs.size(); ++i)
        {
            double g_db = 0.0;
            if (rx)
                g_db += gain_db(*rx, mpcs[i].aoa()) - boresight_gain_db(*rx);
            if (tx)
                g_db += gain_db(*tx, mpcs[i].aod()) - boresight_gain_db(*tx);
            w(Eigen::Index(i)) *= db_to_linear(g_db);
        }
        return w;
    }

    SpreadResult weighted_spread(const Snapshot &snapshot, const std::optional<AntennaPattern> &rx,
                                 const std::optional<AntennaPattern> &tx, Domain domain, Plane plane,
                                 SpreadMetric metric)
    {
        if (snapshot.mpcs.empty())
            throw ComputationError("no MPCs");
        const Eigen::ArrayXd w = beam_weights(snapshot.mpcs, rx, tx);
        if (metric == SpreadMetric::Delay)
            return delay_spread_weighted(snapshot.mpcs, w);

        const auto &own = domain == Domain::Aoa ? rx : tx;
        const Direction reference = own ? own->boresight : select_boresight(snapshot, domain);
        return angular_spread_about(snapshot.mpcs, w, domain, plane, reference);
    }
}
