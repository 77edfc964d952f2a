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

#include "v2xmpc/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "v2xmpc/errors.hpp"

namespace v2xmpc
{
    namespace
    {
        [[noreturn]] void fail(const std::string &field, const std::string &message)
        {
            throw ConfigError("config field '" + field + "': " + message);
        }

        Domain domain_from(const std::string &s)
        {
            if (s == "AOA" || s == "aoa")
                return Domain::Aoa;
            if (s == "AOD" || s == "aod")
                return Domain::Aod;
            fail("cone_domain", "expected AOA or AOD, got '" + s + "'");
        }

        PlAveraging averaging_from(const std::string &s)
        {
            if (s == "db")
                return PlAveraging::Db;
            if (s == "linear")
                return PlAveraging::Linear;
            fail("pl_averaging", "expected db or linear, got '" + s + "'");
        }
    }

    void validate(const RunConfig &c)
    {
        if (!(c.mpct_db >= 0.0) || !std::isfinite(c.mpct_db))
            fail("mpct_db", "must be finite and >= 0");
        if (c.mpct_sweep.empty())
            fail("mpct_sweep", "needs at least one value");
        for (double v : c.mpct_sweep)
            if (!(v >= 0.0) || !std::isfinite(v))
                fail("mpct_sweep", "values must be finite and >= 0");
        if (c.bew_values.empty())
            fail("bew_values", "needs at least one value");
        for (double v : c.bew_values)
            if (!(v > 0.0 && v <= 360.0))
                fail("bew_values", "values must lie in (0, 360]");
        if (!(c.window_scale > 0.0) || !std::isfinite(c.window_scale))
            fail("window_scale", "must be > 0");
        if (c.cone_hpbw.empty())
            fail("cone_hpbw", "needs at least one [az, el] pair");
        for (const auto &p : c.cone_hpbw)
            if (!(p.az_deg > 0.0 && p.az_deg <= 180.0 && p.el_deg > 0.0 && p.el_deg <= 180.0))
                fail("cone_hpbw", "HPBWs must lie in (0, 180]");
        if (c.max_cones < 1 || c.max_cones > 64)
            fail("max_cones", "must lie in [1, 64]");
        if (!(c.cone_scale > 0.0) || !std::isfinite(c.cone_scale))
            fail("cone_scale", "must be > 0");
        if (!(c.weight_hpbw_az_deg > 0.0 && c.weight_hpbw_az_deg <= 180.0))
            fail("weight_hpbw_az_deg", "must lie in (0, 180]");
        if (!(c.weight_hpbw_el_deg > 0.0 && c.weight_hpbw_el_deg <= 180.0))
            fail("weight_hpbw_el_deg", "must lie in (0, 180]");
        if (c.threads > 1024)
            fail("threads", "must lie in [0, 1024]");
        if (c.output_dir.empty())
            fail("output_dir", "must not be empty");
    }

    RunConfig parse_config(const std::string &text, const std::string &source)
    {
        nlohmann::json j;
        try
        {
            j = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error &e)
        {
            throw ConfigError(source + ": " + e.what());
        }
        if (!j.is_object())
            throw ConfigError(source + ": config must be a JSON object");

        RunConfig c;
        for (const auto &[key, v] : j.items())
        {
            try
            {
                if (key == "mpct_db")
                    c.mpct_db = v.get<double>();
                else if (key == "mpct_sweep")
                    c.mpct_sweep = v.get<std::vector<double>>();
                else if (key == "bew_values")
                    c.bew_values = v.get<std::vector<double>>();
                else if (key == "window_scale")
                    c.window_scale = v.get<double>();
                else if (key == "cone_hpbw")
                {
                    c.cone_hpbw.clear();
                    for (const auto &p : v.get<std::vector<std::vector<double>>>())
                    {
                        if (p.size() != 2)
                            fail(key, "each entry must be [az, el]");
                        c.cone_hpbw.push_back({p[0], p[1]});
                    }
                }
                else if (key == "max_cones")
                    c.max_cones = v.get<int>();
                else if (key == "cone_scale")
                    c.cone_scale = v.get<double>();
                else if (key == "cone_domain")
                    c.cone_domain = domain_from(v.get<std::string>());
                else if (key == "pl_averaging")
                    c.pl_averaging = averaging_from(v.get<std::string>());
                else if (key == "rx_weighting")
                    c.rx_weighting = v.get<bool>();
                else if (key == "tx_weighting")
                    c.tx_weighting = v.get<bool>();
                else if (key == "weight_hpbw_az_deg")
                    c.weight_hpbw_az_deg = v.get<double>();
                else if (key == "weight_hpbw_el_deg")
                    c.weight_hpbw_el_deg = v.get<double>();
                else if (key == "weight_planar")
                    c.weight_planar = v.get<bool>();
                else if (key == "threads")
                {
                    const int t = v.get<int>();
                    if (t < 0)
                        fail(key, "must be >= 0");
                    c.threads = unsigned(t);
                }
                else if (key == "output_dir")
                    c.output_dir = v.get<std::string>();
                else
                    fail(key, "unknown key");
            }
            catch (const nlohmann::json::exception &e)
            {
                fail(key, e.what());
            }
        }
        validate(c);
        return c;
    }

    RunConfig load_config(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot open config file " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_config(buffer.str(), path);
    }

    std::string config_to_json(const RunConfig &c)
    {
        nlohmann::ordered_json j;
        j["mpct_db"] = c.mpct_db;
        j["mpct_sweep"] = c.mpct_sweep;
        j["bew_values"] = c.bew_values;
        j["window_scale"] = c.window_scale;
        j["cone_hpbw"] = nlohmann::ordered_json::array();
        for (const auto &p : c.cone_hpbw)
            j["cone_hpbw"].push_back({p.az_deg, p.el_deg});
        j["max_cones"] = c.max_cones;
        j["cone_scale"] = c.cone_scale;
        j["cone_domain"] = std::string(to_string(c.cone_domain));
        j["pl_averaging"] = c.pl_averaging == PlAveraging::Db ? "db" : "linear";
        j["rx_weighting"] = c.rx_weighting;
        j["tx_weighting"] = c.tx_weighting;
        j["weight_hpbw_az_deg"] = c.weight_hpbw_az_deg;
        j["weight_hpbw_el_deg"] = c.weight_hpbw_el_deg;
        j["weight_planar"] = c.weight_planar;
        j["threads"] = c.threads;
        j["output_dir"] = c.output_dir;
        return j.dump(2) + "\n";
    }
}
