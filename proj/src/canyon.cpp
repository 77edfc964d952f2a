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

#include "v2xmpc/canyon.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "v2xmpc/errors.hpp"

namespace v2xmpc
{
    namespace
    {
        /// Axis-aligned reflecting plane: coordinate `axis` equals `offset`.
        struct Reflector
        {
            int axis;
            double offset;
            bool wall;
        };

        Eigen::Vector3d mirror(Eigen::Vector3d p, const Reflector &r)
        {
            p(r.axis) = 2.0 * r.offset - p(r.axis);
            return p;
        }

        /// Unfolds one reflector sequence. Returns the bounce points in propagation
        /// order (tx side first), or nullopt if the specular path does not exist.
        std::optional<std::vector<Eigen::Vector3d>> unfold(const CanyonScene &scene, const Eigen::Vector3d &tx,
                                                           const Eigen::Vector3d &rx,
                                                           const std::vector<Reflector> &sequence,
                                                           Eigen::Vector3d &last_image)
        {
            std::vector<Eigen::Vector3d> images{tx};
            for (const auto &r : sequence)
                images.push_back(mirror(images.back(), r));
            last_image = images.back();

            std::vector<Eigen::Vector3d> points(sequence.size());
            Eigen::Vector3d from = rx;
            for (std::size_t k = sequence.size(); k-- > 0;)
            {
                const Reflector &r = sequence[k];
                const Eigen::Vector3d &image = images[k + 1];
                const double denom = image(r.axis) - from(r.axis);
                if (denom == 0.0)
                    return std::nullopt;
                const double t = (r.offset - from(r.axis)) / denom;
                if (!(t > 0.0 && t < 1.0))
                    return std::nullopt;
                const Eigen::Vector3d p = from + t * (image - from);
                if (r.wall && (p.z() < 0.0 || p.z() > scene.wall_height_m))
                    return std::nullopt;
                if (!r.wall && std::abs(p.y()) > 0.5 * scene.street_width_m)
                    return std::nullopt;
                points[k] = p;
                from = p;
            }
            return points;
        }

        Mpc make_mpc(const CanyonScene &scene, double length, int n_bounces, const Eigen::Vector3d &departure,
                     const Eigen::Vector3d &arrival)
        {
            if (!(length > 0.0))
                throw ComputationError("canyon: degenerate geometry (zero path length)");
            const double f_hz = scene.freq_ghz * 1e9;
            Mpc m;
            m.power_dbm = scene.tx_power_dbm - friis_path_loss_db(length, scene.freq_ghz) -
                          n_bounces * scene.wall_reflection_loss_db;
            m.delay_s = length / kSpeedOfLight;
            m.phase_deg = std::fmod(length * f_hz / kSpeedOfLight, 1.0) * 360.0;
            if (m.phase_deg >= 360.0)
                m.phase_deg = 0.0;
            const Direction aod = direction_of(departure), aoa = direction_of(arrival);
            m.aod_az_deg = aod.az_deg;
            m.aod_el_deg = aod.el_deg;
            m.aoa_az_deg = aoa.az_deg;
            m.aoa_el_deg = aoa.el_deg;
            m.n_reflections = n_bounces;
            m.n_diffractions = 0;
            return m;
        }

        std::size_t line_of(const std::string &text, std::size_t byte)
        {
            byte = std::min(byte, text.size());
            return 1 + std::size_t(std::count(text.begin(), text.begin() + std::ptrdiff_t(byte), '\n'));
        }
    }

    double friis_path_loss_db(double distance_m, double freq_ghz)
    {
        return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * freq_ghz * 1e9 / kSpeedOfLight);
    }

    void validate(const CanyonScene &s)
    {
        auto fail = [](const std::string &what) { throw ConfigError("canyon scene: " + what); };
        const double half = 0.5 * s.street_width_m;
        if (!(s.street_width_m > 0.0) || !(s.wall_height_m > 0.0))
            fail("street width and wall height must be > 0");
        if (!s.bs_position_m.allFinite() || !(std::abs(s.bs_position_m.y()) < half) || !(s.bs_position_m.z() > 0.0))
            fail("BS must be inside the canyon and above ground");
        if (!(s.ue_height_m > 0.0))
            fail("UE height must be > 0");
        if (s.ue_waypoints.empty())
            fail("UE path needs at least one waypoint");
        for (const auto &w : s.ue_waypoints)
            if (!w.allFinite() || !(std::abs(w.y()) < half))
                fail("UE waypoint outside the canyon");
        if (s.n_points < 1)
            fail("n_points must be >= 1");
        if (s.nlos_points < 0 || s.nlos_points > s.n_points)
            fail("nlos_points must lie in [0, n_points]");
        if (!(s.freq_ghz > 0.0) || !std::isfinite(s.freq_ghz))
            fail("frequency must be > 0");
        if (!(s.wall_reflection_loss_db >= 0.0) || !std::isfinite(s.tx_power_dbm))
            fail("reflection loss must be >= 0 and tx power finite");
    }

    std::vector<Eigen::Vector3d> ue_positions(const CanyonScene &scene)
    {
        const auto &w = scene.ue_waypoints;
        std::vector<double> cumulative{0.0};
        for (std::size_t i = 1; i < w.size(); ++i)
            cumulative.push_back(cumulative.back() + (w[i] - w[i - 1]).norm());
        const double total = cumulative.back();

        std::vector<Eigen::Vector3d> out;
        out.reserve(std::size_t(scene.n_points));
        std::size_t seg = 0;
        for (int i = 0; i < scene.n_points; ++i)
        {
            const double s = scene.n_points == 1 ? 0.0 : total * double(i) / double(scene.n_points - 1);
            while (seg + 2 < w.size() && cumulative[seg + 1] < s)
                ++seg;
            Eigen::Vector2d xy = w.front();
            if (w.size() > 1)
            {
                const double len = cumulative[seg + 1] - cumulative[seg];
                const double t = len > 0.0 ? std::clamp((s - cumulative[seg]) / len, 0.0, 1.0) : 0.0;
                xy = w[seg] + t * (w[seg + 1] - w[seg]);
            }
            out.emplace_back(xy.x(), xy.y(), scene.ue_height_m);
        }
        return out;
    }

    std::vector<Mpc> trace_paths(const CanyonScene &scene, const Eigen::Vector3d &tx, const Eigen::Vector3d &rx,
                                 bool direct_occluded)
    {
        const double half = 0.5 * scene.street_width_m;
        const Reflector ground{2, 0.0, false}, north{1, half, true}, south{1, -half, true};
        const std::array<std::vector<Reflector>, 5> sequences{{{ground}, {north}, {south}, {north, south}, {south, north}}};

        std::vector<Mpc> out;
        if (!direct_occluded)
            out.push_back(make_mpc(scene, (rx - tx).norm(), 0, rx - tx, tx - rx));

        for (const auto &seq : sequences)
        {
            Eigen::Vector3d image;
            const auto points = unfold(scene, tx, rx, seq, image);
            if (!points)
                continue;
            out.push_back(make_mpc(scene, (rx - image).norm(), int(seq.size()), points->front() - tx,
                                   points->back() - rx));
        }
        return out;
    }

    Trajectory generate(const CanyonScene &scene)
    {
        validate(scene);
        Trajectory t{{scene.band_label, scene.freq_ghz}, {}, scene.tx_power_dbm};
        const auto positions = ue_positions(scene);
        for (std::size_t i = 0; i < positions.size(); ++i)
        {
            const bool nlos = int(i) < scene.nlos_points;
            Snapshot s{int(i) + 1, trace_paths(scene, scene.bs_position_m, positions[i], nlos),
                       nlos ? Segment::Nlos : Segment::Los};
            if (s.mpcs.empty())
                throw ComputationError("canyon: no propagation path at location " + std::to_string(i + 1));
            t.snapshots.push_back(std::move(s));
        }
        return t;
    }

    CanyonScene parse_scene(const std::string &text, const std::string &source)
    {
        nlohmann::json j;
        try
        {
            j = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error &e)
        {
            throw ParseError(source, line_of(text, e.byte), "<json>", e.what());
        }
        if (!j.is_object())
            throw ParseError(source, 1, "<json>", "scene must be a JSON object");

        CanyonScene s;
        for (const auto &[key, value] : j.items())
        {
            try
            {
                if (key == "street_width_m")
                    s.street_width_m = value.get<double>();
                else if (key == "wall_height_m")
                    s.wall_height_m = value.get<double>();
                else if (key == "bs_position_m")
                {
                    const auto v = value.get<std::vector<double>>();
                    if (v.size() != 3)
                        throw ParseError(source, 0, key, "expected [x, y, z]");
                    s.bs_position_m = {v[0], v[1], v[2]};
                }
                else if (key == "ue_height_m")
                    s.ue_height_m = value.get<double>();
                else if (key == "ue_waypoints")
                {
                    s.ue_waypoints.clear();
                    for (const auto &p : value.get<std::vector<std::vector<double>>>())
                    {
                        if (p.size() != 2)
                            throw ParseError(source, 0, key, "each waypoint must be [x, y]");
                        s.ue_waypoints.emplace_back(p[0], p[1]);
                    }
                }
                else if (key == "n_points")
                    s.n_points = value.get<int>();
                else if (key == "nlos_points")
                    s.nlos_points = value.get<int>();
                else if (key == "band_label")
                    s.band_label = value.get<std::string>();
                else if (key == "freq_ghz")
                    s.freq_ghz = value.get<double>();
                else if (key == "wall_reflection_loss_db")
                    s.wall_reflection_loss_db = value.get<double>();
                else if (key == "tx_power_dbm")
                    s.tx_power_dbm = value.get<double>();
                else
                    throw ParseError(source, 0, key, "unknown scene key");
            }
            catch (const nlohmann::json::exception &e)
            {
                throw ParseError(source, 0, key, e.what());
            }
        }
        validate(s);
        return s;
    }

    CanyonScene load_scene(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ParseError(path, 0, "<file>", "cannot open scene file");
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_scene(buffer.str(), path);
    }

    std::string scene_to_json(const CanyonScene &s)
    {
        nlohmann::ordered_json j;
        j["street_width_m"] = s.street_width_m;
        j["wall_height_m"] = s.wall_height_m;
        j["bs_position_m"] = {s.bs_position_m.x(), s.bs_position_m.y(), s.bs_position_m.z()};
        j["ue_height_m"] = s.ue_height_m;
        j["ue_waypoints"] = nlohmann::ordered_json::array();
        for (const auto &w : s.ue_waypoints)
            j["ue_waypoints"].push_back({w.x(), w.y()});
        j["n_points"] = s.n_points;
        j["nlos_points"] = s.nlos_points;
        j["band_label"] = s.band_label;
        j["freq_ghz"] = s.freq_ghz;
        j["wall_reflection_loss_db"] = s.wall_reflection_loss_db;
        j["tx_power_dbm"] = s.tx_power_dbm;
        return j.dump(2) + "\n";
    }
}
