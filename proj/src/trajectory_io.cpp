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

#include "v2xmpc/trajectory_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "v2xmpc/errors.hpp"

namespace v2xmpc
{
    namespace
    {
        constexpr std::array<std::string_view, 10> kColumns{"location_index", "power_dbm",  "phase_deg",
                                                            "delay_s",        "aoa_az_deg", "aoa_el_deg",
                                                            "aod_az_deg",     "aod_el_deg", "n_reflections",
                                                            "n_diffractions"};

        std::string_view trim(std::string_view s)
        {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
                s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
                s.remove_suffix(1);
            return s;
        }

        std::vector<std::string_view> split(std::string_view line)
        {
            std::vector<std::string_view> out;
            std::size_t start = 0;
            while (true)
            {
                const auto comma = line.find(',', start);
                out.push_back(trim(line.substr(start, comma - start)));
                if (comma == std::string_view::npos)
                    break;
                start = comma + 1;
            }
            return out;
        }

        class LineParser
        {
        public:
            LineParser(const std::string &source, std::size_t line) : source_(&source), line_(line) {}

            [[noreturn]] void fail(std::string_view field, const std::string &message) const
            {
                throw ParseError(*source_, line_, std::string(field), message);
            }

            double real(std::string_view text, std::string_view field) const
            {
                double v = 0.0;
                const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
                if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
                    fail(field, "not a number: '" + std::string(text) + "'");
                if (!std::isfinite(v))
                    fail(field, "value must be finite");
                return v;
            }

            long integer(std::string_view text, std::string_view field) const
            {
                long v = 0;
                const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
                if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
                    fail(field, "not an integer: '" + std::string(text) + "'");
                return v;
            }

        private:
            const std::string *source_;
            std::size_t line_;
        };

        void append(std::string &out, double v)
        {
            std::array<char, 32> buf{};
            const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
            out.append(buf.data(), res.ptr);
        }
    }

    Trajectory parse_trajectory_text(std::string_view text, const std::string &source)
    {
        // significant lines only, with their 1-based numbers
        std::vector<std::pair<std::size_t, std::string_view>> lines;
        {
            std::size_t number = 0, start = 0;
            while (start <= text.size())
            {
                auto end = text.find('\n', start);
                if (end == std::string_view::npos)
                    end = text.size();
                ++number;
                const auto line = trim(text.substr(start, end - start));
                const bool magic = line == kTrajectoryMagic && lines.empty();
                if (magic || (!line.empty() && line.front() != '#'))
                    lines.emplace_back(number, line);
                start = end + 1;
            }
        }

        std::size_t cursor = 0;
        auto next_header = [&](std::string_view key) {
            if (cursor >= lines.size())
                throw ParseError(source, lines.empty() ? 1 : lines.back().first, std::string(key),
                                 "missing header line");
            const auto [number, line] = lines[cursor++];
            const auto fields = split(line);
            if (fields.size() != 2 || fields[0] != key)
                throw ParseError(source, number, std::string(key), "expected '" + std::string(key) + ",<value>'");
            return std::pair{LineParser(source, number), fields[1]};
        };

        if (lines.empty() || lines.front().second != kTrajectoryMagic)
            throw ParseError(source, lines.empty() ? 1 : lines.front().first, "<magic>",
                             "expected '" + std::string(kTrajectoryMagic) + "'");
        ++cursor;

        Trajectory t;
        {
            const auto [p, label] = next_header("band");
            if (label.empty())
                p.fail("band", "empty band label");
            t.band.label = std::string(label);
        }
        {
            const auto [p, value] = next_header("freq_ghz");
            t.band.freq_ghz = p.real(value, "freq_ghz");
            if (!(t.band.freq_ghz > 0.0))
                p.fail("freq_ghz", "frequency must be > 0");
        }
        {
            const auto [p, value] = next_header("tx_power_dbm");
            t.tx_power_dbm = p.real(value, "tx_power_dbm");
        }
        long nlos_through = 0;
        {
            const auto [p, value] = next_header("nlos_through");
            nlos_through = p.integer(value, "nlos_through");
            if (nlos_through < 0)
                p.fail("nlos_through", "must be >= 0");
        }
        if (cursor >= lines.size() || lines[cursor].second != kTrajectoryColumns)
            throw ParseError(source, cursor < lines.size() ? lines[cursor].first : lines.back().first, "<columns>",
                             "expected column header '" + std::string(kTrajectoryColumns) + "'");
        ++cursor;

        if (cursor >= lines.size())
            throw ParseError(source, lines.back().first, "location_index", "no MPCs");

        for (; cursor < lines.size(); ++cursor)
        {
            const auto [number, line] = lines[cursor];
            const LineParser p(source, number);
            const auto f = split(line);
            if (f.size() != kColumns.size())
                p.fail("<row>", "expected " + std::to_string(kColumns.size()) + " fields, found " +
                                    std::to_string(f.size()));

            const long index = p.integer(f[0], kColumns[0]);
            if (index < 1 || index > 1'000'000'000)
                p.fail(kColumns[0], "location_index must lie in [1, 1e9]");

            Mpc m;
            m.power_dbm = p.real(f[1], kColumns[1]);
            m.phase_deg = p.real(f[2], kColumns[2]);
            m.delay_s = p.real(f[3], kColumns[3]);
            m.aoa_az_deg = p.real(f[4], kColumns[4]);
            m.aoa_el_deg = p.real(f[5], kColumns[5]);
            m.aod_az_deg = p.real(f[6], kColumns[6]);
            m.aod_el_deg = p.real(f[7], kColumns[7]);
            const long refl = p.integer(f[8], kColumns[8]);
            const long diff = p.integer(f[9], kColumns[9]);

            if (!(m.phase_deg >= 0.0 && m.phase_deg < 360.0))
                p.fail(kColumns[2], "phase outside [0, 360)");
            if (m.delay_s < 0.0)
                p.fail(kColumns[3], "delay must be >= 0");
            for (int c : {4, 6})
            {
                const double az = c == 4 ? m.aoa_az_deg : m.aod_az_deg;
                if (!(az >= -180.0 && az < 180.0))
                    p.fail(kColumns[std::size_t(c)], "azimuth outside [-180, 180)");
            }
            for (int c : {5, 7})
            {
                const double el = c == 5 ? m.aoa_el_deg : m.aod_el_deg;
                if (!(el >= -90.0 && el <= 90.0))
                    p.fail(kColumns[std::size_t(c)], "elevation outside [-90, 90]");
            }
            if (refl < 0 || refl > 1000)
                p.fail(kColumns[8], "reflection count out of range");
            if (diff < 0 || diff > 1000)
                p.fail(kColumns[9], "diffraction count out of range");
            m.n_reflections = int(refl);
            m.n_diffractions = int(diff);

            if (t.snapshots.empty() || t.snapshots.back().location_index != index)
            {
                if (!t.snapshots.empty() && index < t.snapshots.back().location_index)
                    p.fail(kColumns[0], "location_index " + std::to_string(index) + " after " +
                                            std::to_string(t.snapshots.back().location_index) +
                                            " (rows must be grouped by ascending location)");
                t.snapshots.push_back(
                    {int(index), {}, index <= nlos_through ? Segment::Nlos : Segment::Los});
            }
            t.snapshots.back().mpcs.push_back(m);
        }
        return t;
    }

    Trajectory parse_trajectory(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ParseError(path, 0, "<file>", "cannot open trajectory file");
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_trajectory_text(buffer.str(), path);
    }

    std::string format_trajectory(const Trajectory &t)
    {
        validate(t);
        int nlos_through = 0;
        for (const auto &s : t.snapshots)
            if (s.segment == Segment::Nlos)
                nlos_through = s.location_index;
        for (const auto &s : t.snapshots)
            if ((s.location_index <= nlos_through) != (s.segment == Segment::Nlos))
                throw ComputationError("trajectory format needs the NLOS locations to precede the LOS ones");
        if (t.band.label.empty() || t.band.label.find_first_of(",\n\r") != std::string::npos)
            throw ComputationError("band label must be non-empty and free of commas and line breaks");

        std::string out;
        out.reserve(64 + t.snapshots.size() * 8 * 160);
        out += kTrajectoryMagic;
        out += "\nband,";
        out += t.band.label;
        out += "\nfreq_ghz,";
        append(out, t.band.freq_ghz);
        out += "\ntx_power_dbm,";
        append(out, t.tx_power_dbm);
        out += "\nnlos_through,";
        out += std::to_string(nlos_through);
        out += '\n';
        out += kTrajectoryColumns;
        out += '\n';
        for (const auto &s : t.snapshots)
        {
            for (const auto &m : s.mpcs)
            {
                out += std::to_string(s.location_index);
                for (double v : {m.power_dbm, m.phase_deg, m.delay_s, m.aoa_az_deg, m.aoa_el_deg, m.aod_az_deg,
                                 m.aod_el_deg})
                {
                    out += ',';
                    append(out, v);
                }
                out += ',';
                out += std::to_string(m.n_reflections);
                out += ',';
                out += std::to_string(m.n_diffractions);
                out += '\n';
            }
        }
        return out;
    }

    void write_trajectory(const Trajectory &t, const std::string &path)
    {
        const std::string text = format_trajectory(t);
        std::ofstream out(path, std::ios::binary);
        if (!out || !out.write(text.data(), std::streamsize(text.size())))
            throw ComputationError("cannot write trajectory file " + path);
    }
}
