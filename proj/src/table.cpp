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

#include "v2xmpc/table.hpp"

#include <array>
#include <charconv>

#include "v2xmpc/errors.hpp"

namespace v2xmpc
{
    void Table::add_row(std::vector<Cell> row)
    {
        if (row.size() != columns.size())
            throw ComputationError("table row has " + std::to_string(row.size()) + " cells, expected " +
                                   std::to_string(columns.size()));
        rows.push_back(std::move(row));
    }

    std::string format_cell(const Cell &cell)
    {
        struct Visitor
        {
            std::string operator()(std::monostate) const { return {}; }
            std::string operator()(const std::string &s) const { return s; }
            std::string operator()(std::int64_t v) const { return std::to_string(v); }
            std::string operator()(double v) const
            {
                if (v == 0.0)
                    v = 0.0; // no "-0"
                std::array<char, 32> buf{};
                const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 9);
                return {buf.data(), res.ptr};
            }
        };
        return std::visit(Visitor{}, cell);
    }

    std::string to_csv(const Table &table)
    {
        std::string out;
        for (std::size_t i = 0; i < table.columns.size(); ++i)
        {
            if (i)
                out += ',';
            out += table.columns[i];
        }
        out += '\n';
        for (const auto &row : table.rows)
        {
            for (std::size_t i = 0; i < row.size(); ++i)
            {
                if (i)
                    out += ',';
                out += format_cell(row[i]);
            }
            out += '\n';
        }
        return out;
    }
}
