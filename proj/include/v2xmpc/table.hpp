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

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace v2xmpc
{
    /// One CSV cell: empty, text, integer, or real (printed with 9 significant digits).
    using Cell = std::variant<std::monostate, std::string, std::int64_t, double>;

    /// A result table with a fixed column order.
    struct Table
    {
        std::vector<std::string> columns;
        std::vector<std::vector<Cell>> rows;

        void add_row(std::vector<Cell> row);
    };

    std::string format_cell(const Cell &cell);

    /// Comma-separated rendering with a header line and '\n' line endings.
    std::string to_csv(const Table &table);
}
