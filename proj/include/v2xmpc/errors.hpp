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
#include <stdexcept>
#include <string>

namespace v2xmpc
{
    /// Base of every error raised by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Malformed trajectory or scene input. Carries the 1-based line and the field name.
    class ParseError : public Error
    {
    public:
        ParseError(std::string source, std::size_t line, std::string field, const std::string &message)
            : Error(source + ":" + std::to_string(line) + ": field '" + field + "': " + message),
              source_(std::move(source)), line_(line), field_(std::move(field))
        {
        }

        const std::string &source() const noexcept { return source_; }
        std::size_t line() const noexcept { return line_; }
        const std::string &field() const noexcept { return field_; }

    private:
        std::string source_;
        std::size_t line_;
        std::string field_;
    };

    /// Invalid run configuration or out-of-range parameter.
    class ConfigError : public Error
    {
    public:
        using Error::Error;
    };

    /// A statistic cannot be evaluated for the given data (e.g. empty snapshot).
    class ComputationError : public Error
    {
    public:
        using Error::Error;
    };
}
