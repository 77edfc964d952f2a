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

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

namespace v2xmpc
{
    template <typename Scalar>
    constexpr Scalar deg_to_rad(Scalar deg) noexcept
    {
        return deg * std::numbers::pi_v<Scalar> / Scalar(180);
    }

    template <typename Scalar>
    constexpr Scalar rad_to_deg(Scalar rad) noexcept
    {
        return rad * Scalar(180) / std::numbers::pi_v<Scalar>;
    }

    /// Maps an azimuth to [-180, 180).
    template <typename Scalar>
    Scalar wrap_azimuth(Scalar deg) noexcept
    {
        Scalar wrapped = deg - Scalar(360) * std::floor((deg + Scalar(180)) / Scalar(360));
        if (wrapped >= Scalar(180))
            wrapped -= Scalar(360);
        if (wrapped < Scalar(-180))
            wrapped += Scalar(360);
        return wrapped;
    }

    /// Maps an angular offset to (-180, 180].
    template <typename Scalar>
    Scalar wrap_offset(Scalar deg) noexcept
    {
        return -wrap_azimuth(-deg);
    }

    /// Element-wise azimuth offset of `az` from `reference`, wrapped to (-180, 180].
    template <typename Derived>
    Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1>
    azimuth_offsets(const Eigen::ArrayBase<Derived> &az, typename Derived::Scalar reference)
    {
        using Scalar = typename Derived::Scalar;
        return (az - reference).unaryExpr([](Scalar d) { return wrap_offset(d); });
    }

    /// A direction given as azimuth/elevation in degrees.
    struct Direction
    {
        double az_deg = 0.0;
        double el_deg = 0.0;

        friend bool operator==(const Direction &, const Direction &) = default;
    };

    /// Unit vector for a direction (x east of az 0, z up).
    template <typename Scalar = double>
    Eigen::Matrix<Scalar, 3, 1> unit_vector(Scalar az_deg, Scalar el_deg)
    {
        const Scalar az = deg_to_rad(az_deg), el = deg_to_rad(el_deg);
        return {std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)};
    }

    /// Direction of a (not necessarily normalized) vector. A vertical vector gets azimuth 0.
    template <typename Derived>
    Direction direction_of(const Eigen::MatrixBase<Derived> &v)
    {
        const double horizontal = std::hypot(double(v(0)), double(v(1)));
        const double el = rad_to_deg(std::atan2(double(v(2)), horizontal));
        const double az = horizontal == 0.0 ? 0.0 : wrap_azimuth(rad_to_deg(std::atan2(double(v(1)), double(v(0)))));
        return {az, el};
    }

    /// Great-circle distance between two directions in degrees.
    double angular_distance_deg(const Direction &a, const Direction &b);
}
