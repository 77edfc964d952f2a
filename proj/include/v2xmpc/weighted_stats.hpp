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
#include <concepts>

namespace v2xmpc
{
    /// Power-weighted mean: sum(x * w) / sum(w).
    template <typename DerivedX, typename DerivedW>
    typename DerivedX::Scalar weighted_mean(const Eigen::ArrayBase<DerivedX> &x, const Eigen::ArrayBase<DerivedW> &w)
    {
        return (x * w).sum() / w.sum();
    }

    /// Power-weighted RMS deviation about `mean`.
    template <typename DerivedX, typename DerivedW>
    typename DerivedX::Scalar weighted_rms(const Eigen::ArrayBase<DerivedX> &x, const Eigen::ArrayBase<DerivedW> &w,
                                           typename DerivedX::Scalar mean)
    {
        return std::sqrt(((x - mean).square() * w).sum() / w.sum());
    }

    template <typename DerivedX, typename DerivedW>
    typename DerivedX::Scalar weighted_rms(const Eigen::ArrayBase<DerivedX> &x, const Eigen::ArrayBase<DerivedW> &w)
    {
        return weighted_rms(x, w, weighted_mean(x, w));
    }

    /// dB to linear power ratio.
    template <typename Derived>
    Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1> db_to_linear(const Eigen::ArrayBase<Derived> &db)
    {
        using Scalar = typename Derived::Scalar;
        return (db * (std::log(Scalar(10)) / Scalar(10))).exp();
    }

    template <std::floating_point Scalar>
    Scalar db_to_linear(Scalar db)
    {
        return std::pow(Scalar(10), db / Scalar(10));
    }
}
