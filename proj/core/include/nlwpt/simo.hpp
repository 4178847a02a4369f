// SPDX-License-Identifier: Apache-2.0
//
// nlwpt - transmit strategy optimization for wireless power transfer with
// non-linear energy harvesters
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

#ifndef NLWPT_SIMO_HPP
#define NLWPT_SIMO_HPP

#include "nlwpt/channel.hpp"
#include "nlwpt/eh_model.hpp"
#include "nlwpt/two_point.hpp"

#include <vector>

namespace nlwpt
{
    struct SimoGain
    {
        double gain_sq = 0.0; // |g_p^m|^2
        double weight = 0.0;  // xi_m of the owning node
    };

    struct SimoCurveSpec
    {
        std::vector<SimoGain> gains;
        HarvestCurve curve;

        // Throws std::invalid_argument for negative or non-finite gains or weights
        void validate() const;
    };

    // One entry per rectenna; requires channels.n_t == 1
    SimoCurveSpec simo_spec(const ChannelSet &channels, const HarvestCurve &curve);

    // sum_{m,p} xi_m phi(nu |g_p^m|^2)
    double simo_value(const SimoCurveSpec &spec, double nu);

    // Transmit power at which every rectenna with positive gain and weight is saturated
    double simo_saturation_power(const SimoCurveSpec &spec);

    PowerCurve simo_effective_curve(const SimoCurveSpec &spec, const GridSpec &grid);

    // Grid search on the aggregate curve; the grid is extended to cover saturation
    TwoPointDistribution solve_simo(const SimoCurveSpec &spec, double budget, const GridSpec &grid = GridSpec{});

    // Two-rectenna closed form. Gains are sorted descending first, so rho_min = A_s^2 / max gain and
    // rho_max = A_s^2 / min gain.
    struct SimoClosedForm
    {
        double rho_min = 0.0;
        double rho_max = 0.0;
        TwoPointDistribution law;
    };
    SimoClosedForm simo_two_rectenna_law(double gain_sq_1, double gain_sq_2, double a_s_sq, double budget);
}

#endif
