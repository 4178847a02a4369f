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

#include "nlwpt/simo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nlwpt
{
    void SimoCurveSpec::validate() const
    {
        if (gains.empty())
            throw std::invalid_argument("SimoCurveSpec: no rectennas");
        for (const auto &g : gains)
            if (!(g.gain_sq >= 0.0) || !std::isfinite(g.gain_sq) || !(g.weight >= 0.0) || !std::isfinite(g.weight))
                throw std::invalid_argument("SimoCurveSpec: gains and weights must be finite and non-negative");
    }

    SimoCurveSpec simo_spec(const ChannelSet &channels, const HarvestCurve &curve)
    {
        if (channels.n_t != 1)
            throw std::invalid_argument("simo_spec: single-antenna transmitter required");
        SimoCurveSpec spec{{}, curve};
        for (const auto &row : channels.rows)
            spec.gains.push_back({row.gain.squaredNorm(), channels.weight_of(row)});
        spec.validate();
        return spec;
    }

    double simo_value(const SimoCurveSpec &spec, double nu)
    {
        double sum = 0.0;
        for (const auto &g : spec.gains)
            if (g.weight > 0.0)
                sum += g.weight * spec.curve.power(nu * g.gain_sq);
        return sum;
    }

    double simo_saturation_power(const SimoCurveSpec &spec)
    {
        double nu = 0.0;
        for (const auto &g : spec.gains)
            if (g.gain_sq > 0.0 && g.weight > 0.0)
                nu = std::max(nu, spec.curve.saturation_input() / g.gain_sq);
        return nu;
    }

    PowerCurve simo_effective_curve(const SimoCurveSpec &spec, const GridSpec &grid)
    {
        spec.validate();
        return PowerCurve::sample(grid, [&](double nu) { return simo_value(spec, nu); });
    }

    TwoPointDistribution solve_simo(const SimoCurveSpec &spec, double budget, const GridSpec &grid)
    {
        if (!(budget > 0.0))
            throw std::invalid_argument("solve_simo: budget must be positive");
        const double nu_sat = simo_saturation_power(spec);
        GridSpec cover = covering_grid(grid, budget, nu_sat);
        if (nu_sat > 0.0)
            cover = align_grid(cover, nu_sat);
        return grid_search(simo_effective_curve(spec, cover), budget);
    }

    SimoClosedForm simo_two_rectenna_law(double gain_sq_1, double gain_sq_2, double a_s_sq, double budget)
    {
        if (!(budget > 0.0) || !(a_s_sq > 0.0))
            throw std::invalid_argument("simo_two_rectenna_law: budget and saturation input must be positive");
        if (!(std::min(gain_sq_1, gain_sq_2) > 0.0))
            throw std::invalid_argument("simo_two_rectenna_law: gains must be positive");
        SimoClosedForm out;
        out.rho_min = a_s_sq / std::max(gain_sq_1, gain_sq_2);
        out.rho_max = a_s_sq / std::min(gain_sq_1, gain_sq_2);
        if (budget >= out.rho_max)
            out.law = TwoPointDistribution::single(out.rho_max);
        else if (budget < out.rho_min)
            out.law = TwoPointDistribution::from_mean(0.0, out.rho_min, budget);
        else if (out.rho_max > out.rho_min)
            out.law = TwoPointDistribution::from_mean(out.rho_min, out.rho_max, budget);
        else
            out.law = TwoPointDistribution::single(out.rho_max);
        return out;
    }
}
