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

#include "nlwpt/miso.hpp"

#include <stdexcept>

namespace nlwpt
{
    CVector mrt_beam(const CRowVector &g)
    {
        const double norm = g.norm();
        if (!(norm > 0.0))
            throw std::invalid_argument("mrt_beam: zero channel");
        return g.adjoint() / norm;
    }

    double miso_saturation_power(const CRowVector &g, const HarvestCurve &curve)
    {
        const double gain = g.squaredNorm();
        if (!(gain > 0.0))
            throw std::invalid_argument("miso_saturation_power: zero channel");
        return curve.saturation_input() / gain;
    }

    PowerCurve miso_effective_curve(const CRowVector &g, const HarvestCurve &curve, const GridSpec &grid)
    {
        const double gain = g.squaredNorm();
        return PowerCurve::sample(grid, [&](double nu) { return curve.power(nu * gain); });
    }

    MisoStrategy solve_miso(const CRowVector &g, const HarvestCurve &curve, double budget, const GridSpec &grid)
    {
        if (!(budget > 0.0))
            throw std::invalid_argument("solve_miso: budget must be positive");
        MisoStrategy out;
        out.beam = mrt_beam(g);
        const double p_max = miso_saturation_power(g, curve);
        const GridSpec cover = align_grid(covering_grid(grid, budget, p_max), p_max);
        const PowerCurve effective = miso_effective_curve(g, curve, cover);
        out.amplitude_law = grid_search(effective, budget);

        const double gain = g.squaredNorm();
        out.objective = out.amplitude_law.expectation([&](double nu) { return curve.power(nu * gain); });
        return out;
    }

    TwoPointDistribution miso_on_off_law(const CRowVector &g, const HarvestCurve &curve, double budget)
    {
        if (!(budget > 0.0))
            throw std::invalid_argument("miso_on_off_law: budget must be positive");
        const double p_max = miso_saturation_power(g, curve);
        if (budget >= p_max)
            return TwoPointDistribution::single(p_max);
        return TwoPointDistribution::from_mean(0.0, p_max, budget);
    }
}
