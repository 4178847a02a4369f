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

#ifndef NLWPT_MISO_HPP
#define NLWPT_MISO_HPP

#include "nlwpt/eh_model.hpp"
#include "nlwpt/linalg.hpp"
#include "nlwpt/two_point.hpp"

namespace nlwpt
{
    // MRT beam plus a law over the transmit power nu = r_s^2. The symbol phase is left free.
    struct MisoStrategy
    {
        CVector beam;                       // Unit norm
        TwoPointDistribution amplitude_law; // Over nu in [W]
        double objective = 0.0;             // E{phi(nu |g|^2)} in [W]
    };

    // g^H / |g|; throws std::invalid_argument for a zero channel
    CVector mrt_beam(const CRowVector &g);

    // A_s^2 / |g|^2, the smallest transmit power that saturates the rectenna
    double miso_saturation_power(const CRowVector &g, const HarvestCurve &curve);

    // Phi(rho_j) = phi(rho_j |g|^2)
    PowerCurve miso_effective_curve(const CRowVector &g, const HarvestCurve &curve, const GridSpec &grid);

    // MRT + grid search. The grid is extended (same step) when it does not reach
    // max(budget, A_s^2 / |g|^2).
    MisoStrategy solve_miso(const CRowVector &g, const HarvestCurve &curve, double budget,
                            const GridSpec &grid = GridSpec{});

    // Closed form for convex-below-saturation curves: single point at P_max if budget >= P_max,
    // else mass budget / P_max at P_max and the rest at 0
    TwoPointDistribution miso_on_off_law(const CRowVector &g, const HarvestCurve &curve, double budget);
}

#endif
