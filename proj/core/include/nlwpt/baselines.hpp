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

#ifndef NLWPT_BASELINES_HPP
#define NLWPT_BASELINES_HPP

#include "nlwpt/channel.hpp"
#include "nlwpt/eh_model.hpp"
#include "nlwpt/linalg.hpp"
#include "nlwpt/mimo.hpp"

#include <string>

namespace nlwpt
{
    struct BaselineStrategy
    {
        CVector beam;      // |beam|^2 = budget
        std::string label; // baseline1 | baseline2
    };

    // sqrt(budget) times the dominant eigenvector of sum_m xi_m sum_p g^H g (linear-EH optimum)
    BaselineStrategy baseline_energy_beam(const ChannelSet &channels, double budget);

    // The phi engine's beam at nu = budget, transmitted with constant power
    BaselineStrategy baseline_single_beam(const ChannelSet &channels, const HarvestCurve &curve, double budget,
                                          PhiEngine engine, const PolyblockOptions &poly = {},
                                          const ScaOptions &sca = {});

    // Psi(beam)
    double baseline_objective(const ChannelSet &channels, const HarvestCurve &curve, const BaselineStrategy &s);
}

#endif
