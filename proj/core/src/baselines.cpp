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

#include "nlwpt/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace nlwpt
{
    BaselineStrategy baseline_energy_beam(const ChannelSet &channels, double budget)
    {
        if (!(budget > 0.0))
            throw std::invalid_argument("baseline_energy_beam: budget must be positive");
        channels.validate();
        const CMatrix r = received_power_matrix(channels);
        CVector u;
        if (r.cwiseAbs().maxCoeff() > 0.0)
            u = dominant_unit_vector(r);
        else
        {
            u = CVector::Zero(Eigen::Index(channels.n_t));
            u(0) = 1.0;
        }
        return {std::sqrt(budget) * u, "baseline1"};
    }

    BaselineStrategy baseline_single_beam(const ChannelSet &channels, const HarvestCurve &curve, double budget,
                                          PhiEngine engine, const PolyblockOptions &poly, const ScaOptions &sca)
    {
        if (!(budget > 0.0))
            throw std::invalid_argument("baseline_single_beam: budget must be positive");
        channels.validate();
        return {evaluate_phi(engine, channels, curve, budget, poly, sca).beam, "baseline2"};
    }

    double baseline_objective(const ChannelSet &channels, const HarvestCurve &curve, const BaselineStrategy &s)
    {
        return weighted_sum_objective(channels, curve, s.beam);
    }
}
