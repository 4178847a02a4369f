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

#include <doctest.h>

#include <cmath>

using namespace nlwpt;

namespace
{
    ChannelSet draw(std::size_t n_t, std::vector<NodeConfig> nodes, std::uint64_t r)
    {
        SystemConfig cfg;
        cfg.n_t = n_t;
        cfg.nodes = std::move(nodes);
        cfg.seed = 41;
        return draw_channels(cfg, r);
    }
}

TEST_SUITE("baselines")
{
    TEST_CASE("energy beam maximizes the weighted received power")
    {
        const auto ch = draw(3, {{2, 3.0, 0.3}, {1, 4.0, 0.7}}, 0);
        const double budget = 2.0;
        const auto b = baseline_energy_beam(ch, budget);
        CHECK(b.label == "baseline1");
        CHECK(b.beam.squaredNorm() == doctest::Approx(budget).epsilon(1e-12));

        auto received = [&](const CVector &w)
        {
            double s = 0.0;
            for (const auto &row : ch.rows)
                s += ch.weight_of(row) * std::norm((row.gain * w).value());
            return s;
        };
        const double best = received(b.beam);
        CounterRng rng(4, 2);
        for (int t = 0; t < 300; ++t)
        {
            CVector w(3);
            for (Eigen::Index k = 0; k < 3; ++k)
                w(k) = rng.complex_normal();
            w *= std::sqrt(budget) / w.norm();
            CHECK(received(w) <= best * (1 + 1e-12));
        }
    }

    TEST_CASE("single beam uses the engine at the full budget")
    {
        const auto curve = HarvestCurve::rectenna(RectennaParams{});
        const auto ch = draw(2, {{2, 3.0, 1.0}}, 1);
        const double budget = 0.5 * mimo_saturation_power(ch, curve);
        const auto b = baseline_single_beam(ch, curve, budget, PhiEngine::suboptimal);
        CHECK(b.label == "baseline2");
        CHECK(b.beam.squaredNorm() == doctest::Approx(budget).epsilon(1e-12));
        const auto ref = phi_suboptimal(ch, curve, budget);
        CHECK(baseline_objective(ch, curve, b) == doctest::Approx(ref.value).epsilon(1e-12));
    }

    TEST_CASE("ordering against the energy beam on a single rectenna")
    {
        // one rectenna: both baselines are MRT, so they agree
        const auto curve = HarvestCurve::rectenna(RectennaParams{});
        const auto ch = draw(3, {{1, 3.0, 1.0}}, 2);
        const double budget = 0.6 * mimo_saturation_power(ch, curve);
        const double b1 = baseline_objective(ch, curve, baseline_energy_beam(ch, budget));
        const double b2 = baseline_objective(ch, curve, baseline_single_beam(ch, curve, budget, PhiEngine::optimal));
        CHECK(b2 == doctest::Approx(b1).epsilon(1e-3));
        CHECK(b1 == doctest::Approx(curve.power(budget * ch.rows[0].gain.squaredNorm())).epsilon(1e-12));
    }

    TEST_CASE("argument checks")
    {
        const auto ch = draw(2, {{1, 3.0, 1.0}}, 0);
        CHECK_THROWS_AS(baseline_energy_beam(ch, 0.0), std::invalid_argument);
    }
}
