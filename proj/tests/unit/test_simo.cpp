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

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace nlwpt;

namespace
{
    ChannelSet draw_simo(std::uint64_t r, std::size_t rectennas = 2)
    {
        SystemConfig cfg;
        cfg.n_t = 1;
        cfg.nodes = {{rectennas, 3.0 + double(r % 4), 1.0}};
        cfg.seed = 23;
        return draw_channels(cfg, r);
    }
}

TEST_SUITE("simo")
{
    TEST_CASE("spec and aggregate value")
    {
        const auto curve = HarvestCurve::rectenna(RectennaParams{});
        SystemConfig cfg;
        cfg.n_t = 1;
        cfg.nodes = {{2, 3.0, 0.3}, {1, 4.0, 0.7}};
        const auto ch = draw_channels(cfg, 0);
        const auto spec = simo_spec(ch, curve);
        REQUIRE(spec.gains.size() == 3);
        CHECK(spec.gains[2].weight == 0.7);
        const double nu = 2.0;
        double expect = 0.0;
        for (const auto &row : ch.rows)
            expect += ch.weight_of(row) * curve.power(nu * row.gain.squaredNorm());
        CHECK(simo_value(spec, nu) == doctest::Approx(expect).epsilon(1e-14));

        SystemConfig multi = cfg;
        multi.n_t = 2;
        CHECK_THROWS_AS(simo_spec(draw_channels(multi, 0), curve), std::invalid_argument);
        SimoCurveSpec bad{{{-1.0, 1.0}}, curve};
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    }

    TEST_CASE("saturation power ignores zero-weight rectennas")
    {
        const auto curve = HarvestCurve::rectenna(RectennaParams{});
        const SimoCurveSpec spec{{{1e-5, 1.0}, {1e-7, 0.0}}, curve};
        CHECK(simo_saturation_power(spec) == doctest::Approx(2.5));
    }

    TEST_CASE("two-rectenna closed form regimes")
    {
        const auto curve = HarvestCurve::rectenna(RectennaParams{});
        const GridSpec grid;
        int regimes[3] = {0, 0, 0};
        for (std::uint64_t r = 0; r < 30; ++r)
        {
            const auto ch = draw_simo(r);
            const auto spec = simo_spec(ch, curve);
            const double g1 = spec.gains[0].gain_sq, g2 = spec.gains[1].gain_sq;
            const auto probe = simo_two_rectenna_law(g1, g2, 25e-6, 1.0);
            for (double budget : {0.5 * probe.rho_min, 0.5 * (probe.rho_min + probe.rho_max), 1.2 * probe.rho_max})
            {
                const auto closed = simo_two_rectenna_law(g1, g2, 25e-6, budget);
                const auto law = solve_simo(spec, budget, grid);
                CAPTURE(r);
                CAPTURE(budget);
                if (budget >= closed.rho_max)
                {
                    ++regimes[2];
                    CHECK(law.is_single());
                    CHECK(std::abs(law.nu_1 - closed.rho_max) <= grid.delta_rho);
                }
                else if (budget < closed.rho_min)
                {
                    ++regimes[0];
                    CHECK(law.nu_1 == 0.0);
                    CHECK(std::abs(law.nu_2 - closed.rho_min) <= grid.delta_rho);
                }
                else
                {
                    ++regimes[1];
                    CHECK(std::abs(law.nu_1 - closed.rho_min) <= grid.delta_rho);
                    CHECK(std::abs(law.nu_2 - closed.rho_max) <= grid.delta_rho);
                }
                CHECK(law.mean() <= budget * (1 + 1e-9));
            }

            // chord ordering behind the closed form
            const double lo = probe.rho_min, hi = probe.rho_max;
            const double f_lo = simo_value(spec, lo), f_hi = simo_value(spec, hi);
            CHECK(f_lo / lo >= f_hi / hi * (1 - 1e-12));
            CHECK(f_hi / hi >= (f_hi - f_lo) / (hi - lo) * (1 - 1e-12));
        }
        CHECK(regimes[0] == 30);
        CHECK(regimes[1] == 30);
        CHECK(regimes[2] == 30);
    }

    TEST_CASE("equal gains collapse to one point")
    {
        const auto closed = simo_two_rectenna_law(1e-5, 1e-5, 25e-6, 4.0);
        CHECK(closed.law.is_single());
        CHECK(closed.law.nu_1 == doctest::Approx(2.5));
        CHECK_THROWS_AS(simo_two_rectenna_law(0.0, 1e-5, 25e-6, 1.0), std::invalid_argument);
    }

    TEST_CASE("effective curve is the aggregate on the grid")
    {
        const auto curve = HarvestCurve::rectenna(RectennaParams{});
        const auto spec = simo_spec(draw_simo(1, 3), curve);
        const auto eff = simo_effective_curve(spec, GridSpec{0.5, 40});
        for (std::size_t j = 0; j < eff.size(); ++j)
            CHECK(eff.value(j) == doctest::Approx(simo_value(spec, eff.rho(j))).epsilon(1e-14));
    }
}
