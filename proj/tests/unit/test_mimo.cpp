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

#include "nlwpt/mimo.hpp"
#include "nlwpt/miso.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

using namespace nlwpt;

namespace
{
    const HarvestCurve &rectenna()
    {
        static const HarvestCurve curve = HarvestCurve::rectenna(RectennaParams{});
        return curve;
    }

    ChannelSet draw(std::size_t n_t, std::vector<NodeConfig> nodes, std::uint64_t r, std::uint64_t seed = 31)
    {
        SystemConfig cfg;
        cfg.n_t = n_t;
        cfg.nodes = std::move(nodes);
        cfg.seed = seed;
        return draw_channels(cfg, r);
    }

    CVector random_beam(CounterRng &rng, std::size_t n, double nu)
    {
        CVector w(Eigen::Index(n), 1);
        for (Eigen::Index k = 0; k < w.size(); ++k)
            w(k) = rng.complex_normal();
        return w * (std::sqrt(nu) / w.norm());
    }
}

TEST_SUITE("mimo")
{
    TEST_CASE("objective basics")
    {
        const auto ch = draw(3, {{2, 3.0, 0.4}, {1, 4.0, 0.6}}, 0);
        const auto &curve = rectenna();
        CHECK(weighted_sum_objective(ch, curve, CVector::Zero(3)) == 0.0);

        CounterRng rng(1, 1);
        const CVector w = random_beam(rng, 3, 2.0);
        const double v = weighted_sum_objective(ch, curve, w);
        CHECK(weighted_sum_objective(ch, curve, w * std::polar(1.0, 1.234)) == doctest::Approx(v).epsilon(1e-14));

        const auto p = node_powers(ch, curve, w);
        CHECK(0.4 * p[0] + 0.6 * p[1] == doctest::Approx(v).epsilon(1e-14));
        CHECK(relaxed_objective(ch, curve, w * w.adjoint()) == doctest::Approx(v).epsilon(1e-12));

        // single rectenna with MRT is the MISO curve
        const auto one = draw(2, {{1, 3.0, 1.0}}, 2);
        const CVector mrt = mrt_beam(one.rows[0].gain) * std::sqrt(1.5);
        CHECK(weighted_sum_objective(one, curve, mrt) ==
              doctest::Approx(curve.power(1.5 * one.rows[0].gain.squaredNorm())).epsilon(1e-13));
    }

    TEST_CASE("relaxed gradient matches directional differences")
    {
        const auto ch = draw(2, {{2, 3.0, 1.0}}, 3);
        const auto &curve = rectenna();
        CounterRng rng(5, 0);
        const CVector w = random_beam(rng, 2, 1.0);
        const CMatrix base = w * w.adjoint();
        const CMatrix grad = relaxed_gradient(ch, curve, base);
        CHECK((grad - grad.adjoint()).norm() <= 1e-12 * grad.norm());
        for (int t = 0; t < 5; ++t)
        {
            const CVector d = random_beam(rng, 2, 1.0);
            const CMatrix dir = d * d.adjoint() - base;
            const double h = 1e-6;
            const double fd = (relaxed_objective(ch, curve, base + h * dir) - relaxed_objective(ch, curve, base - h * dir)) /
                              (2 * h);
            const double an = (grad * dir).trace().real();
            CHECK(an == doctest::Approx(fd).epsilon(1e-5));
        }
    }

    TEST_CASE("received power matrix and dominant vector")
    {
        const auto ch = draw(3, {{1, 3.0, 0.5}, {1, 3.0, 0.5}}, 4);
        const CMatrix r = received_power_matrix(ch);
        CHECK((r - r.adjoint()).norm() < 1e-20);
        const CVector u = dominant_unit_vector(r);
        CHECK(u.norm() == doctest::Approx(1.0));
        Eigen::SelfAdjointEigenSolver<CMatrix> es(r);
        CHECK((u.adjoint() * r * u)(0, 0).real() == doctest::Approx(es.eigenvalues()(2)).epsilon(1e-12));
        CHECK(std::abs(u(0).imag()) < 1e-15);
    }

    TEST_CASE("zero-weight rows are dropped")
    {
        const auto ch = draw(2, {{2, 3.0, 1.0}, {1, 3.0, 0.0}}, 0);
        const auto active = active_rows(ch);
        CHECK(active.rows.size() == 2);
        CHECK(active.weights == ch.weights);
    }

    TEST_CASE("phase alignment dominates random phases")
    {
        const auto ch = draw(3, {{2, 3.0, 0.5}, {1, 3.5, 0.5}}, 5);
        const auto &curve = rectenna();
        CounterRng rng(8, 0);
        Eigen::VectorXd r(3);
        r << 1.0, 0.7, 0.4;
        CVector best;
        const double aligned = phase_aligned_objective(ch, curve, r, &best);
        CHECK(best.cwiseAbs().isApprox(r, 1e-12));
        CHECK(weighted_sum_objective(ch, curve, best) == doctest::Approx(aligned).epsilon(1e-14));
        for (int t = 0; t < 200; ++t)
        {
            CVector w(3);
            for (Eigen::Index k = 0; k < 3; ++k)
                w(k) = std::polar(r(k), 2 * std::numbers::pi * rng.uniform());
            CHECK(weighted_sum_objective(ch, curve, w) <= aligned * (1 + 1e-9));
        }
    }

    TEST_CASE("polyblock on a single antenna and a single rectenna")
    {
        const auto &curve = rectenna();
        const auto siso = draw(1, {{2, 3.0, 1.0}}, 1);
        const auto r1 = phi_optimal(siso, curve, 2.0);
        CHECK(r1.value == doctest::Approx(weighted_sum_objective(siso, curve, CVector::Constant(1, std::sqrt(2.0)))));

        for (std::size_t n = 2; n <= 3; ++n)
        {
            const auto ch = draw(n, {{1, 3.0, 1.0}}, 10 + n);
            const CRowVector g = ch.rows[0].gain;
            const double nu = 0.4 * curve.saturation_input() / g.squaredNorm();
            const auto res = phi_optimal(ch, curve, nu);
            CAPTURE(n);
            CHECK(res.value == doctest::Approx(curve.power(nu * g.squaredNorm())).epsilon(1e-3));
            CHECK(res.beam.squaredNorm() == doctest::Approx(nu).epsilon(1e-12));
            const double cosine = std::abs((g * res.beam).value()) / (g.norm() * res.beam.norm());
            CHECK(cosine == doctest::Approx(1.0).epsilon(1e-3));
        }
    }

    TEST_CASE("polyblock matches a dense two-antenna search")
    {
        const auto &curve = rectenna();
        for (std::uint64_t r = 0; r < 4; ++r)
        {
            const auto ch = draw(2, {{2, 3.0, 1.0}}, r);
            const double nu_sat = mimo_saturation_power(ch, curve);
            for (double frac : {0.3, 0.7})
            {
                const double nu = frac * nu_sat;
                PolyblockTrace trace;
                PolyblockOptions opt;
                opt.trace = &trace;
                const auto res = phi_optimal(ch, curve, nu, opt);
                const double dense =
                    oracle::dense_two_antenna(nu, [&](const CVector &w) { return weighted_sum_objective(ch, curve, w); });
                CAPTURE(r);
                CAPTURE(frac);
                CHECK(res.value >= dense * (1 - 1e-2));
                CHECK(res.value <= dense * (1 + 1e-2));
                REQUIRE_FALSE(trace.upper.empty());
                for (std::size_t i = 0; i < trace.upper.size(); ++i)
                {
                    CHECK(trace.lower[i] <= trace.upper[i]);
                    if (i > 0)
                        CHECK(trace.upper[i] - trace.lower[i] <= trace.upper[i - 1] - trace.lower[i - 1] + 1e-20);
                }
            }
        }
    }

    TEST_CASE("polyblock limits")
    {
        const auto &curve = rectenna();
        const auto ch = draw(4, {{1, 3.0, 1.0}}, 0);
        CHECK_THROWS_AS(phi_optimal(ch, curve, 1.0), PolyblockError);
        const auto three = draw(3, {{2, 3.0, 0.5}, {1, 4.0, 0.5}}, 0);
        PolyblockOptions tiny;
        tiny.max_iterations = 2;
        CHECK_THROWS_AS(phi_optimal(three, curve, 0.3 * mimo_saturation_power(three, curve), tiny), PolyblockError);
        CHECK_THROWS_AS(phi_optimal(three, curve, 0.0), std::invalid_argument);
    }

    TEST_CASE("sca saturates a single rectenna")
    {
        const auto &curve = rectenna();
        const auto ch = draw(3, {{1, 3.0, 1.0}}, 6);
        const double p = 25e-6 / ch.rows[0].gain.squaredNorm();
        ScaReport report;
        ScaOptions opt;
        opt.report = &report;
        const auto res = phi_suboptimal(ch, curve, 1.01 * p, opt);
        CHECK(report.k_star == 1);
        CHECK(res.value == doctest::Approx(curve.saturation_power()).epsilon(1e-9));
        CHECK(res.beam.squaredNorm() == doctest::Approx(1.01 * p).epsilon(1e-12));
    }

    TEST_CASE("sca ascent below saturation")
    {
        const auto &curve = rectenna();
        const auto ch = draw(2, {{2, 3.0, 0.5}, {1, 3.0, 0.5}}, 7);
        ScaReport report;
        ScaOptions opt;
        opt.report = &report;
        opt.tol = 1e-9;
        const double nu = 0.05 * mimo_saturation_power(ch, curve);
        phi_suboptimal(ch, curve, nu, opt);
        CHECK(report.k_star == 0);
        REQUIRE(report.history.size() >= 2);
        for (std::size_t t = 1; t < report.history.size(); ++t)
            CHECK(report.history[t] >= report.history[t - 1] - 1e-12);
        CHECK(report.rank_residual <= 1e-6);
    }

    TEST_CASE("sca against polyblock on two-rectenna nodes")
    {
        const auto &curve = rectenna();
        for (std::uint64_t r = 0; r < 6; ++r)
        {
            const auto ch = draw(2, {{2, 3.0, 1.0}}, r, 77);
            const double nu_sat = mimo_saturation_power(ch, curve);
            for (double frac : {0.2, 0.5, 0.8, 1.1})
            {
                const double nu = frac * nu_sat;
                const double opt = phi_optimal(ch, curve, nu).value;
                const double sub = phi_suboptimal(ch, curve, nu).value;
                CAPTURE(r);
                CAPTURE(frac);
                CHECK(sub >= 0.98 * opt);
                CHECK(sub <= opt * (1 + 2e-3));
            }
        }
    }

    TEST_CASE("sca options and checks")
    {
        const auto ch = draw(2, {{2, 3.0, 1.0}}, 2);
        ScaOptions opt;
        opt.random_init = true;
        opt.init_seed = 9;
        const double nu = 0.5 * mimo_saturation_power(ch, rectenna());
        const auto a = phi_suboptimal(ch, rectenna(), nu, opt);
        const auto b = phi_suboptimal(ch, rectenna(), nu, opt);
        CHECK(a.value == b.value);
        const auto concave = HarvestCurve::custom([](double x) { return std::sqrt(x); },
                                                  [](double x) { return 0.5 / std::sqrt(x); }, 1e-5);
        CHECK_THROWS_AS(phi_suboptimal(ch, concave, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(phi_suboptimal(ch, rectenna(), -1.0), std::invalid_argument);
    }

    TEST_CASE("engine names")
    {
        CHECK(parse_engine("optimal") == PhiEngine::optimal);
        CHECK(std::string(engine_name(PhiEngine::suboptimal)) == "suboptimal");
        CHECK_THROWS_AS(parse_engine("fast"), std::invalid_argument);
    }

    TEST_CASE("saturation power")
    {
        const auto one = draw(3, {{1, 3.0, 1.0}}, 3);
        CHECK(mimo_saturation_power(one, rectenna()) ==
              doctest::Approx(25e-6 / one.rows[0].gain.squaredNorm()).epsilon(1e-6));
        const auto siso = draw(1, {{3, 3.0, 1.0}}, 3);
        double worst = 0.0;
        for (const auto &row : siso.rows)
            worst = std::max(worst, 25e-6 / row.gain.squaredNorm());
        CHECK(mimo_saturation_power(siso, rectenna()) == doctest::Approx(worst));
    }

    TEST_CASE("miso embedded in the mimo path")
    {
        const auto &curve = rectenna();
        for (std::uint64_t r = 0; r < 3; ++r)
        {
            const auto ch = draw(2, {{1, 3.0, 1.0}}, r);
            const CRowVector g = ch.rows[0].gain;
            const double p_max = miso_saturation_power(g, curve);
            const double budget = 0.4 * p_max;
            MimoOptions opt;
            opt.coarse_points = 60;
            const auto s = solve_mimo(ch, curve, budget, opt);
            const auto ref = solve_miso(g, curve, budget);
            CAPTURE(r);
            CHECK(std::abs(s.law.nu_1 - ref.amplitude_law.nu_1) <= 0.1);
            CHECK(std::abs(s.law.nu_2 - ref.amplitude_law.nu_2) <= 0.1);
            for (const auto &w : s.beams)
                if (w.norm() > 0.0)
                    CHECK(std::abs((g * w).value()) / (g.norm() * w.norm()) == doctest::Approx(1.0).epsilon(1e-6));
            CHECK(s.objective >= ref.objective * (1 - 1e-3));
        }
    }

    TEST_CASE("strategy invariants")
    {
        const auto &curve = rectenna();
        const auto ch = draw(2, {{2, 3.0, 0.5}, {1, 4.0, 0.5}}, 1);
        const double nu_sat = mimo_saturation_power(ch, curve);
        MimoOptions opt;
        opt.coarse_points = 40;
        for (double frac : {0.3, 1.5})
        {
            const double budget = frac * nu_sat;
            const auto s = solve_mimo(ch, curve, budget, opt);
            CHECK(s.law.mean() <= budget * (1 + 1e-9));
            double audit = 0.0;
            for (std::size_t i = 0; i < s.beams.size(); ++i)
            {
                CHECK(s.phi_values[i] == doctest::Approx(weighted_sum_objective(ch, curve, s.beams[i])).epsilon(1e-14));
                audit += s.probabilities[i] * s.phi_values[i];
            }
            CHECK(s.objective == audit);
            const auto nodes = strategy_node_powers(ch, curve, s);
            CHECK(0.5 * nodes[0] + 0.5 * nodes[1] == doctest::Approx(s.objective).epsilon(1e-12));
            if (frac > 1.0)
            {
                CHECK(s.beams.size() == 1);
                CHECK(s.objective == doctest::Approx(2.0 * 0.5 * curve.saturation_power() + 0.5 * curve.saturation_power())
                                         .epsilon(1e-6));
            }
        }
        std::ostringstream out;
        write_strategy(out, solve_mimo(ch, curve, 0.5 * nu_sat, opt));
        CHECK(out.str().rfind("# nlwpt strategy v1", 0) == 0);
        CHECK(out.str().find("objective ") != std::string::npos);
        CHECK_THROWS_AS(solve_mimo(ch, curve, 0.0), std::invalid_argument);
    }
}
