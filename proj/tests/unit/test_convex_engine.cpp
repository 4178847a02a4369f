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

#include "nlwpt/convex_engine.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

using namespace nlwpt;

namespace
{
    constexpr double a_s_sq = 25e-6;

    ChannelSet draw(std::size_t n_t, std::size_t rows, std::uint64_t r)
    {
        SystemConfig cfg;
        cfg.n_t = n_t;
        cfg.nodes = {{rows, 3.0, 1.0}};
        cfg.seed = 29;
        return draw_channels(cfg, r);
    }

    double received(const CRowVector &g, const CMatrix &w) { return (g * w * g.adjoint())(0, 0).real(); }
}

TEST_SUITE("convex_engine")
{
    TEST_CASE("psd check")
    {
        CMatrix w = CMatrix::Identity(2, 2);
        CHECK(is_psd(w));
        w(0, 1) = Complex(0.0, 2.0);
        w(1, 0) = Complex(0.0, -2.0);
        CHECK_FALSE(is_psd(w)); // Hermitian, eigenvalues -1 and 3
        w(1, 0) = Complex(0.0, 2.0);
        CHECK_FALSE(is_psd(w)); // not Hermitian
    }

    TEST_CASE("patterns")
    {
        const auto p = make_pattern({2, 0, 1}, 2, a_s_sq);
        CHECK(p.saturated == std::vector<std::size_t>{2, 0});
        CHECK(p.unsaturated == std::vector<std::size_t>{1});
        CHECK(p.margin == doctest::Approx(1e-9 * a_s_sq));
        CHECK_NOTHROW(p.validate(3));
        CHECK_THROWS_AS(p.validate(4), std::invalid_argument);
        SaturationPattern dup{{0, 0}, {1}, 0.0};
        CHECK_THROWS_AS(dup.validate(3), std::invalid_argument);
    }

    TEST_CASE("parameter layout and embedding")
    {
        CMatrix w(3, 3);
        w << 2.0, Complex(0.1, 0.2), Complex(0.3, -0.4), Complex(0.1, -0.2), 3.0, Complex(0.5, 0.6),
            Complex(0.3, 0.4), Complex(0.5, -0.6), 4.0;
        const auto x = hermitian_to_params(w);
        REQUIRE(x.size() == 9);
        CHECK(x(0) == 2.0);
        CHECK(x(2) == 4.0);
        CHECK(x(3) == 0.1);
        CHECK(x(4) == 0.2);
        CHECK(x(5) == 0.3);
        CHECK(x(6) == -0.4);
        CHECK(x(7) == 0.5);
        CHECK((params_to_hermitian(x, 3) - w).norm() < 1e-15);

        const auto e = real_embedding(w);
        CHECK(e.rows() == 6);
        CHECK(e(0, 1) == 0.1);
        CHECK(e(3, 1) == 0.2);
        CHECK(e(0, 4) == -0.2);
        // eigenvalues of the embedding are those of w, each twice
        Eigen::SelfAdjointEigenSolver<CMatrix> a(w);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> b(e);
        for (int k = 0; k < 3; ++k)
            CHECK(b.eigenvalues()(2 * k) == doctest::Approx(a.eigenvalues()(k)).epsilon(1e-12));
    }

    TEST_CASE("rank-one extraction")
    {
        CVector v(3);
        v << Complex(0.0, 2.0), Complex(1.0, 1.0), 0.5;
        const auto [u, residual] = extract_rank_one(v * v.adjoint());
        CHECK(residual < 1e-14);
        CHECK(std::abs(u(0).imag()) < 1e-14);
        CHECK(u(0).real() > 0.0);
        CHECK((u * u.adjoint() - v * v.adjoint()).norm() < 1e-12);

        CMatrix mixed = CMatrix::Identity(2, 2);
        CHECK(extract_rank_one(mixed).second == doctest::Approx(0.5));
    }

    TEST_CASE("single-rectenna feasibility follows the Rayleigh bound")
    {
        for (std::uint64_t r = 0; r < 10; ++r)
        {
            const auto ch = draw(1 + r % 3, 1, r);
            const double p = a_s_sq / ch.rows[0].gain.squaredNorm();
            const auto pattern = make_pattern({0}, 1, a_s_sq);
            const auto yes = solve_feasibility(ch, a_s_sq, pattern, 1.001 * p);
            CAPTURE(r);
            CHECK(yes.feasible);
            CHECK(received(ch.rows[0].gain, yes.w) >= a_s_sq * (1 - 1e-12));
            CHECK(yes.w.trace().real() <= 1.001 * p * (1 + 1e-9));
            CHECK(is_psd(yes.w));
            CHECK_FALSE(solve_feasibility(ch, a_s_sq, pattern, 0.999 * p).feasible);
            CHECK_FALSE(find_interior_point(ch, a_s_sq, pattern, 0.999 * p).has_value());
        }
    }

    TEST_CASE("minimum saturating trace matches the dual oracle")
    {
        for (std::uint64_t r = 0; r < 10; ++r)
        {
            const auto ch = draw(2 + r % 2, 2, r);
            const double ref = oracle::min_trace_two_rows(ch.rows[0].gain, ch.rows[1].gain, a_s_sq);
            const auto got = min_saturating_trace(ch, a_s_sq, {0, 1});
            CAPTURE(r);
            CHECK(got.trace == doctest::Approx(ref).epsilon(1e-6));
            CHECK(received(ch.rows[0].gain, got.w) >= a_s_sq * (1 - 1e-9));
            CHECK(received(ch.rows[1].gain, got.w) >= a_s_sq * (1 - 1e-9));

            const auto both = make_pattern({0, 1}, 2, a_s_sq);
            CHECK(solve_feasibility(ch, a_s_sq, both, 1.001 * ref).feasible);
            CHECK_FALSE(solve_feasibility(ch, a_s_sq, both, 0.999 * ref).feasible);
        }
    }

    TEST_CASE("mixed pattern respects both constraint sides")
    {
        const auto ch = draw(2, 2, 4);
        const std::size_t strong = ch.rows[0].gain.squaredNorm() >= ch.rows[1].gain.squaredNorm() ? 0 : 1;
        const std::size_t weak = 1 - strong;
        const double p = a_s_sq / ch.rows[strong].gain.squaredNorm();
        const auto pattern = make_pattern({strong, weak}, 1, a_s_sq);
        const auto res = solve_feasibility(ch, a_s_sq, pattern, 1.5 * p);
        if (res.feasible)
        {
            CHECK(received(ch.rows[strong].gain, res.w) >= a_s_sq * (1 - 1e-12));
            CHECK(received(ch.rows[weak].gain, res.w) <= a_s_sq - pattern.margin);
        }
        const auto empty = solve_feasibility(ch, a_s_sq, make_pattern({0, 1}, 0, a_s_sq), 1.0);
        CHECK(empty.feasible);
        CHECK(empty.slack == 1.0);
        CHECK(empty.w.norm() == 0.0);
    }

    TEST_CASE("linearized step in the unsaturated region is MRT")
    {
        const auto ch = draw(2, 1, 6);
        const CRowVector g = ch.rows[0].gain;
        const double p = a_s_sq / g.squaredNorm();
        const double nu = 0.5 * p;
        const auto pattern = make_pattern({0}, 0, a_s_sq);
        const CMatrix c = g.adjoint() * g;
        const CMatrix w = solve_linearized_step(ch, a_s_sq, pattern, nu, c);
        CHECK(w.trace().real() == doctest::Approx(nu).epsilon(1e-6));
        CHECK(received(g, w) == doctest::Approx(nu * g.squaredNorm()).epsilon(1e-6));
        CHECK(extract_rank_one(w).second < 1e-6);
    }

    TEST_CASE("linearized step with a saturating pattern")
    {
        const auto ch = draw(2, 2, 8);
        const double need = min_saturating_trace(ch, a_s_sq, {0}).trace;
        const double nu = 1.2 * need;
        const auto pattern = make_pattern({0, 1}, 1, a_s_sq);
        const auto start = find_interior_point(ch, a_s_sq, pattern, nu);
        if (!start)
            return; // pattern empty for this draw
        const CMatrix c = ch.rows[1].gain.adjoint() * ch.rows[1].gain;
        const CMatrix w = solve_linearized_step(ch, a_s_sq, pattern, nu, c, start);
        CHECK(received(ch.rows[0].gain, w) >= a_s_sq * (1 - 1e-9));
        CHECK(received(ch.rows[1].gain, w) <= a_s_sq);
        CHECK(w.trace().real() <= nu * (1 + 1e-9));
        // objective at least that of the interior start
        CHECK(received(ch.rows[1].gain, w) >= received(ch.rows[1].gain, *start) * (1 - 1e-9));
    }

    TEST_CASE("infeasible linearized step")
    {
        const auto ch = draw(2, 1, 9);
        const double p = a_s_sq / ch.rows[0].gain.squaredNorm();
        const auto pattern = make_pattern({0}, 1, a_s_sq);
        CHECK_THROWS_AS(solve_linearized_step(ch, a_s_sq, pattern, 0.5 * p, CMatrix::Identity(2, 2)),
                        std::invalid_argument);
    }

    TEST_CASE("engine trace")
    {
        const auto ch = draw(2, 2, 1);
        EngineTrace trace;
        EngineOptions opt;
        opt.trace = &trace;
        const auto pattern = make_pattern({0, 1}, 1, a_s_sq);
        const double nu = 2.0 * a_s_sq / ch.rows[0].gain.squaredNorm();
        solve_feasibility(ch, a_s_sq, pattern, nu, opt);
        REQUIRE_FALSE(trace.entries.empty());
        CHECK(trace.entries.front().stage == "feasibility");
        for (std::size_t i = 1; i < trace.entries.size(); ++i)
            CHECK(trace.entries[i].t >= trace.entries[i - 1].t);
        std::ostringstream out;
        write_engine_trace(out, pattern, nu, trace);
        CHECK(out.str().find("feasibility") != std::string::npos);
    }
}
