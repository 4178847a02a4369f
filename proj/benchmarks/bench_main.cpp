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

// Timings for the hot paths: the harvest curve, the two-point grid search and the Phi engines.

#include "nlwpt/channel.hpp"
#include "nlwpt/eh_model.hpp"
#include "nlwpt/mimo.hpp"
#include "nlwpt/two_point.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace nlwpt;

namespace
{
    const HarvestCurve &rectenna()
    {
        static const HarvestCurve curve = HarvestCurve::rectenna(RectennaParams{});
        return curve;
    }

    // Monotone random walk that flattens after a random knee
    PowerCurve random_curve(std::size_t n)
    {
        std::mt19937_64 rng(42);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        std::vector<double> v(n + 1, 0.0);
        const std::size_t knee = n / 2 + std::size_t(u(rng) * double(n / 2));
        for (std::size_t j = 1; j <= n; ++j)
            v[j] = j < knee ? v[j - 1] + u(rng) * u(rng) : v[j - 1];
        return PowerCurve(0.01, v);
    }

    ChannelSet channels(std::size_t n_t, std::size_t n_e)
    {
        SystemConfig cfg;
        cfg.n_t = n_t;
        cfg.nodes = {{n_e, 3.0, 1.0}};
        cfg.seed = 99;
        return draw_channels(cfg, 0);
    }
}

static void BM_harvest_power(benchmark::State &state)
{
    const auto &curve = rectenna();
    double x = 0.0;
    for (auto _ : state)
    {
        x += 1e-7;
        if (x > 3e-5)
            x = 0.0;
        benchmark::DoNotOptimize(curve.power(x));
    }
}
BENCHMARK(BM_harvest_power);

static void BM_grid_search(benchmark::State &state)
{
    const auto curve = random_curve(std::size_t(state.range(0)));
    const double budget = curve.upper() * 0.3;
    for (auto _ : state)
        benchmark::DoNotOptimize(grid_search(curve, budget));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_grid_search)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_phi_optimal(benchmark::State &state)
{
    const auto ch = channels(2, std::size_t(state.range(0)));
    const double nu = 0.5 * mimo_saturation_power(ch, rectenna());
    for (auto _ : state)
        benchmark::DoNotOptimize(phi_optimal(ch, rectenna(), nu).value);
}
BENCHMARK(BM_phi_optimal)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_phi_suboptimal(benchmark::State &state)
{
    const auto ch = channels(std::size_t(state.range(0)), 2);
    const double nu = 0.5 * mimo_saturation_power(ch, rectenna());
    for (auto _ : state)
        benchmark::DoNotOptimize(phi_suboptimal(ch, rectenna(), nu).value);
}
BENCHMARK(BM_phi_suboptimal)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_solve_mimo(benchmark::State &state)
{
    const auto ch = channels(2, 2);
    MimoOptions opt;
    opt.engine = PhiEngine::suboptimal;
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_mimo(ch, rectenna(), 1.0, opt).objective);
}
BENCHMARK(BM_solve_mimo)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
