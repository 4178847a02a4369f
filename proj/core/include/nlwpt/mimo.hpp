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

#ifndef NLWPT_MIMO_HPP
#define NLWPT_MIMO_HPP

#include "nlwpt/channel.hpp"
#include "nlwpt/convex_engine.hpp"
#include "nlwpt/eh_model.hpp"
#include "nlwpt/linalg.hpp"
#include "nlwpt/two_point.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlwpt
{
    // Psi(w) = sum_m xi_m sum_p phi(|g_p^m w|^2)
    double weighted_sum_objective(const ChannelSet &channels, const HarvestCurve &curve, const CVector &w);

    // sum_p phi(|g_p^m w|^2) for every node m (unweighted)
    std::vector<double> node_powers(const ChannelSet &channels, const HarvestCurve &curve, const CVector &w);

    // Psi_hat(W) = sum xi_m phi(g W g^H)
    double relaxed_objective(const ChannelSet &channels, const HarvestCurve &curve, const CMatrix &w);

    // sum xi_m phi'(g W g^H) g^H g
    CMatrix relaxed_gradient(const ChannelSet &channels, const HarvestCurve &curve, const CMatrix &w);

    // sum_m xi_m sum_p g_p^mH g_p^m
    CMatrix received_power_matrix(const ChannelSet &channels);

    // Unit eigenvector of the largest eigenvalue; first non-negligible entry real positive
    CVector dominant_unit_vector(const CMatrix &r);

    // Rows whose node weight is positive. Rows of zero-weight nodes do not enter Psi.
    ChannelSet active_rows(const ChannelSet &channels);

    struct PhiResult
    {
        double value = 0.0; // Phi(nu) in [W]
        CVector beam;       // |beam|^2 = nu
    };

    class PolyblockError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct PolyblockTrace
    {
        std::vector<double> upper; // best vertex bound per iteration
        std::vector<double> lower; // incumbent per iteration
    };

    struct PolyblockOptions
    {
        double tol = 1e-3;                 // epsilon_PA
        std::size_t max_antennas = 3;
        std::size_t max_vertices = 100000;
        std::size_t max_iterations = 200000;
        PolyblockTrace *trace = nullptr;
    };

    // max over relative phases of Psi(r .* exp(j theta)), theta_0 = 0. Coarse grid then pattern search.
    // `beam` receives the maximizing vector if not null.
    double phase_aligned_objective(const ChannelSet &channels, const HarvestCurve &curve, const Eigen::VectorXd &r,
                                   CVector *beam = nullptr);

    // Polyblock outer approximation in the magnitude orthant with the phase-aligned objective.
    // The incumbent is seeded with the per-rectenna MRT beams and the energy beam.
    PhiResult phi_optimal(const ChannelSet &channels, const HarvestCurve &curve, double nu,
                          const PolyblockOptions &options = {});

    struct ScaReport
    {
        std::size_t k_star = 0;
        std::vector<double> history; // h^(t), t >= 1
        double rank_residual = 0.0;  // of the final matrix
        CMatrix final_w;
        bool gradient_fallback = false; // received-power direction used because the gradient vanished
        bool energy_beam_kept = false;  // the energy beam beat the SCA beam and was returned instead
    };

    class ScaError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct ScaOptions
    {
        double tol = 1e-3; // epsilon_SCA, relative to |h|
        std::size_t max_iterations = 200;
        bool random_init = false; // W^(0) = (nu/n_t) I unless set
        std::uint64_t init_seed = 1;
        EngineOptions engine;
        ScaReport *report = nullptr;
    };

    // Sort by norm, largest feasible saturation count, SCA on the fixed pattern, rank-one extraction.
    // Throws std::invalid_argument if the curve is not convex below saturation.
    PhiResult phi_suboptimal(const ChannelSet &channels, const HarvestCurve &curve, double nu,
                             const ScaOptions &options = {});

    enum class PhiEngine
    {
        optimal,
        suboptimal
    };

    const char *engine_name(PhiEngine engine);
    PhiEngine parse_engine(const std::string &name);

    PhiResult evaluate_phi(PhiEngine engine, const ChannelSet &channels, const HarvestCurve &curve, double nu,
                           const PolyblockOptions &poly = {}, const ScaOptions &sca = {});

    struct MimoOptions
    {
        PhiEngine engine = PhiEngine::suboptimal;
        std::size_t coarse_points = 200; // intervals of the strategy grid
        std::size_t refine_steps = 10;   // sub-steps per coarse step near the mass points
        PolyblockOptions polyblock;
        ScaOptions sca;
    };

    struct MimoStrategy
    {
        std::vector<CVector> beams;       // one or two
        std::vector<double> probabilities;
        TwoPointDistribution law;
        std::vector<double> phi_values; // Psi(beam_i)
        double objective = 0.0;         // sum_i p_i Psi(beam_i)
    };

    // Largest transmit power needed to saturate all active rectennas (minimum-trace problem)
    double mimo_saturation_power(const ChannelSet &channels, const HarvestCurve &curve,
                                 const EngineOptions &options = {});

    MimoStrategy solve_mimo(const ChannelSet &channels, const HarvestCurve &curve, double budget,
                            const MimoOptions &options = {});

    // Expected per-node power under the strategy
    std::vector<double> strategy_node_powers(const ChannelSet &channels, const HarvestCurve &curve,
                                             const MimoStrategy &strategy);

    // Structured text: nu, masses, beams (re im pairs), objective
    void write_strategy(std::ostream &out, const MimoStrategy &strategy);
}

#endif
