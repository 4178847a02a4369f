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

#ifndef NLWPT_CONVEX_ENGINE_HPP
#define NLWPT_CONVEX_ENGINE_HPP

#include "nlwpt/channel.hpp"
#include "nlwpt/linalg.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nlwpt
{
    // Hermitian positive semidefinite n_t x n_t matrix, W = w w^H scale (trace in [W])
    using PsdMatrix = CMatrix;

    // Hermitian within 1e-10 (relative to the largest entry) and min eigenvalue >= -1e-9 trace
    bool is_psd(const CMatrix &w);

    // Rectenna indices refer to ChannelSet::rows
    struct SaturationPattern
    {
        std::vector<std::size_t> saturated;   // g W g^H >= A_s^2
        std::vector<std::size_t> unsaturated; // g W g^H <= A_s^2 - margin
        double margin = 0.0;                  // [W], default set by make_pattern as 1e-9 A_s^2

        // Throws std::invalid_argument unless the two lists partition 0 ... rectennas-1
        void validate(std::size_t rectennas) const;
    };

    // The first k entries of `order` saturated, the rest not
    SaturationPattern make_pattern(const std::vector<std::size_t> &order, std::size_t k, double a_s_sq);

    // Distinct from an infeasible verdict: the interior-point iteration did not converge
    // or a returned matrix failed the constraint audit
    class SolverError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Optional record of barrier iterates for regression tests
    struct EngineTrace
    {
        struct Entry
        {
            std::string stage; // feasibility | step | min_trace
            double t = 0.0;    // barrier parameter
            double objective = 0.0;
            CMatrix w;         // iterate in [W] units
        };
        std::vector<Entry> entries;
    };

    struct EngineOptions
    {
        double mu = 20.0;            // barrier parameter growth
        double t0 = 1.0;
        double gap_tol = 1e-9;       // stop at degree / t <= gap_tol (1 + |objective|), normalized units
        double interior_tol = 1e-9;  // feasible iff the normalized max-min slack is at least this
        std::size_t max_outer = 80;
        std::size_t max_newton = 200;
        EngineTrace *trace = nullptr;
    };

    struct FeasibilityResult
    {
        bool feasible = false;
        double slack = 0.0; // optimal (or certified) normalized slack, in units of A_s^2
        PsdMatrix w;        // strictly feasible point when feasible, W = 0 for an empty saturated list
    };

    // Max-min slack form of the saturation feasibility problem at transmit power nu
    FeasibilityResult solve_feasibility(const ChannelSet &channels, double a_s_sq, const SaturationPattern &pattern,
                                        double nu, const EngineOptions &options = {});

    // Same problem without the empty-list shortcut; returns a strictly interior point or nothing
    std::optional<PsdMatrix> find_interior_point(const ChannelSet &channels, double a_s_sq,
                                                 const SaturationPattern &pattern, double nu,
                                                 const EngineOptions &options = {});

    // max tr(C W) over {W >= 0, tr W <= nu, pattern constraints}. `start` must be strictly
    // feasible; if absent one is computed. Throws std::invalid_argument if the region is empty.
    PsdMatrix solve_linearized_step(const ChannelSet &channels, double a_s_sq, const SaturationPattern &pattern,
                                    double nu, const CMatrix &gradient, const std::optional<PsdMatrix> &start = {},
                                    const EngineOptions &options = {});

    // min tr W subject to g W g^H >= A_s^2 for the listed rows
    struct MinTraceResult
    {
        double trace = 0.0;
        PsdMatrix w;
    };
    MinTraceResult min_saturating_trace(const ChannelSet &channels, double a_s_sq,
                                        const std::vector<std::size_t> &rows, const EngineOptions &options = {});

    // (sqrt(lambda_1) u_1, 1 - lambda_1 / trace). The first non-negligible entry of u_1 is real positive.
    std::pair<CVector, double> extract_rank_one(const PsdMatrix &w);

    // Real embedding [[Re W, -Im W], [Im W, Re W]]
    Eigen::MatrixXd real_embedding(const CMatrix &w);

    // Parameter layout used by the solver: x = (W_00 ... W_{n-1,n-1}, Re W_01, Im W_01, Re W_02, ...)
    // with pairs k < l in row-major order
    Eigen::VectorXd hermitian_to_params(const CMatrix &w);
    CMatrix params_to_hermitian(const Eigen::VectorXd &x, std::size_t n);

    // Structured text: one block per trace entry with stage, t, objective and the matrix rows
    void write_engine_trace(std::ostream &out, const SaturationPattern &pattern, double nu, const EngineTrace &trace);
}

#endif
