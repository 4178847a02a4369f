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

#ifndef NLWPT_HARNESS_HPP
#define NLWPT_HARNESS_HPP

#include "nlwpt/channel.hpp"
#include "nlwpt/eh_model.hpp"
#include "nlwpt/mimo.hpp"
#include "nlwpt/two_point.hpp"

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace nlwpt
{
    enum class Geometry
    {
        miso,
        simo,
        mimo
    };

    const char *geometry_name(Geometry g);
    Geometry parse_geometry(const std::string &name);

    // Strategy labels accepted in ExperimentSpec::engines
    //   optimal, suboptimal  proposed two-point strategy (MISO/SIMO: closed-form-consistent grid search)
    //   baseline1            energy beamforming at constant power
    //   baseline2            single phi-engine beam at constant power
    bool is_known_engine_label(const std::string &label);

    struct ExperimentSpec
    {
        std::string id = "experiment";
        Geometry geometry = Geometry::mimo;
        SystemConfig system;
        std::vector<double> budgets;                    // [W]
        std::vector<std::vector<double>> weight_sweep;  // empty: the system weights
        std::vector<std::string> engines = {"suboptimal"};
        std::string baseline_engine = "suboptimal";     // phi engine behind baseline2
        std::size_t realizations = 50;
        std::string output;                             // empty: stdout
        std::string format = "csv";
        bool timing = false;                            // wall_time_s stays 0 unless set

        RectennaParams rectenna;
        GridSpec grid;
        double eps_pa = 1e-3;
        double eps_sca = 1e-3;
        std::size_t strategy_points = 200;

        // Throws std::invalid_argument on any violated invariant
        void validate() const;

        std::vector<std::vector<double>> effective_weight_sweep() const;
        MimoOptions mimo_options(PhiEngine engine) const;
    };

    struct ResultRow
    {
        std::string experiment_id;
        std::size_t realization = 0;
        double budget_w = 0.0;
        std::vector<double> weights;
        std::vector<double> node_powers_w;
        double objective_w = 0.0;
        std::string engine;
        double wall_time_s = 0.0;
        std::string error; // empty on success
    };

    // Flat "key = value" text, '#' starts a comment. Lists are comma separated, the weight sweep
    // separates vectors with ';'. See the README for the key list.
    std::map<std::string, std::string> parse_key_values(std::istream &in);
    ExperimentSpec spec_from_config(const std::map<std::string, std::string> &kv, Geometry fallback);

    std::vector<double> parse_list(const std::string &text);

    // Weight vectors (x, 1 - x) for x = 0, 1/(points-1), ..., 1
    std::vector<std::vector<double>> two_node_weight_sweep(std::size_t points);

    // Per (realization, weights, budget, engine) cell. Solver failures are recorded in the row.
    std::vector<ResultRow> run_sweep(const ExperimentSpec &spec);

    // One cell; throws on solver failure
    ResultRow run_cell(const ExperimentSpec &spec, const ChannelSet &channels, const HarvestCurve &curve,
                       std::size_t realization, double budget, const std::string &engine);

    struct SummaryRow
    {
        std::string experiment_id;
        double budget_w = 0.0;
        std::vector<double> weights;
        std::string engine;
        std::size_t count = 0;
        double mean_objective_w = 0.0;
        double stderr_objective_w = 0.0; // sample standard deviation / sqrt(count), 0 for one row
        std::vector<double> mean_node_powers_w;
        std::vector<double> stderr_node_powers_w;
    };

    // Grouped by (experiment, budget, weights, engine) in order of first appearance; failed rows skipped
    std::vector<SummaryRow> summarize(const std::vector<ResultRow> &rows);

    void write_csv(std::ostream &out, const std::vector<ResultRow> &rows);
    void write_json(std::ostream &out, const std::vector<ResultRow> &rows);
    void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &rows);

    // Largest distance of a point to the upper-right boundary of the convex hull of the points
    // and the axis anchors, divided by the largest coordinate
    double region_hull_violation(const std::vector<std::array<double, 2>> &points);

    // Phi(nu) samples for realization 0: rows of (nu, phi)
    std::vector<std::array<double, 2>> sample_effective_curve(const ExperimentSpec &spec, PhiEngine engine,
                                                              std::size_t points);

    // Quick invariant checks; one PASS/FAIL line per check. Returns true if all pass.
    bool run_selftest(std::ostream &out);

    // Shortest round-trip decimal representation
    std::string format_number(double v);
}

#endif
