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

#ifndef NLWPT_TWO_POINT_HPP
#define NLWPT_TWO_POINT_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

namespace nlwpt
{
    // Uniform transmit-power grid rho_j = j * delta_rho, j = 0 ... n_rho
    struct GridSpec
    {
        double delta_rho = 0.1;
        std::size_t n_rho = 1000;

        double rho(std::size_t j) const { return double(j) * delta_rho; }
        double upper() const { return rho(n_rho); }
        void validate() const;
    };

    // Returns `base` if it already reaches max(budget, saturation_nu), otherwise a grid with the
    // same step and more points. If that would exceed `max_points` samples, the step is widened.
    GridSpec covering_grid(const GridSpec &base, double budget, double saturation_nu,
                           std::size_t max_points = 200001);

    // Shrinks the step (never widens it) so that `anchor` is a grid point, keeping the upper end
    // at or above that of `base`. A curve known to saturate at `anchor` then saturates on a sample.
    GridSpec align_grid(const GridSpec &base, double anchor);

    // Sampled map nu -> Phi(nu) on a uniform grid
    class PowerCurve
    {
    public:
        // Throws std::invalid_argument unless step > 0, at least 2 values, all finite,
        // and values non-decreasing within 1e-9 * max value
        PowerCurve(double step, std::vector<double> values);

        static PowerCurve sample(const GridSpec &grid, const std::function<double(double)> &phi);

        double step() const { return step_; }
        std::size_t size() const { return values_.size(); }
        std::size_t last_index() const { return values_.size() - 1; }
        double rho(std::size_t j) const { return double(j) * step_; }
        double upper() const { return rho(last_index()); }
        double value(std::size_t j) const { return values_[j]; }
        const std::vector<double> &values() const { return values_; }
        double max_value() const { return max_value_; }

        // Linear interpolation inside the grid; throws std::out_of_range outside [0, upper()]
        double at(double nu) const;

    private:
        double step_;
        std::vector<double> values_;
        double max_value_ = 0.0;
    };

    // Two-column text "nu phi" with a comment header, 17 significant digits
    void write_power_curve(std::ostream &out, const PowerCurve &curve);

    // Inverse of write_power_curve; the step is taken from the first two rows.
    // Throws std::runtime_error on malformed or non-uniform input.
    PowerCurve read_power_curve(std::istream &in);

    // Law {(nu_1, weight_1), (nu_2, weight_2)} over transmit power. Single points are
    // stored as nu_1 = nu_2, weight_1 = 1.
    struct TwoPointDistribution
    {
        double nu_1 = 0.0;
        double nu_2 = 0.0;
        double weight_1 = 1.0;
        double weight_2 = 0.0;

        static TwoPointDistribution single(double nu) { return {nu, nu, 1.0, 0.0}; }

        // Mass on nu_2 is (mean - nu_1) / (nu_2 - nu_1); requires nu_1 < nu_2
        static TwoPointDistribution from_mean(double nu_1, double nu_2, double mean);

        bool is_single() const { return nu_1 == nu_2; }
        double mean() const { return weight_1 * nu_1 + weight_2 * nu_2; }
        double expectation(const std::function<double(double)> &f) const;

        // Throws std::invalid_argument if an invariant is violated
        void validate() const;
    };

    // (Phi(nu_2) - Phi(nu_1)) / (nu_2 - nu_1); throws std::invalid_argument if nu_2 <= nu_1
    double slope(double nu_1, double nu_2, const PowerCurve &curve);

    // Central-difference derivative at the budget, then f'(b)(b - rho_j) <= f(b) - f(rho_j) at every
    // grid point within 1e-9 * max value
    bool check_tangent_condition(const PowerCurve &curve, double budget);

    // Min-max search over the slope matrix S. Rules applied in order:
    //  1. curve already flat at the budget -> single point at the first saturating grid point
    //  2. tangent condition holds           -> single point at the budget
    //  3. otherwise i* = argmin_i max_j S(i, j), j* = argmax_j S(i*, j), first index on ties
    // Throws std::out_of_range if budget is not in (0, upper()].
    TwoPointDistribution grid_search(const PowerCurve &curve, double budget);

    // Objective of grid_search at budget = mean
    double two_point_upper_bound(const PowerCurve &curve, double mean);

    // E{Phi(nu)} under a law, with linear interpolation between grid points
    double expected_value(const PowerCurve &curve, const TwoPointDistribution &law);

    // Best chord through (nu_i, value_i) and (nu_j, value_j) with nu_i <= budget <= nu_j over
    // arbitrary, strictly increasing sample locations (exhaustive). A sample exactly at the budget
    // gives a single point. Ties keep the first pair found (smaller i, then smaller j).
    // Throws std::invalid_argument on bad input and std::out_of_range if the budget is not covered.
    TwoPointDistribution best_chord(const std::vector<double> &nu, const std::vector<double> &values,
                                    double budget);
}

#endif
