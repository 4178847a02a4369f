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

#include "nlwpt/two_point.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlwpt
{
    namespace
    {
        constexpr double monotone_tol = 1e-9;

        // Relative slack when matching a budget against grid points
        constexpr double on_grid_tol = 1e-9;

        // Smallest index n with rho_n >= budget
        std::size_t first_at_or_above(const PowerCurve &curve, double budget)
        {
            const double pos = budget / curve.step();
            auto n = std::size_t(std::ceil(pos - on_grid_tol));
            return std::min(n, curve.last_index());
        }

        // First index whose value reaches the maximum within tolerance
        std::size_t first_saturating(const std::vector<double> &values, double vmax)
        {
            const double level = vmax - monotone_tol * std::abs(vmax);
            for (std::size_t j = 0; j < values.size(); ++j)
                if (values[j] >= level)
                    return j;
            return values.size() - 1;
        }
    }

    void GridSpec::validate() const
    {
        if (!(delta_rho > 0.0) || !std::isfinite(delta_rho))
            throw std::invalid_argument("GridSpec: delta_rho must be positive");
        if (n_rho < 1)
            throw std::invalid_argument("GridSpec: n_rho must be at least 1");
    }

    GridSpec covering_grid(const GridSpec &base, double budget, double saturation_nu, std::size_t max_points)
    {
        base.validate();
        if (max_points < 2)
            throw std::invalid_argument("covering_grid: max_points must be at least 2");
        const double target = std::max(budget, saturation_nu);
        if (!std::isfinite(target))
            throw std::invalid_argument("covering_grid: target power is not finite");
        if (base.upper() >= target)
            return base;

        GridSpec out = base;
        const double needed = std::ceil(target / base.delta_rho);
        if (needed + 1.0 <= double(max_points))
        {
            out.n_rho = std::size_t(needed);
            return out;
        }
        out.n_rho = max_points - 1;
        out.delta_rho = target / double(out.n_rho);
        // Guard against rounding leaving the target just outside
        while (out.upper() < target)
            out.delta_rho = std::nextafter(out.delta_rho, std::numeric_limits<double>::infinity());
        return out;
    }

    GridSpec align_grid(const GridSpec &base, double anchor)
    {
        base.validate();
        if (!(anchor > 0.0) || !std::isfinite(anchor))
            throw std::invalid_argument("align_grid: anchor must be positive and finite");
        GridSpec out = base;
        out.delta_rho = anchor / std::ceil(anchor / base.delta_rho);
        out.n_rho = std::size_t(std::ceil(base.upper() / out.delta_rho - 1e-9));
        while (out.upper() < base.upper())
            ++out.n_rho;
        return out;
    }

    PowerCurve::PowerCurve(double step, std::vector<double> values) : step_(step), values_(std::move(values))
    {
        if (!(step_ > 0.0) || !std::isfinite(step_))
            throw std::invalid_argument("PowerCurve: step must be positive");
        if (values_.size() < 2)
            throw std::invalid_argument("PowerCurve: at least two samples are required");
        for (double v : values_)
            if (!std::isfinite(v))
                throw std::invalid_argument("PowerCurve: non-finite value");
        max_value_ = *std::max_element(values_.begin(), values_.end());
        const double tol = monotone_tol * std::abs(max_value_);
        for (std::size_t j = 1; j < values_.size(); ++j)
            if (values_[j] < values_[j - 1] - tol)
                throw std::invalid_argument("PowerCurve: values must be non-decreasing");
    }

    PowerCurve PowerCurve::sample(const GridSpec &grid, const std::function<double(double)> &phi)
    {
        grid.validate();
        std::vector<double> values(grid.n_rho + 1);
        for (std::size_t j = 0; j <= grid.n_rho; ++j)
            values[j] = phi(grid.rho(j));
        return PowerCurve(grid.delta_rho, std::move(values));
    }

    double PowerCurve::at(double nu) const
    {
        const double top = upper();
        if (!(nu >= 0.0) || nu > top * (1.0 + on_grid_tol))
            throw std::out_of_range("PowerCurve::at: power outside the grid");
        const double pos = std::min(nu / step_, double(last_index()));
        const auto j = std::min(std::size_t(pos), last_index() - 1);
        const double frac = pos - double(j);
        if (frac <= 0.0)
            return values_[j];
        return values_[j] + frac * (values_[j + 1] - values_[j]);
    }

    void write_power_curve(std::ostream &out, const PowerCurve &curve)
    {
        const auto old_prec = out.precision(17);
        out << "# nu_w phi_w\n";
        for (std::size_t j = 0; j < curve.size(); ++j)
            out << curve.rho(j) << " " << curve.value(j) << "\n";
        out.precision(old_prec);
    }

    PowerCurve read_power_curve(std::istream &in)
    {
        std::vector<double> nu, values;
        std::string line;
        while (std::getline(in, line))
        {
            if (line.empty() || line[0] == '#')
                continue;
            std::istringstream ss(line);
            double a = 0.0, b = 0.0;
            if (!(ss >> a >> b))
                throw std::runtime_error("read_power_curve: malformed row '" + line + "'");
            nu.push_back(a);
            values.push_back(b);
        }
        if (nu.size() < 2)
            throw std::runtime_error("read_power_curve: need at least two rows");
        const double step = nu[1] - nu[0];
        for (std::size_t j = 0; j < nu.size(); ++j)
            if (std::abs(nu[j] - double(j) * step) > 1e-9 * step * double(j + 1))
                throw std::runtime_error("read_power_curve: grid is not uniform from zero");
        try
        {
            return PowerCurve(step, std::move(values));
        }
        catch (const std::invalid_argument &e)
        {
            throw std::runtime_error(std::string("read_power_curve: ") + e.what());
        }
    }

    TwoPointDistribution TwoPointDistribution::from_mean(double nu_1, double nu_2, double mean)
    {
        if (!(nu_2 > nu_1))
            throw std::invalid_argument("TwoPointDistribution::from_mean: need nu_1 < nu_2");
        const double w2 = std::clamp((mean - nu_1) / (nu_2 - nu_1), 0.0, 1.0);
        return {nu_1, nu_2, 1.0 - w2, w2};
    }

    double TwoPointDistribution::expectation(const std::function<double(double)> &f) const
    {
        if (is_single())
            return f(nu_1);
        double out = 0.0;
        if (weight_1 > 0.0)
            out += weight_1 * f(nu_1);
        if (weight_2 > 0.0)
            out += weight_2 * f(nu_2);
        return out;
    }

    void TwoPointDistribution::validate() const
    {
        if (!(nu_1 >= 0.0) || !(nu_2 >= nu_1))
            throw std::invalid_argument("TwoPointDistribution: need 0 <= nu_1 <= nu_2");
        if (!(weight_1 >= 0.0) || !(weight_2 >= 0.0) || std::abs(weight_1 + weight_2 - 1.0) > 1e-12)
            throw std::invalid_argument("TwoPointDistribution: weights must be a probability vector");
    }

    double slope(double nu_1, double nu_2, const PowerCurve &curve)
    {
        if (!(nu_2 > nu_1))
            throw std::invalid_argument("slope: need nu_2 > nu_1");
        return (curve.at(nu_2) - curve.at(nu_1)) / (nu_2 - nu_1);
    }

    bool check_tangent_condition(const PowerCurve &curve, double budget)
    {
        const double h = curve.step();
        const double lo = std::max(0.0, budget - h);
        const double hi = std::min(curve.upper(), budget + h);
        if (!(hi > lo))
            return false;
        const double d = (curve.at(hi) - curve.at(lo)) / (hi - lo);
        const double fb = curve.at(budget);
        const double tol = monotone_tol * std::abs(curve.max_value());
        for (std::size_t j = 0; j < curve.size(); ++j)
            if (d * (budget - curve.rho(j)) > fb - curve.value(j) + tol)
                return false;
        return true;
    }

    TwoPointDistribution grid_search(const PowerCurve &curve, double budget)
    {
        if (!(budget > 0.0) || budget > curve.upper() * (1.0 + on_grid_tol))
            throw std::out_of_range("grid_search: budget outside the power grid");

        const auto &v = curve.values();
        const std::size_t s = first_saturating(v, curve.max_value());
        if (curve.rho(s) <= budget * (1.0 + on_grid_tol))
            return TwoPointDistribution::single(curve.rho(s));

        if (check_tangent_condition(curve, budget))
            return TwoPointDistribution::single(budget);

        const std::size_t n = std::max<std::size_t>(1, first_at_or_above(curve, budget));
        const std::size_t last = curve.last_index();
        const double step = curve.step();

        auto sigma = [&](std::size_t i, std::size_t j) { return (v[j] - v[i]) / (double(j - i) * step); };

        // Row-wise maximum of S(i, j) = sigma(rho_i, rho_j), i < n <= j. Every row point lies left of
        // the columns, so the maximum is attained on the upper hull of the columns, where sigma(i, .)
        // is unimodal.
        std::vector<std::size_t> hull;
        for (std::size_t j = n; j <= last; ++j)
        {
            while (hull.size() >= 2)
            {
                const std::size_t a = hull[hull.size() - 2], b = hull.back();
                // drop b unless it lies strictly above the chord a -> j
                if ((v[b] - v[a]) * double(j - a) <= (v[j] - v[a]) * double(b - a))
                    hull.pop_back();
                else
                    break;
            }
            hull.push_back(j);
        }

        std::size_t best_i = 0;
        double best_rowmax = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i)
        {
            std::size_t lo = 0, hi = hull.size() - 1;
            while (lo < hi)
            {
                const std::size_t mid = (lo + hi) / 2;
                if (sigma(i, hull[mid]) < sigma(i, hull[mid + 1]))
                    lo = mid + 1;
                else
                    hi = mid;
            }
            double rowmax = sigma(i, hull[lo]);
            if (lo > 0)
                rowmax = std::max(rowmax, sigma(i, hull[lo - 1]));
            if (lo + 1 < hull.size())
                rowmax = std::max(rowmax, sigma(i, hull[lo + 1]));
            if (rowmax < best_rowmax)
            {
                best_rowmax = rowmax;
                best_i = i;
            }
        }

        std::size_t best_j = n;
        double best_sigma = -std::numeric_limits<double>::infinity();
        for (std::size_t j = n; j <= last; ++j)
        {
            const double sj = sigma(best_i, j);
            if (sj > best_sigma)
            {
                best_sigma = sj;
                best_j = j;
            }
        }

        const double nu_2 = curve.rho(best_j);
        if (nu_2 <= budget * (1.0 + on_grid_tol) && nu_2 >= budget * (1.0 - on_grid_tol))
            return TwoPointDistribution::single(nu_2);
        return TwoPointDistribution::from_mean(curve.rho(best_i), nu_2, budget);
    }

    double two_point_upper_bound(const PowerCurve &curve, double mean)
    {
        return expected_value(curve, grid_search(curve, mean));
    }

    double expected_value(const PowerCurve &curve, const TwoPointDistribution &law)
    {
        return law.expectation([&curve](double nu) { return curve.at(nu); });
    }

    TwoPointDistribution best_chord(const std::vector<double> &nu, const std::vector<double> &values, double budget)
    {
        if (nu.size() != values.size() || nu.empty())
            throw std::invalid_argument("best_chord: sample arrays must be non-empty and of equal length");
        for (std::size_t j = 1; j < nu.size(); ++j)
            if (!(nu[j] > nu[j - 1]))
                throw std::invalid_argument("best_chord: sample locations must be strictly increasing");
        if (!(budget >= nu.front()) || !(budget <= nu.back() * (1.0 + on_grid_tol)))
            throw std::out_of_range("best_chord: budget outside the sampled range");

        const double vmax = *std::max_element(values.begin(), values.end());
        const std::size_t s = first_saturating(values, vmax);
        if (nu[s] <= budget * (1.0 + on_grid_tol))
            return TwoPointDistribution::single(nu[s]);

        TwoPointDistribution best;
        double best_value = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < nu.size(); ++j)
            if (std::abs(nu[j] - budget) <= on_grid_tol * std::max(budget, 1e-300))
            {
                best = TwoPointDistribution::single(nu[j]);
                best_value = values[j];
            }

        for (std::size_t i = 0; i < nu.size() && nu[i] < budget; ++i)
            for (std::size_t j = i + 1; j < nu.size(); ++j)
            {
                if (nu[j] <= budget)
                    continue;
                const double w2 = (budget - nu[i]) / (nu[j] - nu[i]);
                const double value = (1.0 - w2) * values[i] + w2 * values[j];
                if (value > best_value)
                {
                    best_value = value;
                    best = TwoPointDistribution::from_mean(nu[i], nu[j], budget);
                }
            }
        if (!std::isfinite(best_value))
            throw std::out_of_range("best_chord: no sample pair brackets the budget");
        return best;
    }
}
