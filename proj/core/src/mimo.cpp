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

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <numeric>
#include <ostream>
#include <queue>

namespace nlwpt
{
    namespace
    {
        constexpr double two_pi = 2.0 * std::numbers::pi;

        // Coarse phase grid per free phase, by number of free phases
        std::size_t phase_grid_size(std::size_t free)
        {
            switch (free)
            {
            case 0:
                return 1;
            case 1:
                return 48;
            case 2:
                return 20;
            default:
                return 8;
            }
        }

        // Evaluates Psi for fixed magnitudes as a function of the relative phases
        class PhaseObjective
        {
        public:
            PhaseObjective(const ChannelSet &channels, const HarvestCurve &curve, const Eigen::VectorXd &r)
                : channels_(channels), curve_(curve), r_(r)
            {
            }

            CVector beam(const std::vector<double> &theta) const
            {
                const auto n = r_.size();
                CVector w(n);
                w(0) = r_(0);
                for (Eigen::Index k = 1; k < n; ++k)
                    w(k) = std::polar(r_(k), theta[std::size_t(k - 1)]);
                return w;
            }

            double operator()(const std::vector<double> &theta) const
            {
                return weighted_sum_objective(channels_, curve_, beam(theta));
            }

        private:
            const ChannelSet &channels_;
            const HarvestCurve &curve_;
            const Eigen::VectorXd &r_;
        };

        struct Vertex
        {
            Eigen::VectorXd y;
            double upper = 0.0;
            std::vector<double> theta; // phases of the bound evaluation, or the parent's before it
            bool evaluated = false;
        };

        struct VertexOrder
        {
            bool operator()(const Vertex &a, const Vertex &b) const { return a.upper < b.upper; }
        };

        // Compass search from theta down to `floor` rad; theta is updated in place
        double compass(const PhaseObjective &f, std::vector<double> &theta, double value, double step,
                       double floor = 1e-6)
        {
            std::vector<double> trial;
            while (step > floor)
            {
                bool improved = false;
                for (std::size_t k = 0; k < theta.size(); ++k)
                    for (double sign : {1.0, -1.0})
                    {
                        trial = theta;
                        trial[k] += sign * step;
                        const double v = f(trial);
                        if (v > value)
                        {
                            value = v;
                            theta = trial;
                            improved = true;
                        }
                    }
                if (!improved)
                    step *= 0.5;
            }
            return value;
        }

        // Local refinement for magnitudes close to those that produced theta
        constexpr double warm_step = 0.02;

        double aligned_from(const ChannelSet &channels, const HarvestCurve &curve, const Eigen::VectorXd &r,
                            std::vector<double> &theta)
        {
            PhaseObjective f(channels, curve, r);
            return compass(f, theta, f(theta), warm_step, 1e-5);
        }

        // max a.r over 0 <= r <= y, |r| <= radius, for a >= 0. r_k = min(y_k, lambda a_k).
        double box_ball_linear_max(const Eigen::VectorXd &a, const Eigen::VectorXd &y, double radius)
        {
            double hi = 0.0;
            for (Eigen::Index k = 0; k < a.size(); ++k)
                if (a(k) > 0.0)
                    hi = std::max(hi, y(k) / a(k));
            auto clipped = [&](double lambda) { return y.cwiseMin(lambda * a); };
            if (clipped(hi).norm() <= radius)
                return a.dot(clipped(hi));
            double lo = 0.0;
            for (int it = 0; it < 100; ++it)
            {
                const double mid = 0.5 * (lo + hi);
                (clipped(mid).norm() <= radius ? lo : hi) = mid;
            }
            return a.dot(clipped(hi));
        }

        // Row-separable bound on Psi over the box [0, y] inside the ball: each row may pick its own beam
        double separable_bound(const ChannelSet &channels, const HarvestCurve &curve, const Eigen::VectorXd &y,
                               double radius)
        {
            double sum = 0.0;
            for (const auto &row : channels.rows)
            {
                const double m = box_ball_linear_max(row.gain.cwiseAbs().transpose(), y, radius);
                sum += channels.weight_of(row) * curve.power(m * m);
            }
            return sum;
        }

        CVector scaled_to(const CVector &w, double nu)
        {
            const double norm = w.norm();
            if (!(norm > 0.0))
            {
                CVector out = CVector::Zero(w.size());
                out(0) = std::sqrt(nu);
                return out;
            }
            return w * (std::sqrt(nu) / norm);
        }
    }

    CMatrix received_power_matrix(const ChannelSet &channels)
    {
        const auto n = Eigen::Index(channels.n_t);
        CMatrix r = CMatrix::Zero(n, n);
        for (const auto &row : channels.rows)
            r += channels.weight_of(row) * (row.gain.adjoint() * row.gain);
        return r;
    }

    CVector dominant_unit_vector(const CMatrix &r)
    {
        const auto n = r.rows();
        Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (r + r.adjoint()));
        CVector u = es.eigenvectors().col(n - 1);
        const double big = u.cwiseAbs().maxCoeff();
        for (Eigen::Index k = 0; k < n; ++k)
            if (std::abs(u(k)) > 1e-12 * big)
            {
                u *= std::conj(u(k)) / std::abs(u(k));
                u(k) = std::abs(u(k));
                break;
            }
        return u / u.norm();
    }

    double weighted_sum_objective(const ChannelSet &channels, const HarvestCurve &curve, const CVector &w)
    {
        double sum = 0.0;
        for (const auto &row : channels.rows)
        {
            const double xi = channels.weight_of(row);
            if (xi > 0.0)
                sum += xi * curve.power(std::norm((row.gain * w).value()));
        }
        return sum;
    }

    std::vector<double> node_powers(const ChannelSet &channels, const HarvestCurve &curve, const CVector &w)
    {
        std::vector<double> out(channels.node_count(), 0.0);
        for (const auto &row : channels.rows)
            out[row.node] += curve.power(std::norm((row.gain * w).value()));
        return out;
    }

    double relaxed_objective(const ChannelSet &channels, const HarvestCurve &curve, const CMatrix &w)
    {
        double sum = 0.0;
        for (const auto &row : channels.rows)
        {
            const double xi = channels.weight_of(row);
            if (xi > 0.0)
                sum += xi * curve.power((row.gain * w * row.gain.adjoint())(0, 0).real());
        }
        return sum;
    }

    CMatrix relaxed_gradient(const ChannelSet &channels, const HarvestCurve &curve, const CMatrix &w)
    {
        const auto n = Eigen::Index(channels.n_t);
        CMatrix c = CMatrix::Zero(n, n);
        for (const auto &row : channels.rows)
        {
            const double xi = channels.weight_of(row);
            if (!(xi > 0.0))
                continue;
            const double x = (row.gain * w * row.gain.adjoint())(0, 0).real();
            const double d = curve.derivative(std::max(x, 0.0));
            if (d > 0.0)
                c += (xi * d) * (row.gain.adjoint() * row.gain);
        }
        return c;
    }

    ChannelSet active_rows(const ChannelSet &channels)
    {
        ChannelSet out;
        out.n_t = channels.n_t;
        out.weights = channels.weights;
        for (const auto &row : channels.rows)
            if (channels.weight_of(row) > 0.0 && row.gain.squaredNorm() > 0.0)
                out.rows.push_back(row);
        return out;
    }

    double phase_aligned_objective(const ChannelSet &channels, const HarvestCurve &curve, const Eigen::VectorXd &r,
                                   CVector *beam)
    {
        const auto n = std::size_t(r.size());
        if (n != channels.n_t)
            throw std::invalid_argument("phase_aligned_objective: magnitude vector has the wrong length");
        const std::size_t free = n - 1;
        PhaseObjective f(channels, curve, r);
        std::vector<double> theta(free, 0.0);

        if (free == 0)
        {
            if (beam)
                *beam = f.beam(theta);
            return f(theta);
        }

        // Coarse grid over [0, 2 pi)^free
        const std::size_t g = phase_grid_size(free);
        std::size_t total = 1;
        for (std::size_t k = 0; k < free; ++k)
            total *= g;
        std::vector<double> best_theta(free, 0.0);
        double best = -1.0;
        std::vector<double> trial(free);
        for (std::size_t idx = 0; idx < total; ++idx)
        {
            std::size_t rest = idx;
            for (std::size_t k = 0; k < free; ++k)
            {
                trial[k] = two_pi * double(rest % g) / double(g);
                rest /= g;
            }
            const double v = f(trial);
            if (v > best)
            {
                best = v;
                best_theta = trial;
            }
        }

        best = compass(f, best_theta, best, two_pi / double(g) / 2.0);
        if (beam)
            *beam = f.beam(best_theta);
        return best;
    }

    PhiResult phi_optimal(const ChannelSet &channels_in, const HarvestCurve &curve, double nu,
                          const PolyblockOptions &options)
    {
        if (!(nu > 0.0))
            throw std::invalid_argument("phi_optimal: transmit power must be positive");
        if (!(options.tol > 0.0))
            throw std::invalid_argument("phi_optimal: tolerance must be positive");
        const std::size_t n = channels_in.n_t;
        if (n > options.max_antennas)
            throw PolyblockError("phi_optimal: number of transmit antennas exceeds the polyblock cap");

        const ChannelSet channels = active_rows(channels_in);
        const auto ni = Eigen::Index(n);
        const double radius = std::sqrt(nu);

        PhiResult best;
        best.beam = CVector::Zero(ni);
        best.beam(0) = radius;
        if (channels.rows.empty())
            return best;

        auto consider = [&](const CVector &w)
        {
            const CVector scaled = scaled_to(w, nu);
            const double v = weighted_sum_objective(channels, curve, scaled);
            if (v > best.value)
            {
                best.value = v;
                best.beam = scaled;
            }
        };
        best.value = weighted_sum_objective(channels, curve, best.beam);

        // Incumbent seeds
        for (const auto &row : channels.rows)
            consider(row.gain.adjoint());
        consider(dominant_unit_vector(received_power_matrix(channels)));

        if (n == 1)
        {
            if (options.trace)
            {
                options.trace->upper.push_back(best.value);
                options.trace->lower.push_back(best.value);
            }
            return best;
        }

        auto phases_of = [](const CVector &w)
        {
            std::vector<double> theta(std::size_t(w.size() - 1), 0.0);
            for (Eigen::Index k = 1; k < w.size(); ++k)
                theta[std::size_t(k - 1)] = std::abs(w(k)) > 0.0 ? std::arg(w(k)) : 0.0;
            return theta;
        };
        auto improve = [&](const Eigen::VectorXd &r, std::vector<double> theta)
        {
            const double value = aligned_from(channels, curve, r, theta);
            if (value > best.value)
            {
                best.value = value;
                best.beam = PhaseObjective(channels, curve, r).beam(theta);
            }
        };

        // Start from the magnitude vector of the best seed too
        {
            CVector w;
            const double v = phase_aligned_objective(channels, curve, best.beam.cwiseAbs(), &w);
            if (v > best.value)
            {
                best.value = v;
                best.beam = w;
            }
        }

        // Child bounds are evaluated when they reach the top of the queue, warm-started from the
        // parent's phases. The queue key before evaluation is the parent's bound.
        std::priority_queue<Vertex, std::vector<Vertex>, VertexOrder> queue;
        std::vector<Eigen::VectorXd> live; // for dominance checks
        {
            Vertex v0{Eigen::VectorXd::Constant(ni, radius), 0.0, {}, true};
            CVector w;
            v0.upper = phase_aligned_objective(channels, curve, v0.y, &w);
            v0.theta = phases_of(w);
            v0.upper = std::min(v0.upper, separable_bound(channels, curve, v0.y, radius));
            queue.push(v0);
        }

        auto dominated = [&](const Eigen::VectorXd &y)
        {
            for (const auto &other : live)
                if ((y.array() <= other.array()).all())
                    return true;
            return false;
        };
        auto prunable = [&](double upper) { return upper <= best.value * (1.0 + options.tol); };

        std::size_t iterations = 0;
        while (!queue.empty())
        {
            Vertex v = queue.top();
            queue.pop();

            if (!v.evaluated)
            {
                v.upper = std::min(aligned_from(channels, curve, v.y, v.theta), v.upper);
                v.evaluated = true;
                if (!prunable(v.upper))
                {
                    queue.push(std::move(v));
                    continue;
                }
            }
            auto it = std::find_if(live.begin(), live.end(), [&](const Eigen::VectorXd &x) { return x == v.y; });
            if (it != live.end())
                live.erase(it);
            if (prunable(v.upper) && !queue.empty() && !prunable(queue.top().upper))
                continue;

            if (++iterations > options.max_iterations)
                throw PolyblockError("phi_optimal: iteration limit exceeded");
            if (options.trace)
            {
                options.trace->upper.push_back(std::max(v.upper, best.value));
                options.trace->lower.push_back(best.value);
            }
            if (prunable(v.upper))
                break;

            const double ynorm = v.y.norm();
            const Eigen::VectorXd chi = v.y * (radius / ynorm);
            improve(chi, v.theta);
            if ((v.y - chi).norm() / ynorm <= options.tol)
                break;

            for (Eigen::Index k = 0; k < ni; ++k)
            {
                if (!(v.y(k) - chi(k) > 0.0))
                    continue;
                Vertex child{v.y, v.upper, v.theta, false};
                // Snap near-zero coordinates so a face is not approached geometrically forever
                child.y(k) = chi(k) <= options.tol * radius ? 0.0 : chi(k);
                child.upper = std::min(child.upper, separable_bound(channels, curve, child.y, radius));
                if (prunable(child.upper) || dominated(child.y))
                    continue;
                if (queue.size() >= options.max_vertices)
                    throw PolyblockError("phi_optimal: vertex cap exceeded");
                live.push_back(child.y);
                queue.push(std::move(child));
            }
        }
        best.beam = scaled_to(best.beam, nu);
        best.value = weighted_sum_objective(channels, curve, best.beam);
        return best;
    }

    PhiResult phi_suboptimal(const ChannelSet &channels_in, const HarvestCurve &curve, double nu,
                             const ScaOptions &options)
    {
        if (!(nu > 0.0))
            throw std::invalid_argument("phi_suboptimal: transmit power must be positive");
        if (!check_assumption_convexity(curve, 129))
            throw std::invalid_argument("phi_suboptimal: harvest curve is not convex below saturation");

        const ChannelSet channels = active_rows(channels_in);
        const std::size_t n = channels.n_t;
        const auto ni = Eigen::Index(n);
        const double a_s_sq = curve.saturation_input();

        PhiResult out;
        out.beam = CVector::Zero(ni);
        out.beam(0) = std::sqrt(nu);
        if (channels.rows.empty())
            return out;

        // Sort by channel norm, descending, stable on ties
        const std::size_t k_rows = channels.rows.size();
        std::vector<std::size_t> order(k_rows);
        std::iota(order.begin(), order.end(), std::size_t(0));
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b)
                         { return channels.rows[a].gain.squaredNorm() > channels.rows[b].gain.squaredNorm(); });

        std::size_t k_star = 0;
        for (std::size_t j = 1; j <= k_rows; ++j)
            if (solve_feasibility(channels, a_s_sq, make_pattern(order, j, a_s_sq), nu, options.engine).feasible)
                k_star = j;

        const SaturationPattern pattern = make_pattern(order, k_star, a_s_sq);
        const auto start = find_interior_point(channels, a_s_sq, pattern, nu, options.engine);
        if (!start)
            throw ScaError("phi_suboptimal: selected saturation pattern has no interior point");

        CMatrix w_t;
        if (options.random_init)
        {
            CounterRng rng(options.init_seed, 0);
            CMatrix a(ni, ni);
            for (Eigen::Index r = 0; r < ni; ++r)
                for (Eigen::Index c = 0; c < ni; ++c)
                    a(r, c) = rng.complex_normal();
            w_t = a * a.adjoint();
            w_t *= nu / w_t.trace().real();
        }
        else
            w_t = CMatrix::Identity(ni, ni) * (nu / double(n));

        ScaReport local;
        ScaReport &report = options.report ? *options.report : local;
        report = ScaReport{};
        report.k_star = k_star;

        double h_prev = 0.0;
        bool converged = false;
        for (std::size_t t = 0; t < options.max_iterations; ++t)
        {
            CMatrix grad = relaxed_gradient(channels, curve, w_t);
            if (!(grad.cwiseAbs().maxCoeff() > 0.0))
            {
                grad = received_power_matrix(channels);
                report.gradient_fallback = true;
            }
            w_t = solve_linearized_step(channels, a_s_sq, pattern, nu, grad, start, options.engine);
            const double h = relaxed_objective(channels, curve, w_t);
            report.history.push_back(h);
            if (t > 0 && h < h_prev - 1e-12)
                throw ScaError("phi_suboptimal: SCA objective decreased");
            if (t > 0 && std::abs(h - h_prev) <= options.tol * std::abs(h))
            {
                converged = true;
                break;
            }
            h_prev = h;
        }
        if (!converged)
            throw ScaError("phi_suboptimal: SCA did not converge within the iteration limit");

        const auto [v, residual] = extract_rank_one(w_t);
        report.rank_residual = residual;
        report.final_w = w_t;
        out.beam = scaled_to(v, nu);
        out.value = weighted_sum_objective(channels, curve, out.beam);

        // The fixed saturation pattern can leave SCA below plain energy beamforming; keep the better beam
        const CVector energy = std::sqrt(nu) * dominant_unit_vector(received_power_matrix(channels));
        const double energy_value = weighted_sum_objective(channels, curve, energy);
        if (energy_value > out.value)
        {
            out.beam = energy;
            out.value = energy_value;
            report.energy_beam_kept = true;
        }
        return out;
    }

    const char *engine_name(PhiEngine engine) { return engine == PhiEngine::optimal ? "optimal" : "suboptimal"; }

    PhiEngine parse_engine(const std::string &name)
    {
        if (name == "optimal")
            return PhiEngine::optimal;
        if (name == "suboptimal")
            return PhiEngine::suboptimal;
        throw std::invalid_argument("unknown engine '" + name + "' (expected optimal or suboptimal)");
    }

    PhiResult evaluate_phi(PhiEngine engine, const ChannelSet &channels, const HarvestCurve &curve, double nu,
                           const PolyblockOptions &poly, const ScaOptions &sca)
    {
        return engine == PhiEngine::optimal ? phi_optimal(channels, curve, nu, poly)
                                            : phi_suboptimal(channels, curve, nu, sca);
    }

    double mimo_saturation_power(const ChannelSet &channels_in, const HarvestCurve &curve, const EngineOptions &options)
    {
        const ChannelSet channels = active_rows(channels_in);
        if (channels.rows.empty())
            return 0.0;
        std::vector<std::size_t> rows(channels.rows.size());
        std::iota(rows.begin(), rows.end(), std::size_t(0));
        if (channels.n_t == 1)
        {
            double nu = 0.0;
            for (const auto &row : channels.rows)
                nu = std::max(nu, curve.saturation_input() / row.gain.squaredNorm());
            return nu;
        }
        return min_saturating_trace(channels, curve.saturation_input(), rows, options).trace;
    }

    MimoStrategy solve_mimo(const ChannelSet &channels_in, const HarvestCurve &curve, double budget,
                            const MimoOptions &options)
    {
        if (!(budget > 0.0))
            throw std::invalid_argument("solve_mimo: budget must be positive");
        if (options.coarse_points < 2 || options.refine_steps < 1)
            throw std::invalid_argument("solve_mimo: need at least 2 coarse points and 1 refinement step");
        channels_in.validate();
        const ChannelSet channels = active_rows(channels_in);
        const auto ni = Eigen::Index(channels.n_t);

        MimoStrategy out;
        if (channels.rows.empty())
        {
            CVector w = CVector::Zero(ni);
            w(0) = std::sqrt(budget);
            out.beams = {w};
            out.probabilities = {1.0};
            out.law = TwoPointDistribution::single(budget);
            out.phi_values = {0.0};
            return out;
        }

        // Uniform coarse grid with the budget on a grid point, reaching past full saturation
        const double nu_sat = mimo_saturation_power(channels, curve, options.sca.engine);
        const double nu_top = std::max(budget, 1.05 * nu_sat);
        const auto below = std::max<std::size_t>(
            1, std::size_t(std::llround(budget / nu_top * double(options.coarse_points))));
        const double step = budget / double(below);
        const auto total = std::size_t(std::ceil(nu_top / step - 1e-9));

        struct Sample
        {
            double nu;
            double value;
            CVector beam;
        };
        std::vector<Sample> samples;
        auto phi = [&](double nu) -> Sample
        {
            if (nu <= 0.0)
                return {0.0, 0.0, CVector::Zero(ni)};
            PhiResult r = evaluate_phi(options.engine, channels, curve, nu, options.polyblock, options.sca);
            return {nu, r.value, std::move(r.beam)};
        };

        // Running maximum; a smaller power's beam scaled up is still achievable
        auto envelope = [&](std::vector<Sample> &s)
        {
            std::sort(s.begin(), s.end(), [](const Sample &a, const Sample &b) { return a.nu < b.nu; });
            for (std::size_t j = 1; j < s.size(); ++j)
                if (s[j].value < s[j - 1].value && s[j - 1].nu > 0.0)
                {
                    const CVector w = scaled_to(s[j - 1].beam, s[j].nu);
                    const double v = weighted_sum_objective(channels, curve, w);
                    if (v > s[j].value)
                    {
                        s[j].value = v;
                        s[j].beam = w;
                    }
                }
        };

        for (std::size_t j = 0; j <= total; ++j)
            samples.push_back(phi(double(j) * step));
        envelope(samples);

        std::vector<double> values;
        for (const auto &s : samples)
            values.push_back(s.value);
        const PowerCurve coarse(step, values);
        const TwoPointDistribution first = grid_search(coarse, budget);

        // Refine around the selected mass points
        const double fine = step / double(options.refine_steps);
        for (double center : {first.nu_1, first.nu_2})
        {
            for (std::size_t i = 1; i < 2 * options.refine_steps; ++i)
            {
                if (i == options.refine_steps)
                    continue;
                const double nu = center - step + double(i) * fine;
                if (nu <= 0.0 || nu > double(total) * step)
                    continue;
                const bool known = std::any_of(samples.begin(), samples.end(), [&](const Sample &s)
                                               { return std::abs(s.nu - nu) <= 1e-12 * step; });
                if (!known)
                    samples.push_back(phi(nu));
            }
            if (first.is_single())
                break;
        }
        envelope(samples);

        std::vector<double> nus;
        values.clear();
        for (const auto &s : samples)
        {
            nus.push_back(s.nu);
            values.push_back(s.value);
        }
        out.law = best_chord(nus, values, budget);

        auto lookup = [&](double nu) -> const Sample &
        {
            const auto it = std::min_element(samples.begin(), samples.end(), [&](const Sample &a, const Sample &b)
                                              { return std::abs(a.nu - nu) < std::abs(b.nu - nu); });
            return *it;
        };
        if (out.law.is_single())
        {
            const Sample &s = lookup(out.law.nu_1);
            out.beams = {s.beam};
            out.probabilities = {1.0};
            out.phi_values = {s.value};
            out.objective = s.value;
        }
        else
        {
            const Sample &s1 = lookup(out.law.nu_1);
            const Sample &s2 = lookup(out.law.nu_2);
            out.beams = {s1.beam, s2.beam};
            out.probabilities = {out.law.weight_1, out.law.weight_2};
            out.phi_values = {s1.value, s2.value};
            out.objective = out.law.weight_1 * s1.value + out.law.weight_2 * s2.value;
        }
        return out;
    }

    std::vector<double> strategy_node_powers(const ChannelSet &channels, const HarvestCurve &curve,
                                             const MimoStrategy &strategy)
    {
        std::vector<double> out(channels.node_count(), 0.0);
        for (std::size_t i = 0; i < strategy.beams.size(); ++i)
        {
            const auto p = node_powers(channels, curve, strategy.beams[i]);
            for (std::size_t m = 0; m < out.size(); ++m)
                out[m] += strategy.probabilities[i] * p[m];
        }
        return out;
    }

    void write_strategy(std::ostream &out, const MimoStrategy &strategy)
    {
        const auto old_prec = out.precision(17);
        out << "# nlwpt strategy v1\n";
        out << "nu_1 " << strategy.law.nu_1 << "\n";
        out << "nu_2 " << strategy.law.nu_2 << "\n";
        out << "weight_1 " << strategy.law.weight_1 << "\n";
        out << "weight_2 " << strategy.law.weight_2 << "\n";
        out << "beams " << strategy.beams.size() << "\n";
        for (std::size_t i = 0; i < strategy.beams.size(); ++i)
        {
            out << "beam " << i << " probability " << strategy.probabilities[i] << " phi " << strategy.phi_values[i];
            for (Eigen::Index k = 0; k < strategy.beams[i].size(); ++k)
                out << " " << strategy.beams[i](k).real() << " " << strategy.beams[i](k).imag();
            out << "\n";
        }
        out << "objective " << strategy.objective << "\n";
        out.precision(old_prec);
    }
}
