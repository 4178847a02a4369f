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

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>

namespace nlwpt
{
    namespace
    {
        using Eigen::MatrixXd;
        using Eigen::VectorXd;

        std::size_t param_count(std::size_t n) { return n * n; }

        // Coefficients a with tr(H X) = a . x for Hermitian H
        VectorXd trace_coefficients(const CMatrix &h)
        {
            const auto n = std::size_t(h.rows());
            VectorXd a(param_count(n));
            std::size_t idx = 0;
            for (std::size_t k = 0; k < n; ++k)
                a(Eigen::Index(idx++)) = h(Eigen::Index(k), Eigen::Index(k)).real();
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l)
                {
                    const Complex c = h(Eigen::Index(l), Eigen::Index(k));
                    a(Eigen::Index(idx++)) = 2.0 * c.real();
                    a(Eigen::Index(idx++)) = -2.0 * c.imag();
                }
            return a;
        }

        // h X h^H = tr(h^H h X)
        VectorXd quadratic_coefficients(const CRowVector &h) { return trace_coefficients(h.adjoint() * h); }

        // Linear program over x (matrix parameters) and `extra` scalars:
        //     maximize c.z  s.t.  A z <= b,  X(z) >= 0
        struct Program
        {
            std::size_t n = 0;
            std::size_t extra = 0;
            VectorXd c;
            MatrixXd a;
            VectorXd b;

            std::size_t dim() const { return param_count(n) + extra; }
        };

        struct Basis
        {
            std::vector<MatrixXd> e; // real embeddings of the Hermitian basis matrices

            explicit Basis(std::size_t n)
            {
                const auto p = param_count(n);
                e.reserve(p);
                for (std::size_t i = 0; i < p; ++i)
                {
                    VectorXd x = VectorXd::Zero(Eigen::Index(p));
                    x(Eigen::Index(i)) = 1.0;
                    e.push_back(real_embedding(params_to_hermitian(x, n)));
                }
            }
        };

        struct Evaluation
        {
            bool inside = false;
            double value = 0.0;
        };

        class BarrierSolver
        {
        public:
            BarrierSolver(const Program &prog, const EngineOptions &opt) : prog_(prog), opt_(opt), basis_(prog.n) {}

            // Called after every centering with (z, objective, certified upper bound). Return true to stop.
            using Monitor = std::function<bool(const VectorXd &, double, double, double)>;

            VectorXd run(VectorXd z, const Monitor &monitor)
            {
                if (!evaluate(z, 0.0).inside)
                    throw SolverError("convex engine: starting point is not strictly feasible");

                const double degree = double(prog_.n + std::size_t(prog_.a.rows()));
                double t = opt_.t0;
                for (std::size_t outer = 0; outer < opt_.max_outer; ++outer)
                {
                    center(z, t);
                    const double obj = prog_.c.dot(z);
                    const double gap = degree / t;
                    if (monitor && monitor(z, obj, obj + gap, t))
                        return z;
                    if (gap <= opt_.gap_tol * (1.0 + std::abs(obj)))
                        return z;
                    t *= opt_.mu;
                }
                throw SolverError("convex engine: barrier method did not reach the duality-gap tolerance");
            }

        private:
            const Program &prog_;
            const EngineOptions &opt_;
            Basis basis_;

            Evaluation evaluate(const VectorXd &z, double t) const
            {
                const VectorXd slack = prog_.b - prog_.a * z;
                if (slack.size() > 0 && !(slack.minCoeff() > 0.0))
                    return {};
                Eigen::LLT<MatrixXd> llt(embedding(z));
                if (llt.info() != Eigen::Success)
                    return {};
                const MatrixXd &l = llt.matrixLLT();
                double logdet = 0.0;
                for (Eigen::Index i = 0; i < l.rows(); ++i)
                {
                    if (!(l(i, i) > 0.0))
                        return {};
                    logdet += 2.0 * std::log(l(i, i));
                }
                double value = -t * prog_.c.dot(z) - 0.5 * logdet;
                for (Eigen::Index i = 0; i < slack.size(); ++i)
                    value -= std::log(slack(i));
                if (!std::isfinite(value))
                    return {};
                return {true, value};
            }

            MatrixXd embedding(const VectorXd &z) const
            {
                MatrixXd m = MatrixXd::Zero(Eigen::Index(2 * prog_.n), Eigen::Index(2 * prog_.n));
                for (std::size_t i = 0; i < basis_.e.size(); ++i)
                    m += z(Eigen::Index(i)) * basis_.e[i];
                return m;
            }

            void center(VectorXd &z, double t) const
            {
                const auto p = Eigen::Index(param_count(prog_.n));
                const auto d = Eigen::Index(prog_.dim());
                for (std::size_t iter = 0; iter < opt_.max_newton; ++iter)
                {
                    const VectorXd slack = prog_.b - prog_.a * z;
                    const VectorXd inv = slack.cwiseInverse();

                    VectorXd grad = -t * prog_.c + prog_.a.transpose() * inv;
                    MatrixXd hess = prog_.a.transpose() * inv.cwiseAbs2().asDiagonal() * prog_.a;

                    // -1/2 log det M: gradient -1/2 tr(M^-1 E_i), Hessian 1/2 tr(M^-1 E_i M^-1 E_j)
                    const MatrixXd minv = embedding(z).llt().solve(
                        MatrixXd::Identity(Eigen::Index(2 * prog_.n), Eigen::Index(2 * prog_.n)));
                    std::vector<MatrixXd> g(static_cast<std::size_t>(p));
                    for (Eigen::Index i = 0; i < p; ++i)
                    {
                        g[std::size_t(i)] = minv * basis_.e[std::size_t(i)];
                        grad(i) -= 0.5 * g[std::size_t(i)].trace();
                    }
                    for (Eigen::Index i = 0; i < p; ++i)
                        for (Eigen::Index j = i; j < p; ++j)
                        {
                            const double v =
                                0.5 * g[std::size_t(i)].cwiseProduct(g[std::size_t(j)].transpose()).sum();
                            hess(i, j) += v;
                            if (j != i)
                                hess(j, i) += v;
                        }

                    Eigen::LDLT<MatrixXd> ldlt(hess);
                    VectorXd dz = ldlt.solve(-grad);
                    if (ldlt.info() != Eigen::Success || !dz.allFinite())
                    {
                        // Fall back to a regularized solve
                        const double reg = 1e-12 * std::max(1.0, hess.diagonal().cwiseAbs().maxCoeff());
                        dz = (hess + reg * MatrixXd::Identity(d, d)).ldlt().solve(-grad);
                        if (!dz.allFinite())
                            throw SolverError("convex engine: singular Newton system");
                    }

                    const double decrement = -grad.dot(dz);
                    if (decrement * 0.5 <= 1e-10)
                        return;

                    const Evaluation here = evaluate(z, t);
                    double alpha = 1.0;
                    bool moved = false;
                    while (alpha > 1e-14)
                    {
                        const VectorXd trial = z + alpha * dz;
                        const Evaluation e = evaluate(trial, t);
                        if (e.inside &&
                            e.value <= here.value - 0.25 * alpha * decrement + 1e-15 * std::abs(here.value))
                        {
                            z = trial;
                            moved = true;
                            break;
                        }
                        alpha *= 0.5;
                    }
                    // Round-off floor: the point is as central as double precision allows
                    if (!moved)
                        return;
                }
            }
        };

        std::vector<CRowVector> normalized_rows(const ChannelSet &channels, double a_s_sq, double nu)
        {
            const double scale = std::sqrt(nu / a_s_sq);
            std::vector<CRowVector> out;
            out.reserve(channels.rows.size());
            for (const auto &row : channels.rows)
                out.push_back(row.gain * scale);
            return out;
        }

        void check_inputs(const ChannelSet &channels, double a_s_sq, const SaturationPattern &pattern, double nu)
        {
            if (!(nu > 0.0) || !std::isfinite(nu))
                throw std::invalid_argument("convex engine: transmit power must be positive");
            if (!(a_s_sq > 0.0))
                throw std::invalid_argument("convex engine: saturation input must be positive");
            if (channels.n_t < 1)
                throw std::invalid_argument("convex engine: empty channel set");
            pattern.validate(channels.rows.size());
        }

        void record(const EngineOptions &opt, const char *stage, double t, double obj, const VectorXd &z,
                    std::size_t n, double scale)
        {
            if (opt.trace)
                opt.trace->entries.push_back({stage, t, obj, scale * params_to_hermitian(z.head(Eigen::Index(param_count(n))), n)});
        }

        // Constraint audit in [W] units
        void audit(const ChannelSet &channels, double a_s_sq, const SaturationPattern *pattern, double nu,
                   const CMatrix &w, const char *what)
        {
            if (!is_psd(w))
                throw SolverError(std::string(what) + ": returned matrix is not positive semidefinite");
            const double tr = w.trace().real();
            if (nu > 0.0 && tr > nu * (1.0 + 1e-9))
                throw SolverError(std::string(what) + ": trace constraint violated");
            if (!pattern)
                return;
            for (auto k : pattern->saturated)
            {
                const auto &g = channels.rows[k].gain;
                if ((g * w * g.adjoint())(0, 0).real() < a_s_sq * (1.0 - 1e-9))
                    throw SolverError(std::string(what) + ": saturation constraint violated");
            }
            for (auto k : pattern->unsaturated)
            {
                const auto &g = channels.rows[k].gain;
                if ((g * w * g.adjoint())(0, 0).real() > a_s_sq - pattern->margin + 1e-9 * a_s_sq)
                    throw SolverError(std::string(what) + ": unsaturated constraint violated");
            }
        }

        // Pattern rows in normalized units: saturated -a.x (+ s) <= -1, unsaturated a.x (+ s) <= 1 - margin,
        // trace <= 1
        Program pattern_program(const std::vector<CRowVector> &h, const SaturationPattern &pattern, double a_s_sq,
                                std::size_t n, std::size_t extra, bool with_slack)
        {
            Program prog;
            prog.n = n;
            prog.extra = extra;
            const auto p = Eigen::Index(param_count(n));
            const auto rows = Eigen::Index(pattern.saturated.size() + pattern.unsaturated.size() + 1 + extra);
            prog.a = MatrixXd::Zero(rows, Eigen::Index(prog.dim()));
            prog.b = VectorXd::Zero(rows);
            prog.c = VectorXd::Zero(Eigen::Index(prog.dim()));

            const double margin = pattern.margin / a_s_sq;
            Eigen::Index r = 0;
            for (auto k : pattern.saturated)
            {
                prog.a.row(r).head(p) = -quadratic_coefficients(h[k]).transpose();
                if (with_slack)
                    prog.a(r, p) = 1.0;
                prog.b(r++) = -1.0;
            }
            for (auto k : pattern.unsaturated)
            {
                prog.a.row(r).head(p) = quadratic_coefficients(h[k]).transpose();
                if (with_slack)
                    prog.a(r, p) = 1.0;
                prog.b(r++) = 1.0 - margin;
            }
            prog.a.row(r).head(p) = trace_coefficients(CMatrix::Identity(Eigen::Index(n), Eigen::Index(n))).transpose();
            prog.b(r++) = 1.0;
            if (with_slack)
            {
                prog.a(r, p) = 1.0; // keeps the slack bounded
                prog.b(r++) = 1.0;
            }
            return prog;
        }

        struct InteriorSearch
        {
            bool feasible = false;
            double slack = 0.0;
            VectorXd x; // normalized X parameters
        };

        InteriorSearch search_interior(const ChannelSet &channels, double a_s_sq, const SaturationPattern &pattern,
                                       double nu, const EngineOptions &opt)
        {
            const std::size_t n = channels.n_t;
            const auto p = Eigen::Index(param_count(n));
            const auto h = normalized_rows(channels, a_s_sq, nu);
            Program prog = pattern_program(h, pattern, a_s_sq, n, 1, true);
            prog.c(p) = 1.0;

            VectorXd z = VectorXd::Zero(Eigen::Index(prog.dim()));
            z.head(p) = hermitian_to_params(CMatrix::Identity(Eigen::Index(n), Eigen::Index(n)) * (0.5 / double(n)));
            const VectorXd rest = prog.b - prog.a * z;
            z(p) = rest.minCoeff() - 1.0;

            InteriorSearch out;
            BarrierSolver solver(prog, opt);
            bool decided = false;
            z = solver.run(z,
                           [&](const VectorXd &zz, double obj, double upper, double t)
                           {
                               record(opt, "feasibility", t, obj, zz, n, nu);
                               if (obj >= opt.interior_tol && obj >= 0.5 * upper)
                               {
                                   out.feasible = decided = true;
                                   return true;
                               }
                               if (upper < opt.interior_tol)
                               {
                                   decided = true;
                                   return true;
                               }
                               return false;
                           });
            out.slack = z(p);
            if (!decided)
                out.feasible = out.slack >= opt.interior_tol;
            out.x = z.head(p);
            return out;
        }
    }

    bool is_psd(const CMatrix &w)
    {
        if (w.rows() != w.cols())
            return false;
        const double scale = std::max(w.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
        if ((w - w.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
            return false;
        const CMatrix herm = 0.5 * (w + w.adjoint());
        Eigen::SelfAdjointEigenSolver<CMatrix> es(herm, Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff() >= -1e-9 * std::abs(herm.trace().real());
    }

    void SaturationPattern::validate(std::size_t rectennas) const
    {
        std::vector<int> seen(rectennas, 0);
        for (auto list : {&saturated, &unsaturated})
            for (auto k : *list)
            {
                if (k >= rectennas || seen[k])
                    throw std::invalid_argument("SaturationPattern: lists must partition the rectennas");
                seen[k] = 1;
            }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw std::invalid_argument("SaturationPattern: lists must partition the rectennas");
        if (!(margin >= 0.0))
            throw std::invalid_argument("SaturationPattern: margin must be non-negative");
    }

    SaturationPattern make_pattern(const std::vector<std::size_t> &order, std::size_t k, double a_s_sq)
    {
        if (k > order.size())
            throw std::invalid_argument("make_pattern: k exceeds the number of rectennas");
        SaturationPattern out;
        out.saturated.assign(order.begin(), order.begin() + std::ptrdiff_t(k));
        out.unsaturated.assign(order.begin() + std::ptrdiff_t(k), order.end());
        out.margin = 1e-9 * a_s_sq;
        return out;
    }

    Eigen::MatrixXd real_embedding(const CMatrix &w)
    {
        const auto n = w.rows();
        Eigen::MatrixXd m(2 * n, 2 * n);
        m.topLeftCorner(n, n) = w.real();
        m.topRightCorner(n, n) = -w.imag();
        m.bottomLeftCorner(n, n) = w.imag();
        m.bottomRightCorner(n, n) = w.real();
        return m;
    }

    Eigen::VectorXd hermitian_to_params(const CMatrix &w)
    {
        const auto n = std::size_t(w.rows());
        Eigen::VectorXd x(Eigen::Index(param_count(n)));
        std::size_t idx = 0;
        for (std::size_t k = 0; k < n; ++k)
            x(Eigen::Index(idx++)) = w(Eigen::Index(k), Eigen::Index(k)).real();
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = k + 1; l < n; ++l)
            {
                const Complex c = 0.5 * (w(Eigen::Index(k), Eigen::Index(l)) + std::conj(w(Eigen::Index(l), Eigen::Index(k))));
                x(Eigen::Index(idx++)) = c.real();
                x(Eigen::Index(idx++)) = c.imag();
            }
        return x;
    }

    CMatrix params_to_hermitian(const Eigen::VectorXd &x, std::size_t n)
    {
        if (std::size_t(x.size()) != param_count(n))
            throw std::invalid_argument("params_to_hermitian: parameter count mismatch");
        CMatrix w = CMatrix::Zero(Eigen::Index(n), Eigen::Index(n));
        std::size_t idx = 0;
        for (std::size_t k = 0; k < n; ++k)
            w(Eigen::Index(k), Eigen::Index(k)) = x(Eigen::Index(idx++));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = k + 1; l < n; ++l)
            {
                const Complex c(x(Eigen::Index(idx)), x(Eigen::Index(idx + 1)));
                idx += 2;
                w(Eigen::Index(k), Eigen::Index(l)) = c;
                w(Eigen::Index(l), Eigen::Index(k)) = std::conj(c);
            }
        return w;
    }

    FeasibilityResult solve_feasibility(const ChannelSet &channels, double a_s_sq, const SaturationPattern &pattern,
                                        double nu, const EngineOptions &options)
    {
        check_inputs(channels, a_s_sq, pattern, nu);
        const auto n = Eigen::Index(channels.n_t);
        if (pattern.saturated.empty())
            return {true, 1.0, CMatrix::Zero(n, n)};

        const InteriorSearch found = search_interior(channels, a_s_sq, pattern, nu, options);
        FeasibilityResult out;
        out.feasible = found.feasible;
        out.slack = found.slack;
        out.w = nu * params_to_hermitian(found.x, channels.n_t);
        if (out.feasible)
            audit(channels, a_s_sq, &pattern, nu, out.w, "solve_feasibility");
        return out;
    }

    std::optional<PsdMatrix> find_interior_point(const ChannelSet &channels, double a_s_sq,
                                                 const SaturationPattern &pattern, double nu,
                                                 const EngineOptions &options)
    {
        check_inputs(channels, a_s_sq, pattern, nu);
        const InteriorSearch found = search_interior(channels, a_s_sq, pattern, nu, options);
        if (!found.feasible)
            return std::nullopt;
        CMatrix w = nu * params_to_hermitian(found.x, channels.n_t);
        audit(channels, a_s_sq, &pattern, nu, w, "find_interior_point");
        return w;
    }

    PsdMatrix solve_linearized_step(const ChannelSet &channels, double a_s_sq, const SaturationPattern &pattern,
                                    double nu, const CMatrix &gradient, const std::optional<PsdMatrix> &start,
                                    const EngineOptions &options)
    {
        check_inputs(channels, a_s_sq, pattern, nu);
        const std::size_t n = channels.n_t;
        if (std::size_t(gradient.rows()) != n || std::size_t(gradient.cols()) != n)
            throw std::invalid_argument("solve_linearized_step: gradient has the wrong size");

        std::optional<PsdMatrix> w0 = start;
        if (!w0)
            w0 = find_interior_point(channels, a_s_sq, pattern, nu, options);
        if (!w0)
            throw std::invalid_argument("solve_linearized_step: saturation pattern is infeasible at this power");

        const auto h = normalized_rows(channels, a_s_sq, nu);
        Program prog = pattern_program(h, pattern, a_s_sq, n, 0, false);
        const CMatrix herm = 0.5 * (gradient + gradient.adjoint());
        const double scale = herm.cwiseAbs().maxCoeff();
        if (scale > 0.0)
            prog.c = trace_coefficients(herm / scale);

        BarrierSolver solver(prog, options);
        const VectorXd z = solver.run(hermitian_to_params(*w0 / nu),
                                      [&](const VectorXd &zz, double obj, double, double t)
                                      {
                                          record(options, "step", t, obj, zz, n, nu);
                                          return false;
                                      });
        CMatrix w = nu * params_to_hermitian(z, n);
        audit(channels, a_s_sq, &pattern, nu, w, "solve_linearized_step");
        return w;
    }

    MinTraceResult min_saturating_trace(const ChannelSet &channels, double a_s_sq,
                                        const std::vector<std::size_t> &rows, const EngineOptions &options)
    {
        if (!(a_s_sq > 0.0))
            throw std::invalid_argument("min_saturating_trace: saturation input must be positive");
        const std::size_t n = channels.n_t;
        const auto ni = Eigen::Index(n);
        if (rows.empty())
            return {0.0, CMatrix::Zero(ni, ni)};

        // Sum of per-row MRT solutions is feasible with trace nu_ref
        double nu_ref = 0.0;
        CMatrix construct = CMatrix::Zero(ni, ni);
        for (auto k : rows)
        {
            if (k >= channels.rows.size())
                throw std::invalid_argument("min_saturating_trace: row index out of range");
            const auto &g = channels.rows[k].gain;
            const double gain = g.squaredNorm();
            if (!(gain > 0.0))
                throw std::invalid_argument("min_saturating_trace: zero channel cannot be saturated");
            nu_ref += a_s_sq / gain;
            construct += (a_s_sq / (gain * gain)) * (g.adjoint() * g);
        }

        const auto h = normalized_rows(channels, a_s_sq, nu_ref);
        Program prog;
        prog.n = n;
        const auto p = Eigen::Index(param_count(n));
        prog.a = MatrixXd::Zero(Eigen::Index(rows.size() + 1), p);
        prog.b = VectorXd::Zero(Eigen::Index(rows.size() + 1));
        Eigen::Index r = 0;
        for (auto k : rows)
        {
            prog.a.row(r) = -quadratic_coefficients(h[k]).transpose();
            prog.b(r++) = -1.0;
        }
        const VectorXd tr = trace_coefficients(CMatrix::Identity(ni, ni));
        prog.a.row(r) = tr.transpose();
        prog.b(r) = 4.0;
        prog.c = -tr;

        const CMatrix x0 = 2.0 * construct / nu_ref + CMatrix::Identity(ni, ni) * (0.5 / double(n));
        BarrierSolver solver(prog, options);
        const VectorXd z = solver.run(hermitian_to_params(x0),
                                      [&](const VectorXd &zz, double obj, double, double t)
                                      {
                                          record(options, "min_trace", t, obj, zz, n, nu_ref);
                                          return false;
                                      });
        MinTraceResult out;
        out.w = nu_ref * params_to_hermitian(z, n);
        out.trace = out.w.trace().real();
        SaturationPattern all;
        all.saturated = rows;
        if (!is_psd(out.w))
            throw SolverError("min_saturating_trace: returned matrix is not positive semidefinite");
        for (auto k : rows)
        {
            const auto &g = channels.rows[k].gain;
            if ((g * out.w * g.adjoint())(0, 0).real() < a_s_sq * (1.0 - 1e-9))
                throw SolverError("min_saturating_trace: saturation constraint violated");
        }
        return out;
    }

    std::pair<CVector, double> extract_rank_one(const PsdMatrix &w)
    {
        const CMatrix herm = 0.5 * (w + w.adjoint());
        const auto n = herm.rows();
        const double tr = herm.trace().real();
        if (!(tr > 0.0))
            return {CVector::Zero(n), 0.0};

        Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
        const double lambda = std::max(0.0, es.eigenvalues()(n - 1));
        CVector u = es.eigenvectors().col(n - 1);

        const double big = u.cwiseAbs().maxCoeff();
        for (Eigen::Index k = 0; k < n; ++k)
            if (std::abs(u(k)) > 1e-12 * big)
            {
                u *= std::conj(u(k)) / std::abs(u(k));
                u(k) = std::abs(u(k));
                break;
            }
        const double residual = std::clamp(1.0 - lambda / tr, 0.0, 1.0);
        return {std::sqrt(lambda) * u, residual};
    }

    void write_engine_trace(std::ostream &out, const SaturationPattern &pattern, double nu, const EngineTrace &trace)
    {
        const auto old_prec = out.precision(17);
        out << "# nlwpt engine trace v1\n";
        out << "nu " << nu << "\n";
        out << "margin " << pattern.margin << "\n";
        out << "saturated";
        for (auto k : pattern.saturated)
            out << " " << k;
        out << "\nunsaturated";
        for (auto k : pattern.unsaturated)
            out << " " << k;
        out << "\n";
        for (const auto &e : trace.entries)
        {
            out << "iterate " << e.stage << " t " << e.t << " objective " << e.objective << " n "
                << e.w.rows() << "\n";
            for (Eigen::Index r = 0; r < e.w.rows(); ++r)
            {
                out << "row";
                for (Eigen::Index c = 0; c < e.w.cols(); ++c)
                    out << " " << e.w(r, c).real() << " " << e.w(r, c).imag();
                out << "\n";
            }
        }
        out.precision(old_prec);
    }
}
