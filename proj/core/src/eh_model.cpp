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

#include "nlwpt/eh_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace nlwpt
{
    namespace
    {
        constexpr double bessel_switch = 15.0;

        // Starting point for the Halley iteration
        double lambert_guess(double x)
        {
            if (x < -0.25)
            {
                // Branch-point expansion around -1/e
                const double p = std::sqrt(std::max(0.0, 2.0 * (std::numbers::e * x + 1.0)));
                return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
            }
            if (x < 3.0)
                return std::log1p(x) * (1.0 - std::log1p(std::log1p(x)) / (2.0 + std::log1p(x)));
            const double l1 = std::log(x);
            const double l2 = std::log(l1);
            return l1 - l2 + l2 / l1;
        }

        // sum_k (x^2/4)^k / (k! (k+order)!) * (x/2)^order, positive terms only
        double bessel_series(double x, int order)
        {
            const double q = 0.25 * x * x;
            double term = order == 0 ? 1.0 : 0.5 * x;
            double sum = term;
            for (int k = 1; k < 500; ++k)
            {
                term *= q / (double(k) * double(k + order));
                sum += term;
                if (term < 1e-17 * sum)
                    break;
            }
            return sum;
        }

        // e^x / sqrt(2 pi x) * sum_k prod_{i<=k} -(mu - (2i-1)^2) / (i 8x)
        double bessel_asymptotic(double x, int order)
        {
            const double mu = 4.0 * order * order;
            double term = 1.0;
            double sum = 1.0;
            for (int k = 1; k < 60; ++k)
            {
                const double odd = 2.0 * k - 1.0;
                const double next = term * -(mu - odd * odd) / (k * 8.0 * x);
                if (std::abs(next) >= std::abs(term))
                    break;
                term = next;
                sum += term;
                if (std::abs(term) < 1e-17 * std::abs(sum))
                    break;
            }
            const double scale = std::exp(x) / std::sqrt(2.0 * std::numbers::pi * x);
            return scale * sum;
        }

        double bessel_checked(double x, int order)
        {
            if (!(x >= 0.0))
                throw std::domain_error("bessel: argument must be non-negative");
            const double value = x <= bessel_switch ? bessel_series(x, order) : bessel_asymptotic(x, order);
            if (!std::isfinite(value))
                throw std::overflow_error("bessel: result not representable");
            return value;
        }
    }

    double lambert_w0(double x)
    {
        constexpr double branch = -1.0 / std::numbers::e;
        if (std::isnan(x) || x < branch)
            throw std::domain_error("lambert_w0: argument below -1/e");
        if (x == 0.0)
            return 0.0;
        if (x == branch)
            return -1.0;
        if (std::isinf(x))
            return x;

        double w = lambert_guess(x);
        for (int iter = 0; iter < 64; ++iter)
        {
            const double ew = std::exp(w);
            const double f = w * ew - x;
            const double wp1 = w + 1.0;
            if (wp1 == 0.0)
                break;
            const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
            const double dw = f / denom;
            w -= dw;
            if (std::abs(dw) <= 1e-14 * (1.0 + std::abs(w)))
                break;
        }
        return std::max(w, -1.0);
    }

    double bessel_i0(double x) { return bessel_checked(x, 0); }

    double bessel_i1(double x) { return bessel_checked(x, 1); }

    void RectennaParams::validate() const
    {
        if (!(a > 0.0) || !(b > 0.0) || !(i_s > 0.0) || !(r_l > 0.0) || !(a_s_sq > 0.0))
            throw std::invalid_argument("RectennaParams: all circuit constants must be positive");
    }

    double rectenna_unclamped_power(const RectennaParams &p, double input_power)
    {
        if (input_power <= 0.0)
            return 0.0;
        const double y = p.b * std::sqrt(2.0 * input_power);
        const double w = lambert_w0(p.a * std::exp(p.a) * bessel_i0(y));
        const double bracket = (w - p.a) / p.a;
        return bracket * bracket * p.i_s * p.i_s * p.r_l;
    }

    double rectenna_unclamped_derivative(const RectennaParams &p, double input_power)
    {
        if (input_power <= 0.0)
            return 0.0;
        const double y = p.b * std::sqrt(2.0 * input_power);
        const double u = p.a * std::exp(p.a) * bessel_i0(y);
        const double w = lambert_w0(u);
        const double bracket = (w - p.a) / p.a;

        // dW0/du = W0 / (u (1 + W0)),  du/dx = a e^a I1(y) dy/dx,  dy/dx = B^2 / y
        const double dw_du = w / (u * (1.0 + w));
        const double du_dx = p.a * std::exp(p.a) * bessel_i1(y) * p.b * p.b / y;
        return 2.0 * bracket / p.a * dw_du * du_dx * p.i_s * p.i_s * p.r_l;
    }

    HarvestCurve::HarvestCurve(Function value, Function derivative, double saturation_input)
        : value_(std::move(value)), derivative_(std::move(derivative)), saturation_input_(saturation_input)
    {
        if (!(saturation_input_ > 0.0))
            throw std::invalid_argument("HarvestCurve: saturation input must be positive");
        if (!value_ || !derivative_)
            throw std::invalid_argument("HarvestCurve: evaluation functions must be set");
        saturation_power_ = value_(saturation_input_);
    }

    HarvestCurve HarvestCurve::rectenna(const RectennaParams &params)
    {
        params.validate();
        return HarvestCurve([params](double x) { return rectenna_unclamped_power(params, x); },
                            [params](double x) { return rectenna_unclamped_derivative(params, x); },
                            params.a_s_sq);
    }

    HarvestCurve HarvestCurve::custom(Function value, Function derivative, double saturation_input)
    {
        return HarvestCurve(std::move(value), std::move(derivative), saturation_input);
    }

    double HarvestCurve::power(double input_power) const
    {
        // The unclamped expression is never evaluated at or above A_s^2
        if (input_power >= saturation_input_)
            return saturation_power_;
        if (input_power <= 0.0)
            return 0.0;
        return std::min(value_(input_power), saturation_power_);
    }

    double HarvestCurve::derivative(double input_power) const
    {
        if (input_power >= saturation_input_ || input_power < 0.0)
            return 0.0;
        return derivative_(input_power);
    }

    double harvested_power(const HarvestCurve &curve, double input_power) { return curve.power(input_power); }

    bool check_assumption_convexity(const HarvestCurve &curve, std::size_t samples)
    {
        if (samples < 3)
            throw std::invalid_argument("check_assumption_convexity: need at least 3 samples");
        const double top = curve.saturation_input();
        const double tol = 1e-12 * std::abs(curve.saturation_power());
        const double last = double(samples - 1);

        double prev = curve.power(0.0);
        double cur = curve.power(top / last);
        for (std::size_t i = 2; i < samples; ++i)
        {
            const double next = curve.power(top * double(i) / last);
            if (prev + next - 2.0 * cur < -tol)
                return false;
            prev = cur;
            cur = next;
        }
        return true;
    }

    bool check_assumption_quadratic(const HarvestCurve &curve, std::size_t samples)
    {
        if (samples < 2)
            throw std::invalid_argument("check_assumption_quadratic: need at least 2 samples");
        const double top = curve.saturation_input();
        const double sat = curve.saturation_power();
        const double tol = 1e-12 * std::abs(sat);
        for (std::size_t i = 0; i < samples; ++i)
        {
            const double ratio = double(i) / double(samples - 1);
            if (curve.power(top * ratio) < sat * ratio * ratio - tol)
                return false;
        }
        return true;
    }
}
