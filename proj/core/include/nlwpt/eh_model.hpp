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

#ifndef NLWPT_EH_MODEL_HPP
#define NLWPT_EH_MODEL_HPP

#include <cstddef>
#include <functional>

namespace nlwpt
{
    // Principal branch W0 of the Lambert-W function, x >= -1/e.
    // Halley iteration, converged when |dw| <= 1e-14 (1 + |w|).
    // Throws std::domain_error for x < -1/e.
    double lambert_w0(double x);

    // Modified Bessel functions of the first kind, orders 0 and 1, x >= 0.
    // Power series for x <= 15, asymptotic expansion above.
    // Throw std::domain_error for x < 0 and std::overflow_error when the result is not representable.
    double bessel_i0(double x);
    double bessel_i1(double x);

    // Circuit constants of the single-diode rectenna model. The diode and matching-network
    // parameters are folded into the composite constants a and B.
    struct RectennaParams
    {
        double a = 1.29;         // Composite diode constant, dimensionless
        double b = 1.55e3;       // Input scaling B in 1/sqrt(W)
        double i_s = 5e-6;       // Reverse-bias saturation current in [A]
        double r_l = 1e4;        // Load resistance in [Ohm]
        double a_s_sq = 25e-6;   // Input power at which the output saturates, A_s^2 in [W]

        // Throws std::invalid_argument unless all constants are positive.
        void validate() const;
    };

    // Map from received signal power |z|^2 (W) to harvested DC power (W).
    //
    // Value type holding the evaluation functions. Use HarvestCurve::rectenna for the
    // Lambert-W / Bessel model, or HarvestCurve::custom to inject a synthetic curve
    // (tests, alternative harvesters) through the same interface.
    class HarvestCurve
    {
    public:
        using Function = std::function<double(double)>;

        static HarvestCurve rectenna(const RectennaParams &params);
        static HarvestCurve custom(Function value, Function derivative, double saturation_input);

        // phi(x); constant for x >= saturation_input()
        double power(double input_power) const;

        // d phi / dx; zero in the saturated region
        double derivative(double input_power) const;

        double saturation_input() const { return saturation_input_; }
        double saturation_power() const { return saturation_power_; }

    private:
        HarvestCurve(Function value, Function derivative, double saturation_input);

        Function value_;
        Function derivative_;
        double saturation_input_ = 0.0;
        double saturation_power_ = 0.0;
    };

    // Unclamped rectenna expression varphi(x) = [W0(a e^a I0(B sqrt(2x))) / a - 1]^2 I_s^2 R_L
    double rectenna_unclamped_power(const RectennaParams &params, double input_power);

    // Derivative of the unclamped expression, by the chain rule through W0 and I0.
    double rectenna_unclamped_derivative(const RectennaParams &params, double input_power);

    // phi(x) = min{varphi(x), varphi(A_s^2)}
    double harvested_power(const HarvestCurve &curve, double input_power);

    // Discrete midpoint convexity of phi on a uniform grid of `samples` points over
    // [0, A_s^2], tolerance 1e-12 times the saturation power. Requires samples >= 3.
    bool check_assumption_convexity(const HarvestCurve &curve, std::size_t samples);

    // phi(x) >= phi(A_s^2) (x / A_s^2)^2 on a uniform grid over [0, A_s^2]. Requires samples >= 2.
    bool check_assumption_quadratic(const HarvestCurve &curve, std::size_t samples);
}

#endif
