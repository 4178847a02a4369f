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

#ifndef NLWPT_LINALG_HPP
#define NLWPT_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

namespace nlwpt
{
    using Complex = std::complex<double>;
    using CVector = Eigen::VectorXcd;       // column vector, e.g. a beamformer w
    using CRowVector = Eigen::RowVectorXcd; // row vector, e.g. a channel g
    using CMatrix = Eigen::MatrixXcd;
}

#endif
