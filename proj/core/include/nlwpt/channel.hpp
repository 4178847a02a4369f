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

#ifndef NLWPT_CHANNEL_HPP
#define NLWPT_CHANNEL_HPP

#include "nlwpt/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nlwpt
{
    // SplitMix64 used in counter mode.
    //
    // Stream splitting rule: the key of stream s under seed k is
    //     key = mix64(mix64(k) + (s + 1) * 0xD1B54A32D192ED03)
    // and the i-th output (i = 1, 2, ...) is mix64(key + i * 0x9E3779B97F4A7C15),
    // where mix64 is the SplitMix64 finalizer. Every output is a pure function of
    // (seed, stream, counter), so realizations can be generated in any order.
    class CounterRng
    {
    public:
        CounterRng(std::uint64_t seed, std::uint64_t stream);

        std::uint64_t next();
        double uniform();      // [0, 1), 53-bit resolution
        double uniform_open(); // (0, 1]

        // CN(0,1) by Box-Muller: |z|^2 = -ln(u1), arg z = 2 pi u2, consuming u1 then u2
        Complex complex_normal();

        std::uint64_t counter() const { return counter_; }

    private:
        std::uint64_t key_;
        std::uint64_t counter_ = 0;
    };

    std::uint64_t mix64(std::uint64_t z);

    struct NodeConfig
    {
        std::size_t n_e = 1;    // Number of rectennas N_m^E
        double distance = 10.0; // Distance to the transmitter in [m]
        double weight = 1.0;    // Node weight xi_m
    };

    struct SystemConfig
    {
        std::size_t n_t = 1;           // Transmit antennas N^T
        std::vector<NodeConfig> nodes; // EH nodes
        double rician_factor = 1.0;    // Linear Rician K-factor
        std::uint64_t seed = 1;

        std::size_t rectenna_count() const;
        std::vector<double> weights() const;

        // Throws std::invalid_argument on any violated invariant
        void validate() const;
    };

    // Throws std::invalid_argument unless all weights are >= 0 and sum to 1 within 1e-12
    void validate_weights(const std::vector<double> &weights);

    // Channel from the transmitter to one rectenna: g_p^m (1 x N^T)
    struct ChannelRow
    {
        std::size_t node = 0;
        std::size_t rectenna = 0;
        CRowVector gain;
    };

    struct ChannelSet
    {
        std::size_t n_t = 0;
        std::vector<ChannelRow> rows;  // Node-major, rectenna-minor
        std::vector<double> weights;   // One per node

        std::size_t node_count() const { return weights.size(); }
        double weight_of(const ChannelRow &row) const { return weights.at(row.node); }

        // Same channels, new node weights (validated)
        ChannelSet with_weights(const std::vector<double> &new_weights) const;

        // Throws std::invalid_argument if rows/weights are inconsistent or non-finite
        void validate() const;
    };

    // 35.3 + 37.6 log10(d); throws std::domain_error for d <= 0
    double path_loss_db(double distance);

    // 10^(-PL_dB / 10)
    double path_loss_linear(double distance);

    // One Rician realization. Entries are
    //     sqrt(L_m) (sqrt(K/(K+1)) + sqrt(1/(K+1)) CN(0,1))
    // with a zero line-of-sight phase. The Gaussian draws come from stream `realization`
    // of config.seed in node, rectenna, antenna order.
    ChannelSet draw_channels(const SystemConfig &config, std::uint64_t realization = 0);

    // Text fixture format, one complex entry per line:
    //     # nlwpt channel set v1
    //     seed <u64>
    //     realization <u64>
    //     rician_factor <K>
    //     n_t <N^T>
    //     nodes <M>
    //     node <m> n_e <N_m^E> distance <d_m> weight <xi_m>      (M lines)
    //     g <m> <p> <k> <re> <im>                                 (row-major)
    // Numbers are printed with 17 significant digits.
    void write_channel_set(std::ostream &out, const ChannelSet &channels, const SystemConfig &config,
                           std::uint64_t realization);

    struct ChannelFixture
    {
        SystemConfig config;
        std::uint64_t realization = 0;
        ChannelSet channels;
    };

    // Throws std::runtime_error on malformed input
    ChannelFixture read_channel_set(std::istream &in);
}

#endif
