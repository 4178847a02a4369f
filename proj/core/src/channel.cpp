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

#include "nlwpt/channel.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nlwpt
{
    namespace
    {
        constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;
        constexpr std::uint64_t stream_gamma = 0xD1B54A32D192ED03ULL;

        [[noreturn]] void parse_fail(const std::string &what)
        {
            throw std::runtime_error("read_channel_set: " + what);
        }

        // Reads "<key> <value...>" and checks the key
        std::istringstream expect_line(std::istream &in, const std::string &key)
        {
            std::string line;
            while (std::getline(in, line))
            {
                if (line.empty() || line[0] == '#')
                    continue;
                std::istringstream ss(line);
                std::string word;
                ss >> word;
                if (word != key)
                    parse_fail("expected '" + key + "', found '" + word + "'");
                return ss;
            }
            parse_fail("unexpected end of input, expected '" + key + "'");
        }

        template <typename T>
        T read_value(std::istream &ss, const std::string &key)
        {
            T value{};
            if (!(ss >> value))
                parse_fail("bad value for '" + key + "'");
            return value;
        }
    }

    std::uint64_t mix64(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix64(mix64(seed) + (stream + 1) * stream_gamma))
    {
    }

    std::uint64_t CounterRng::next()
    {
        ++counter_;
        return mix64(key_ + counter_ * golden_gamma);
    }

    double CounterRng::uniform() { return double(next() >> 11) * 0x1.0p-53; }

    double CounterRng::uniform_open() { return (double(next() >> 11) + 1.0) * 0x1.0p-53; }

    Complex CounterRng::complex_normal()
    {
        const double u1 = uniform_open();
        const double u2 = uniform();
        const double r = std::sqrt(-std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

    std::size_t SystemConfig::rectenna_count() const
    {
        std::size_t k = 0;
        for (const auto &node : nodes)
            k += node.n_e;
        return k;
    }

    std::vector<double> SystemConfig::weights() const
    {
        std::vector<double> w;
        w.reserve(nodes.size());
        for (const auto &node : nodes)
            w.push_back(node.weight);
        return w;
    }

    void validate_weights(const std::vector<double> &weights)
    {
        if (weights.empty())
            throw std::invalid_argument("weights: at least one node is required");
        double sum = 0.0;
        for (double w : weights)
        {
            if (!(w >= 0.0) || !std::isfinite(w))
                throw std::invalid_argument("weights: every weight must be finite and non-negative");
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument("weights: weights must sum to 1");
    }

    void SystemConfig::validate() const
    {
        if (n_t < 1)
            throw std::invalid_argument("SystemConfig: n_t must be at least 1");
        if (nodes.empty())
            throw std::invalid_argument("SystemConfig: at least one node is required");
        for (const auto &node : nodes)
        {
            if (node.n_e < 1)
                throw std::invalid_argument("SystemConfig: every node needs at least one rectenna");
            if (!(node.distance > 0.0) || !std::isfinite(node.distance))
                throw std::invalid_argument("SystemConfig: distances must be positive");
        }
        if (!(rician_factor >= 0.0) || !std::isfinite(rician_factor))
            throw std::invalid_argument("SystemConfig: rician_factor must be finite and non-negative");
        validate_weights(weights());
    }

    ChannelSet ChannelSet::with_weights(const std::vector<double> &new_weights) const
    {
        if (new_weights.size() != weights.size())
            throw std::invalid_argument("ChannelSet::with_weights: node count mismatch");
        validate_weights(new_weights);
        ChannelSet out = *this;
        out.weights = new_weights;
        return out;
    }

    void ChannelSet::validate() const
    {
        if (n_t < 1)
            throw std::invalid_argument("ChannelSet: n_t must be at least 1");
        validate_weights(weights);
        if (rows.empty())
            throw std::invalid_argument("ChannelSet: no rectenna rows");
        for (const auto &row : rows)
        {
            if (row.node >= weights.size())
                throw std::invalid_argument("ChannelSet: row refers to an unknown node");
            if (std::size_t(row.gain.size()) != n_t)
                throw std::invalid_argument("ChannelSet: row length differs from n_t");
            if (!row.gain.allFinite())
                throw std::invalid_argument("ChannelSet: non-finite channel entry");
        }
    }

    double path_loss_db(double distance)
    {
        if (!(distance > 0.0))
            throw std::domain_error("path_loss_db: distance must be positive");
        return 35.3 + 37.6 * std::log10(distance);
    }

    double path_loss_linear(double distance) { return std::pow(10.0, -path_loss_db(distance) / 10.0); }

    ChannelSet draw_channels(const SystemConfig &config, std::uint64_t realization)
    {
        config.validate();
        CounterRng rng(config.seed, realization);

        const double kappa = config.rician_factor;
        const double los = std::sqrt(kappa / (kappa + 1.0));
        const double nlos = std::sqrt(1.0 / (kappa + 1.0));

        ChannelSet out;
        out.n_t = config.n_t;
        out.weights = config.weights();
        out.rows.reserve(config.rectenna_count());
        for (std::size_t m = 0; m < config.nodes.size(); ++m)
        {
            const double amp = std::sqrt(path_loss_linear(config.nodes[m].distance));
            for (std::size_t p = 0; p < config.nodes[m].n_e; ++p)
            {
                ChannelRow row{m, p, CRowVector(Eigen::Index(config.n_t))};
                for (std::size_t k = 0; k < config.n_t; ++k)
                    row.gain(Eigen::Index(k)) = amp * (Complex(los, 0.0) + nlos * rng.complex_normal());
                out.rows.push_back(std::move(row));
            }
        }
        return out;
    }

    void write_channel_set(std::ostream &out, const ChannelSet &channels, const SystemConfig &config,
                           std::uint64_t realization)
    {
        const auto old_flags = out.flags();
        const auto old_prec = out.precision();
        out << std::setprecision(17);

        out << "# nlwpt channel set v1\n";
        out << "seed " << config.seed << "\n";
        out << "realization " << realization << "\n";
        out << "rician_factor " << config.rician_factor << "\n";
        out << "n_t " << channels.n_t << "\n";
        out << "nodes " << config.nodes.size() << "\n";
        for (std::size_t m = 0; m < config.nodes.size(); ++m)
        {
            const auto &node = config.nodes[m];
            const double weight = m < channels.weights.size() ? channels.weights[m] : node.weight;
            out << "node " << m << " n_e " << node.n_e << " distance " << node.distance << " weight " << weight
                << "\n";
        }
        for (const auto &row : channels.rows)
            for (Eigen::Index k = 0; k < row.gain.size(); ++k)
                out << "g " << row.node << " " << row.rectenna << " " << k << " " << row.gain(k).real() << " "
                    << row.gain(k).imag() << "\n";

        out.flags(old_flags);
        out.precision(old_prec);
    }

    ChannelFixture read_channel_set(std::istream &in)
    {
        ChannelFixture fx;
        {
            auto ss = expect_line(in, "seed");
            fx.config.seed = read_value<std::uint64_t>(ss, "seed");
        }
        {
            auto ss = expect_line(in, "realization");
            fx.realization = read_value<std::uint64_t>(ss, "realization");
        }
        {
            auto ss = expect_line(in, "rician_factor");
            fx.config.rician_factor = read_value<double>(ss, "rician_factor");
        }
        {
            auto ss = expect_line(in, "n_t");
            fx.config.n_t = read_value<std::size_t>(ss, "n_t");
        }
        std::size_t node_count = 0;
        {
            auto ss = expect_line(in, "nodes");
            node_count = read_value<std::size_t>(ss, "nodes");
        }
        for (std::size_t m = 0; m < node_count; ++m)
        {
            auto ss = expect_line(in, "node");
            NodeConfig node;
            std::string key;
            if (read_value<std::size_t>(ss, "node") != m)
                parse_fail("nodes out of order");
            ss >> key;
            node.n_e = read_value<std::size_t>(ss, "n_e");
            ss >> key;
            node.distance = read_value<double>(ss, "distance");
            ss >> key;
            node.weight = read_value<double>(ss, "weight");
            fx.config.nodes.push_back(node);
        }
        try
        {
            fx.config.validate();
        }
        catch (const std::invalid_argument &e)
        {
            parse_fail(e.what());
        }

        fx.channels.n_t = fx.config.n_t;
        fx.channels.weights = fx.config.weights();
        for (std::size_t m = 0; m < node_count; ++m)
            for (std::size_t p = 0; p < fx.config.nodes[m].n_e; ++p)
            {
                ChannelRow row{m, p, CRowVector(Eigen::Index(fx.config.n_t))};
                for (std::size_t k = 0; k < fx.config.n_t; ++k)
                {
                    auto ss = expect_line(in, "g");
                    const auto mm = read_value<std::size_t>(ss, "g");
                    const auto pp = read_value<std::size_t>(ss, "g");
                    const auto kk = read_value<std::size_t>(ss, "g");
                    if (mm != m || pp != p || kk != k)
                        parse_fail("channel entries out of order");
                    const double re = read_value<double>(ss, "g");
                    const double im = read_value<double>(ss, "g");
                    row.gain(Eigen::Index(k)) = Complex(re, im);
                }
                fx.channels.rows.push_back(std::move(row));
            }
        return fx;
    }
}
