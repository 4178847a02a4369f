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

// Command-line front end: miso | simo | mimo | region | curve | selftest

#include "nlwpt/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

using namespace nlwpt;

namespace
{
    struct Overrides
    {
        std::string config;
        std::optional<std::uint64_t> seed;
        std::string budget;
        std::string engine;
        std::optional<std::size_t> realizations;
        std::string out;
        std::string format;
        std::string summary;
        bool timing = false;
    };

    void add_common(CLI::App *cmd, Overrides &o)
    {
        cmd->add_option("--config", o.config, "Key-value experiment file")->check(CLI::ExistingFile);
        cmd->add_option("--seed", o.seed, "Master seed");
        cmd->add_option("--budget", o.budget, "Comma-separated budgets in W");
        cmd->add_option("--engine", o.engine,
                        "optimal | suboptimal, or a comma list that may add baseline1, baseline2");
        cmd->add_option("--realizations", o.realizations, "Channel realizations")->check(CLI::PositiveNumber);
        cmd->add_option("--out", o.out, "Output file (default stdout)");
        cmd->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--summary", o.summary, "Also write per-cell means and standard errors (CSV) here");
        cmd->add_flag("--timing", o.timing, "Record wall time per cell");
    }

    ExperimentSpec build_spec(const Overrides &o, Geometry geometry)
    {
        std::map<std::string, std::string> kv;
        if (!o.config.empty())
        {
            std::ifstream in(o.config);
            if (!in)
                throw std::runtime_error("cannot open " + o.config);
            kv = parse_key_values(in);
        }
        if (auto it = kv.find("geometry"); it != kv.end() && parse_geometry(it->second) != geometry)
            throw std::invalid_argument("config geometry '" + it->second + "' does not match the subcommand");
        if (o.seed)
            kv["seed"] = std::to_string(*o.seed);
        if (!o.budget.empty())
            kv["budget"] = o.budget;
        if (!o.engine.empty())
            kv["engine"] = o.engine;
        if (o.realizations)
            kv["realizations"] = std::to_string(*o.realizations);
        if (!o.out.empty())
            kv["output"] = o.out;
        if (!o.format.empty())
            kv["format"] = o.format;
        if (o.timing)
            kv["timing"] = "1";

        ExperimentSpec spec = spec_from_config(kv, geometry);
        if (spec.budgets.empty())
            spec.budgets = {1.0};
        return spec;
    }

    template <typename F>
    void with_output(const std::string &path, F write)
    {
        if (path.empty())
        {
            write(std::cout);
            return;
        }
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot write " + path);
        write(out);
    }

    int run_experiment(const ExperimentSpec &spec, const std::string &summary)
    {
        const auto rows = run_sweep(spec);
        with_output(spec.output, [&](std::ostream &out)
                    { spec.format == "json" ? write_json(out, rows) : write_csv(out, rows); });
        if (!summary.empty())
            with_output(summary, [&](std::ostream &out) { write_summary_csv(out, summarize(rows)); });
        std::size_t failed = 0;
        for (const auto &r : rows)
            if (!r.error.empty())
            {
                ++failed;
                std::cerr << "realization " << r.realization << ", budget " << format_number(r.budget_w) << ", "
                          << r.engine << ": " << r.error << '\n';
            }
        return failed == 0 ? 0 : 2;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Transmit strategies for wireless power transfer with non-linear energy harvesters"};
    app.require_subcommand(1);

    Overrides o;
    std::size_t points = 101;

    auto *miso = app.add_subcommand("miso", "Single rectenna, any number of transmit antennas");
    auto *simo = app.add_subcommand("simo", "Single transmit antenna, any number of rectennas");
    auto *mimo = app.add_subcommand("mimo", "Multi-antenna, multi-node beamforming");
    auto *region = app.add_subcommand("region", "Two-node harvested power region over a weight sweep");
    auto *curve = app.add_subcommand("curve", "Dump samples of the effective curve for realization 0");
    auto *selftest = app.add_subcommand("selftest", "Quick invariant checks");
    for (auto *cmd : {miso, simo, mimo, region, curve})
        add_common(cmd, o);
    curve->add_option("--points", points, "Number of samples")->check(CLI::Range(2, 100000));

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (selftest->parsed())
            return run_selftest(std::cout) ? 0 : 1;
        if (miso->parsed())
            return run_experiment(build_spec(o, Geometry::miso), o.summary);
        if (simo->parsed())
            return run_experiment(build_spec(o, Geometry::simo), o.summary);
        if (mimo->parsed())
            return run_experiment(build_spec(o, Geometry::mimo), o.summary);
        if (region->parsed())
        {
            ExperimentSpec spec = build_spec(o, Geometry::mimo);
            if (spec.system.nodes.size() != 2)
                throw std::invalid_argument("region needs exactly two nodes (distance = d1, d2)");
            if (spec.weight_sweep.empty())
                spec.weight_sweep = two_node_weight_sweep(11);
            return run_experiment(spec, o.summary);
        }
        if (curve->parsed())
        {
            // geometry comes from the config; default mimo
            std::map<std::string, std::string> kv;
            Geometry g = Geometry::mimo;
            if (!o.config.empty())
            {
                std::ifstream in(o.config);
                kv = parse_key_values(in);
                if (auto it = kv.find("geometry"); it != kv.end())
                    g = parse_geometry(it->second);
            }
            const ExperimentSpec spec = build_spec(o, g);
            const std::string engine = spec.engines.front();
            const auto samples = sample_effective_curve(spec, parse_engine(engine), points);
            with_output(spec.output,
                        [&](std::ostream &out)
                        {
                            out << "nu_w,phi_w\n";
                            for (const auto &s : samples)
                                out << format_number(s[0]) << ',' << format_number(s[1]) << '\n';
                        });
            return 0;
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "nlwpt: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
