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

#include "nlwpt/harness.hpp"

#include "nlwpt/baselines.hpp"
#include "nlwpt/convex_engine.hpp"
#include "nlwpt/miso.hpp"
#include "nlwpt/simo.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nlwpt
{
    namespace
    {
        std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r\n");
            if (b == std::string::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r\n");
            return s.substr(b, e - b + 1);
        }

        double parse_double(const std::string &key, const std::string &text)
        {
            const std::string t = trim(text);
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc() || ptr != t.data() + t.size())
                throw std::invalid_argument("config: '" + key + "' expects a number, got '" + text + "'");
            return v;
        }

        std::uint64_t parse_u64(const std::string &key, const std::string &text)
        {
            const std::string t = trim(text);
            std::uint64_t v = 0;
            const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc() || ptr != t.data() + t.size())
                throw std::invalid_argument("config: '" + key + "' expects a non-negative integer, got '" + text + "'");
            return v;
        }

        std::vector<std::string> split(const std::string &text, char sep)
        {
            std::vector<std::string> out;
            std::string item;
            std::istringstream ss(text);
            while (std::getline(ss, item, sep))
            {
                item = trim(item);
                if (!item.empty())
                    out.push_back(item);
            }
            return out;
        }

        std::string join(const std::vector<double> &v, char sep)
        {
            std::string out;
            for (std::size_t i = 0; i < v.size(); ++i)
            {
                if (i)
                    out += sep;
                out += format_number(v[i]);
            }
            return out;
        }

        // Broadcast a per-node list of length 1 or M
        template <typename T>
        std::vector<T> broadcast(const std::vector<T> &v, std::size_t m, const char *key)
        {
            if (v.size() == m)
                return v;
            if (v.size() == 1)
                return std::vector<T>(m, v[0]);
            throw std::invalid_argument(std::string("config: '") + key + "' must have 1 or M entries");
        }

        double dot(const std::vector<double> &a, const std::vector<double> &b)
        {
            double s = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i)
                s += a[i] * b[i];
            return s;
        }

        double cross(const std::array<double, 2> &o, const std::array<double, 2> &a, const std::array<double, 2> &b)
        {
            return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
        }
    }

    std::string format_number(double v)
    {
        if (std::isnan(v))
            return "nan";
        if (std::isinf(v))
            return v > 0 ? "inf" : "-inf";
        char buf[64];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        return std::string(buf, ptr);
    }

    const char *geometry_name(Geometry g)
    {
        switch (g)
        {
        case Geometry::miso:
            return "miso";
        case Geometry::simo:
            return "simo";
        default:
            return "mimo";
        }
    }

    Geometry parse_geometry(const std::string &name)
    {
        if (name == "miso")
            return Geometry::miso;
        if (name == "simo")
            return Geometry::simo;
        if (name == "mimo")
            return Geometry::mimo;
        throw std::invalid_argument("unknown geometry '" + name + "' (expected miso, simo or mimo)");
    }

    bool is_known_engine_label(const std::string &label)
    {
        return label == "optimal" || label == "suboptimal" || label == "baseline1" || label == "baseline2";
    }

    void ExperimentSpec::validate() const
    {
        system.validate();
        rectenna.validate();
        grid.validate();
        if (realizations < 1)
            throw std::invalid_argument("ExperimentSpec: realizations must be at least 1");
        if (budgets.empty())
            throw std::invalid_argument("ExperimentSpec: budget sweep is empty");
        for (double b : budgets)
            if (!(b > 0.0) || !std::isfinite(b))
                throw std::invalid_argument("ExperimentSpec: budgets must be positive");
        if (engines.empty())
            throw std::invalid_argument("ExperimentSpec: no engine selected");
        for (const auto &e : engines)
            if (!is_known_engine_label(e))
                throw std::invalid_argument("ExperimentSpec: unknown engine '" + e + "'");
        parse_engine(baseline_engine);
        for (const auto &w : weight_sweep)
        {
            if (w.size() != system.nodes.size())
                throw std::invalid_argument("ExperimentSpec: weight vector length differs from the node count");
            validate_weights(w);
        }
        if (format != "csv" && format != "json")
            throw std::invalid_argument("ExperimentSpec: format must be csv or json");
        if (!(eps_pa > 0.0) || !(eps_sca > 0.0))
            throw std::invalid_argument("ExperimentSpec: tolerances must be positive");
        if (strategy_points < 2)
            throw std::invalid_argument("ExperimentSpec: strategy_points must be at least 2");
        if (geometry == Geometry::miso && (system.nodes.size() != 1 || system.nodes[0].n_e != 1))
            throw std::invalid_argument("ExperimentSpec: miso needs one node with one rectenna");
        if (geometry == Geometry::simo && system.n_t != 1)
            throw std::invalid_argument("ExperimentSpec: simo needs a single transmit antenna");
    }

    std::vector<std::vector<double>> ExperimentSpec::effective_weight_sweep() const
    {
        if (weight_sweep.empty())
            return {system.weights()};
        return weight_sweep;
    }

    MimoOptions ExperimentSpec::mimo_options(PhiEngine engine) const
    {
        MimoOptions o;
        o.engine = engine;
        o.coarse_points = strategy_points;
        o.polyblock.tol = eps_pa;
        o.sca.tol = eps_sca;
        return o;
    }

    std::map<std::string, std::string> parse_key_values(std::istream &in)
    {
        std::map<std::string, std::string> kv;
        std::string line;
        std::size_t number = 0;
        while (std::getline(in, line))
        {
            ++number;
            const auto hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config line " + std::to_string(number) + ": expected key = value");
            const std::string key = trim(line.substr(0, eq));
            if (key.empty())
                throw std::invalid_argument("config line " + std::to_string(number) + ": empty key");
            kv[key] = trim(line.substr(eq + 1));
        }
        return kv;
    }

    std::vector<double> parse_list(const std::string &text)
    {
        std::vector<double> out;
        for (const auto &item : split(text, ','))
            out.push_back(parse_double("list", item));
        return out;
    }

    std::vector<std::vector<double>> two_node_weight_sweep(std::size_t points)
    {
        if (points < 2)
            throw std::invalid_argument("two_node_weight_sweep: need at least 2 points");
        std::vector<std::vector<double>> out;
        for (std::size_t i = 0; i < points; ++i)
        {
            const double x = double(i) / double(points - 1);
            out.push_back({x, 1.0 - x});
        }
        return out;
    }

    ExperimentSpec spec_from_config(const std::map<std::string, std::string> &kv, Geometry fallback)
    {
        static const std::set<std::string> known = {
            "id",       "geometry",    "n_t",     "n_e",       "distance",      "weights",         "rician_factor",
            "seed",     "budget",      "weight_sweep", "engine", "baseline_engine", "realizations", "output",
            "format",   "delta_rho",   "n_rho",   "eps_pa",    "eps_sca",       "a",               "b",
            "i_s",      "r_l",         "a_s_sq",  "strategy_points", "timing"};
        for (const auto &[key, value] : kv)
            if (!known.count(key))
                throw std::invalid_argument("config: unknown key '" + key + "'");

        auto get = [&](const char *key) -> const std::string *
        {
            const auto it = kv.find(key);
            return it == kv.end() ? nullptr : &it->second;
        };

        ExperimentSpec spec;
        spec.geometry = fallback;
        if (auto v = get("id"))
            spec.id = *v;
        if (auto v = get("geometry"))
            spec.geometry = parse_geometry(*v);

        std::vector<double> distance = {10.0};
        if (auto v = get("distance"))
            distance = parse_list(*v);
        const std::size_t m = distance.size();
        if (m == 0)
            throw std::invalid_argument("config: 'distance' is empty");

        std::vector<double> n_e = {1.0};
        if (auto v = get("n_e"))
            n_e = parse_list(*v);
        n_e = broadcast(n_e, m, "n_e");

        std::vector<double> weights(m, 1.0 / double(m));
        if (auto v = get("weights"))
            weights = broadcast(parse_list(*v), m, "weights");

        for (std::size_t i = 0; i < m; ++i)
        {
            if (!(n_e[i] >= 1.0) || n_e[i] != std::floor(n_e[i]))
                throw std::invalid_argument("config: 'n_e' entries must be positive integers");
            spec.system.nodes.push_back({std::size_t(n_e[i]), distance[i], weights[i]});
        }
        if (auto v = get("n_t"))
            spec.system.n_t = std::size_t(parse_u64("n_t", *v));
        if (auto v = get("rician_factor"))
            spec.system.rician_factor = parse_double("rician_factor", *v);
        if (auto v = get("seed"))
            spec.system.seed = parse_u64("seed", *v);

        if (auto v = get("budget"))
            spec.budgets = parse_list(*v);
        if (auto v = get("weight_sweep"))
        {
            const std::string t = trim(*v);
            if (t.rfind("grid:", 0) == 0)
                spec.weight_sweep = two_node_weight_sweep(std::size_t(parse_u64("weight_sweep", t.substr(5))));
            else
                for (const auto &vec : split(t, ';'))
                    spec.weight_sweep.push_back(parse_list(vec));
        }
        if (auto v = get("engine"))
        {
            spec.engines.clear();
            for (const auto &e : split(*v, ','))
                spec.engines.push_back(e);
        }
        if (auto v = get("baseline_engine"))
            spec.baseline_engine = *v;
        if (auto v = get("realizations"))
            spec.realizations = std::size_t(parse_u64("realizations", *v));
        if (auto v = get("output"))
            spec.output = *v;
        if (auto v = get("format"))
            spec.format = *v;
        if (auto v = get("delta_rho"))
            spec.grid.delta_rho = parse_double("delta_rho", *v);
        if (auto v = get("n_rho"))
            spec.grid.n_rho = std::size_t(parse_u64("n_rho", *v));
        if (auto v = get("eps_pa"))
            spec.eps_pa = parse_double("eps_pa", *v);
        if (auto v = get("eps_sca"))
            spec.eps_sca = parse_double("eps_sca", *v);
        if (auto v = get("a"))
            spec.rectenna.a = parse_double("a", *v);
        if (auto v = get("b"))
            spec.rectenna.b = parse_double("b", *v);
        if (auto v = get("i_s"))
            spec.rectenna.i_s = parse_double("i_s", *v);
        if (auto v = get("r_l"))
            spec.rectenna.r_l = parse_double("r_l", *v);
        if (auto v = get("a_s_sq"))
            spec.rectenna.a_s_sq = parse_double("a_s_sq", *v);
        if (auto v = get("strategy_points"))
            spec.strategy_points = std::size_t(parse_u64("strategy_points", *v));
        if (auto v = get("timing"))
            spec.timing = (*v == "1" || *v == "true" || *v == "yes");
        return spec;
    }

    ResultRow run_cell(const ExperimentSpec &spec, const ChannelSet &channels, const HarvestCurve &curve,
                       std::size_t realization, double budget, const std::string &engine)
    {
        ResultRow row;
        row.experiment_id = spec.id;
        row.realization = realization;
        row.budget_w = budget;
        row.weights = channels.weights;
        row.engine = engine;

        const bool proposed = engine == "optimal" || engine == "suboptimal";
        std::vector<double> powers(channels.node_count(), 0.0);

        switch (spec.geometry)
        {
        case Geometry::miso:
        {
            const CRowVector &g = channels.rows.at(0).gain;
            if (proposed)
                powers[0] = solve_miso(g, curve, budget, spec.grid).objective;
            else
                powers[0] = curve.power(budget * g.squaredNorm());
            break;
        }
        case Geometry::simo:
        {
            TwoPointDistribution law = TwoPointDistribution::single(budget);
            if (proposed)
                law = solve_simo(simo_spec(channels, curve), budget, spec.grid);
            for (const auto &r : channels.rows)
            {
                const double gain = r.gain.squaredNorm();
                powers[r.node] += law.expectation([&](double nu) { return curve.power(nu * gain); });
            }
            break;
        }
        case Geometry::mimo:
        {
            if (proposed)
            {
                const MimoStrategy s = solve_mimo(channels, curve, budget, spec.mimo_options(parse_engine(engine)));
                powers = strategy_node_powers(channels, curve, s);
            }
            else if (engine == "baseline1")
                powers = node_powers(channels, curve, baseline_energy_beam(channels, budget).beam);
            else
            {
                const MimoOptions o = spec.mimo_options(parse_engine(spec.baseline_engine));
                powers = node_powers(channels, curve,
                                     baseline_single_beam(channels, curve, budget, o.engine, o.polyblock, o.sca).beam);
            }
            break;
        }
        }
        row.node_powers_w = powers;
        row.objective_w = dot(channels.weights, powers);
        return row;
    }

    std::vector<ResultRow> run_sweep(const ExperimentSpec &spec)
    {
        spec.validate();
        const HarvestCurve curve = HarvestCurve::rectenna(spec.rectenna);
        const auto sweep = spec.effective_weight_sweep();

        std::vector<ResultRow> rows;
        for (std::size_t r = 0; r < spec.realizations; ++r)
        {
            const ChannelSet base = draw_channels(spec.system, r);
            for (const auto &weights : sweep)
            {
                const ChannelSet channels = base.with_weights(weights);
                for (double budget : spec.budgets)
                    for (const auto &engine : spec.engines)
                    {
                        const auto t0 = std::chrono::steady_clock::now();
                        ResultRow row;
                        try
                        {
                            row = run_cell(spec, channels, curve, r, budget, engine);
                        }
                        catch (const std::exception &e)
                        {
                            row.experiment_id = spec.id;
                            row.realization = r;
                            row.budget_w = budget;
                            row.weights = weights;
                            row.engine = engine;
                            row.objective_w = std::numeric_limits<double>::quiet_NaN();
                            row.error = e.what();
                        }
                        if (spec.timing)
                            row.wall_time_s =
                                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                        rows.push_back(std::move(row));
                    }
            }
        }
        return rows;
    }

    std::vector<SummaryRow> summarize(const std::vector<ResultRow> &rows)
    {
        if (rows.empty())
            throw std::invalid_argument("summarize: no rows");

        std::vector<SummaryRow> out;
        std::vector<std::vector<const ResultRow *>> members;
        for (const auto &row : rows)
        {
            if (!row.error.empty())
                continue;
            std::size_t g = 0;
            for (; g < out.size(); ++g)
                if (out[g].experiment_id == row.experiment_id && out[g].budget_w == row.budget_w &&
                    out[g].weights == row.weights && out[g].engine == row.engine)
                    break;
            if (g == out.size())
            {
                out.push_back({row.experiment_id, row.budget_w, row.weights, row.engine, 0, 0.0, 0.0, {}, {}});
                members.emplace_back();
            }
            members[g].push_back(&row);
        }

        auto mean_se = [](const std::vector<double> &x, double &mean, double &se)
        {
            const double n = double(x.size());
            mean = 0.0;
            for (double v : x)
                mean += v;
            mean /= n;
            se = 0.0;
            if (x.size() > 1)
            {
                double ss = 0.0;
                for (double v : x)
                    ss += (v - mean) * (v - mean);
                se = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
            }
        };

        for (std::size_t g = 0; g < out.size(); ++g)
        {
            auto &s = out[g];
            s.count = members[g].size();
            std::vector<double> obj;
            for (const auto *r : members[g])
                obj.push_back(r->objective_w);
            mean_se(obj, s.mean_objective_w, s.stderr_objective_w);

            const std::size_t m = members[g].front()->node_powers_w.size();
            s.mean_node_powers_w.assign(m, 0.0);
            s.stderr_node_powers_w.assign(m, 0.0);
            for (std::size_t k = 0; k < m; ++k)
            {
                std::vector<double> col;
                for (const auto *r : members[g])
                    col.push_back(r->node_powers_w.at(k));
                mean_se(col, s.mean_node_powers_w[k], s.stderr_node_powers_w[k]);
            }
        }
        return out;
    }

    void write_csv(std::ostream &out, const std::vector<ResultRow> &rows)
    {
        out << "experiment_id,realization,budget_w,weights,node_powers_w,objective_w,engine,wall_time_s\n";
        for (const auto &r : rows)
            out << r.experiment_id << ',' << r.realization << ',' << format_number(r.budget_w) << ','
                << join(r.weights, ';') << ',' << join(r.node_powers_w, ';') << ',' << format_number(r.objective_w)
                << ',' << r.engine << ',' << format_number(r.wall_time_s) << '\n';
    }

    void write_json(std::ostream &out, const std::vector<ResultRow> &rows)
    {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &r : rows)
        {
            nlohmann::json j;
            j["experiment_id"] = r.experiment_id;
            j["realization"] = r.realization;
            j["budget_w"] = r.budget_w;
            j["weights"] = r.weights;
            j["node_powers_w"] = r.node_powers_w;
            j["objective_w"] = std::isfinite(r.objective_w) ? nlohmann::json(r.objective_w) : nlohmann::json();
            j["engine"] = r.engine;
            j["wall_time_s"] = r.wall_time_s;
            if (!r.error.empty())
                j["error"] = r.error;
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << '\n';
    }

    void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &rows)
    {
        out << "experiment_id,budget_w,weights,engine,count,mean_objective_w,stderr_objective_w,"
               "mean_node_powers_w,stderr_node_powers_w\n";
        for (const auto &s : rows)
            out << s.experiment_id << ',' << format_number(s.budget_w) << ',' << join(s.weights, ';') << ','
                << s.engine << ',' << s.count << ',' << format_number(s.mean_objective_w) << ','
                << format_number(s.stderr_objective_w) << ',' << join(s.mean_node_powers_w, ';') << ','
                << join(s.stderr_node_powers_w, ';') << '\n';
    }

    double region_hull_violation(const std::vector<std::array<double, 2>> &points)
    {
        if (points.empty())
            return 0.0;
        double xmax = 0.0, ymax = 0.0;
        for (const auto &p : points)
        {
            if (!(p[0] >= 0.0) || !(p[1] >= 0.0))
                throw std::invalid_argument("region_hull_violation: coordinates must be non-negative");
            xmax = std::max(xmax, p[0]);
            ymax = std::max(ymax, p[1]);
        }
        const double scale = std::max(xmax, ymax);
        if (!(scale > 0.0))
            return 0.0;

        // Upper hull (monotone chain) from (0, ymax) to (xmax, 0)
        std::vector<std::array<double, 2>> pts = points;
        pts.push_back({0.0, ymax});
        pts.push_back({xmax, 0.0});
        std::sort(pts.begin(), pts.end(), [](const auto &a, const auto &b)
                  { return a[0] < b[0] || (a[0] == b[0] && a[1] > b[1]); });
        std::vector<std::array<double, 2>> hull;
        for (const auto &p : pts)
        {
            while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0.0)
                hull.pop_back();
            hull.push_back(p);
        }

        double worst = 0.0;
        for (const auto &p : points)
        {
            double dist = std::numeric_limits<double>::infinity();
            for (std::size_t e = 0; e + 1 < hull.size(); ++e)
            {
                const auto &a = hull[e];
                const auto &b = hull[e + 1];
                const double dx = b[0] - a[0], dy = b[1] - a[1];
                const double len = std::hypot(dx, dy);
                if (!(len > 0.0))
                    continue;
                // Outward normal of a clockwise upper chain
                const double nx = -dy / len, ny = dx / len;
                dist = std::min(dist, (nx * (a[0] - p[0]) + ny * (a[1] - p[1])));
            }
            if (std::isfinite(dist))
                worst = std::max(worst, dist);
        }
        return worst / scale;
    }

    std::vector<std::array<double, 2>> sample_effective_curve(const ExperimentSpec &spec, PhiEngine engine,
                                                              std::size_t points)
    {
        spec.validate();
        if (points < 2)
            throw std::invalid_argument("sample_effective_curve: need at least 2 points");
        const HarvestCurve curve = HarvestCurve::rectenna(spec.rectenna);
        const ChannelSet channels = draw_channels(spec.system, 0);
        const double budget = *std::max_element(spec.budgets.begin(), spec.budgets.end());

        std::function<double(double)> phi;
        double nu_sat = 0.0;
        const MimoOptions o = spec.mimo_options(engine);
        SimoCurveSpec simo{{}, curve};
        switch (spec.geometry)
        {
        case Geometry::miso:
        {
            const CRowVector g = channels.rows.at(0).gain;
            nu_sat = miso_saturation_power(g, curve);
            phi = [g, &curve](double nu) { return curve.power(nu * g.squaredNorm()); };
            break;
        }
        case Geometry::simo:
            simo = simo_spec(channels, curve);
            nu_sat = simo_saturation_power(simo);
            phi = [&simo](double nu) { return simo_value(simo, nu); };
            break;
        case Geometry::mimo:
            nu_sat = mimo_saturation_power(channels, curve, o.sca.engine);
            phi = [&](double nu)
            { return nu > 0.0 ? evaluate_phi(engine, channels, curve, nu, o.polyblock, o.sca).value : 0.0; };
            break;
        }
        const double top = std::max(budget, 1.05 * nu_sat);
        std::vector<std::array<double, 2>> out;
        for (std::size_t j = 0; j < points; ++j)
        {
            const double nu = top * double(j) / double(points - 1);
            out.push_back({nu, phi(nu)});
        }
        return out;
    }

    bool run_selftest(std::ostream &out)
    {
        bool all = true;
        auto report = [&](const char *name, bool ok)
        {
            out << (ok ? "PASS " : "FAIL ") << name << '\n';
            all = all && ok;
        };
        auto guarded = [&](const char *name, const std::function<bool()> &check)
        {
            try
            {
                report(name, check());
            }
            catch (const std::exception &e)
            {
                out << "FAIL " << name << " (" << e.what() << ")\n";
                all = false;
            }
        };

        const RectennaParams params;
        const HarvestCurve curve = HarvestCurve::rectenna(params);

        guarded("harvest curve monotone, convex, sub-quadratic, flat above saturation",
                [&]
                {
                    const double top = params.a_s_sq;
                    double prev = 0.0;
                    for (int i = 0; i <= 10000; ++i)
                    {
                        const double v = curve.power(top * i / 10000.0);
                        if (v < prev)
                            return false;
                        prev = v;
                    }
                    return curve.power(2.0 * top) == curve.power(top) && check_assumption_convexity(curve, 10000) &&
                           check_assumption_quadratic(curve, 10000);
                });

        guarded("lambert_w0 round trip on [0, 20]",
                [&]
                {
                    for (int i = 0; i <= 200; ++i)
                    {
                        const double w = 0.1 * i;
                        if (std::abs(lambert_w0(w * std::exp(w)) - w) > 1e-10 * std::max(1.0, w))
                            return false;
                    }
                    return true;
                });

        guarded("grid search equals pair enumeration on random curves",
                [&]
                {
                    CounterRng rng(7, 0);
                    for (int c = 0; c < 20; ++c)
                    {
                        std::vector<double> v(201, 0.0);
                        for (std::size_t j = 1; j < v.size(); ++j)
                            v[j] = v[j - 1] + rng.uniform();
                        const PowerCurve pc(0.1, v);
                        const double budget = 0.1 * double(1 + rng.next() % 199);
                        const double got = expected_value(pc, grid_search(pc, budget));
                        double best = pc.at(budget);
                        for (std::size_t i = 0; pc.rho(i) < budget; ++i)
                            for (std::size_t j = i + 1; j < v.size(); ++j)
                                if (pc.rho(j) > budget)
                                {
                                    const double w = (budget - pc.rho(i)) / (pc.rho(j) - pc.rho(i));
                                    best = std::max(best, (1 - w) * v[i] + w * v[j]);
                                }
                        if (std::abs(got - best) > 1e-9 * best)
                            return false;
                    }
                    return true;
                });

        guarded("miso grid search matches the on-off closed form",
                [&]
                {
                    SystemConfig cfg;
                    cfg.n_t = 2;
                    cfg.nodes = {{1, 3.0, 1.0}};
                    const GridSpec grid;
                    for (std::uint64_t r = 0; r < 10; ++r)
                    {
                        const CRowVector g = draw_channels(cfg, r).rows[0].gain;
                        const double p_max = miso_saturation_power(g, curve);
                        const double budget = 0.37 * p_max;
                        const auto law = solve_miso(g, curve, budget, grid).amplitude_law;
                        if (law.nu_1 != 0.0 || std::abs(law.nu_2 - p_max) > grid.delta_rho)
                            return false;
                    }
                    return true;
                });

        guarded("single-rectenna feasibility agrees with the Rayleigh bound",
                [&]
                {
                    SystemConfig cfg;
                    cfg.n_t = 2;
                    cfg.nodes = {{1, 3.0, 1.0}};
                    for (std::uint64_t r = 0; r < 5; ++r)
                    {
                        const ChannelSet ch = draw_channels(cfg, r);
                        const double p = params.a_s_sq / ch.rows[0].gain.squaredNorm();
                        const auto pat = make_pattern({0}, 1, params.a_s_sq);
                        if (!solve_feasibility(ch, params.a_s_sq, pat, 1.05 * p).feasible ||
                            solve_feasibility(ch, params.a_s_sq, pat, 0.95 * p).feasible)
                            return false;
                    }
                    return true;
                });

        guarded("sweeps are deterministic",
                [&]
                {
                    ExperimentSpec spec;
                    spec.geometry = Geometry::mimo;
                    spec.system.n_t = 2;
                    spec.system.nodes = {{2, 3.0, 1.0}};
                    spec.budgets = {1.0};
                    spec.engines = {"suboptimal", "baseline1"};
                    spec.realizations = 2;
                    spec.strategy_points = 20;
                    std::ostringstream a, b;
                    write_csv(a, run_sweep(spec));
                    write_csv(b, run_sweep(spec));
                    return a.str() == b.str();
                });
        return all;
    }
}
