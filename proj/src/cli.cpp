// SPDX-License-Identifier: Apache-2.0
//
// rissim - ray-based simulator for RIS-aided indoor coverage
// Copyright (C) 2026 The rissim authors
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

#include "rissim/cli.hpp"
#include "rissim/config.hpp"
#include "rissim/error.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace rissim::cli
{
    std::string format_fixed(double value, int decimals)
    {
        if (std::isnan(value))
            return "nan";
        if (std::isinf(value))
            return value < 0.0 ? "-inf" : "inf";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
        std::string s(buf);
        // -0.00 and 0.00 are the same number
        if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos)
            s.erase(0, 1);
        return s;
    }

    void write_file_atomic(const std::filesystem::path &path, const std::string &content)
    {
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw simulation_error("cannot write '" + tmp.string() + "'");
            out << content;
            out.flush();
            if (!out)
                throw simulation_error("write failed for '" + tmp.string() + "'");
        }
        std::filesystem::rename(tmp, path);
    }

    std::string grid_csv(const CoverageGrid &grid)
    {
        std::string s = "x_m,y_m,z_m,power_dbm\n";
        for (std::size_t i = 0; i < grid.points.size(); ++i)
        {
            const Vec3 &p = grid.points[i];
            s += format_fixed(p.x, 3) + ',' + format_fixed(p.y, 3) + ',' + format_fixed(p.z, 3) + ',' +
                 format_fixed(grid.power_dbm[i], 2) + '\n';
        }
        return s;
    }

    static std::string threshold_label(double t)
    {
        std::ostringstream ss;
        ss << t;
        return ss.str();
    }

    std::string stats_csv(const CoverageGrid &grid, const CoverageGrid *baseline)
    {
        const CoverageStats st = coverage_stats(grid);
        std::string s = "metric,value\n";
        auto row = [&](const std::string &name, const std::string &value)
        { s += name + ',' + value + '\n'; };

        row("mean_dbm_db_domain", format_fixed(st.mean_dbm_db_domain, 2));
        row("mean_dbm_linear_domain", format_fixed(st.mean_dbm_linear_domain, 2));
        row("min_dbm", format_fixed(st.min_dbm, 2));
        for (const auto &[t, rate] : st.coverage_rate)
            row("rate_at_" + threshold_label(t), format_fixed(rate, 2));
        row("points", std::to_string(grid.points.size()));
        row("non_finite_points", std::to_string(st.non_finite_points));
        row("far_field_points", std::to_string(grid.far_field_points));

        if (baseline)
        {
            const CoverageStats bs = coverage_stats(*baseline);
            row("baseline_mean_dbm_db_domain", format_fixed(bs.mean_dbm_db_domain, 2));
            row("baseline_mean_dbm_linear_domain", format_fixed(bs.mean_dbm_linear_domain, 2));
            row("baseline_min_dbm", format_fixed(bs.min_dbm, 2));
            for (const auto &[t, rate] : bs.coverage_rate)
                row("baseline_rate_at_" + threshold_label(t), format_fixed(rate, 2));
            const MeanGain g = mean_gain(grid, *baseline);
            row("mean_gain_db", format_fixed(g.gain_db, 2));
            row("mean_gain_excluded_points", std::to_string(g.excluded));
        }
        return s;
    }

    std::string cdf_csv(const Cdf &c)
    {
        std::string s = "power_dbm,probability\n";
        for (const auto &[v, p] : c)
            s += format_fixed(v, 2) + ',' + format_fixed(p, 6) + '\n';
        return s;
    }

    std::string pdp_csv(const Pdp &pdp)
    {
        std::string s = "delay_ns,power_dbm,tag\n";
        for (const auto &b : pdp)
            s += format_fixed(b.delay_s * 1e9, 4) + ',' + format_fixed(b.power_dbm, 2) + ',' +
                 (b.tag == PathTag::ris ? "ris" : "conventional") + '\n';
        return s;
    }

    std::string sweep_csv(const SweepResult &sweep)
    {
        std::string s = "theta_deg,power_dbm\n";
        for (const auto &x : sweep.samples)
            s += format_fixed(x.theta_deg, 4) + ',' + format_fixed(x.power_dbm, 2) + '\n';
        return s;
    }

    std::string lobes_csv(const std::vector<Lobe> &lobes)
    {
        std::string s = "rank,theta_deg,power_dbm,relative_db\n";
        for (std::size_t i = 0; i < lobes.size(); ++i)
            s += std::to_string(i + 1) + ',' + format_fixed(lobes[i].theta_deg, 4) + ',' +
                 format_fixed(lobes[i].power_dbm, 2) + ',' + format_fixed(lobes[i].power_dbm - lobes[0].power_dbm, 2) + '\n';
        return s;
    }

    // ------------------------------------------------------------------------

    namespace
    {
        struct Overrides
        {
            std::string config_path;
            std::optional<double> freq;
            std::optional<double> pt;
            std::optional<std::string> mode;
            std::optional<std::string> out;
            std::optional<unsigned> workers;
            std::optional<std::string> ms;
        };

        void add_common_options(CLI::App *sub, Overrides &o)
        {
            sub->add_option("--config", o.config_path, "Scenario config (JSON) or a run manifest")->required();
            sub->add_option("--freq", o.freq, "Carrier frequency override (Hz)");
            sub->add_option("--pt", o.pt, "Transmit power override (dBm)");
            sub->add_option("--mode", o.mode, "RIS mode override: none | fixed | ms_specific");
            sub->add_option("--out", o.out, "Output directory override");
            sub->add_option("--workers", o.workers, "Parallel workers for grid sweeps")->check(CLI::PositiveNumber);
        }

        Vec3 parse_point(const std::string &text)
        {
            std::vector<double> v;
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ','))
            {
                std::size_t used = 0;
                double d = 0.0;
                try
                {
                    d = std::stod(item, &used);
                }
                catch (const std::exception &)
                {
                    used = 0;
                }
                if (used == 0 || used != item.size())
                    throw CLI::ValidationError("--ms", "expected x,y,z");
                v.push_back(d);
            }
            if (v.size() != 3)
                throw CLI::ValidationError("--ms", "expected x,y,z");
            return {v[0], v[1], v[2]};
        }

        struct Run
        {
            ScenarioConfig config;
            Scene scene;
            std::filesystem::path out_dir;
            std::vector<std::string> outputs;
            json notes = json::array();
        };

        class ConfigFailure : public std::runtime_error
        {
        public:
            using std::runtime_error::runtime_error;
        };

        Run prepare(const Overrides &o)
        {
            Run run;
            try
            {
                run.config = load_config_file(o.config_path);
                if (o.freq)
                    run.config.frequency_hz = *o.freq;
                if (o.pt)
                    run.config.pt_dbm = *o.pt;
                if (o.mode)
                    run.config.mode = ris_mode_from_string(*o.mode);
                if (o.out)
                    run.config.output_dir = *o.out;
                if (o.workers)
                    run.config.workers = *o.workers;
                run.config.validate();
                run.scene = scene_from_json(run.config.scene_document);
            }
            catch (const parse_error &e)
            {
                throw ConfigFailure(e.what());
            }
            catch (const validation_error &e)
            {
                throw ConfigFailure(e.what());
            }
            run.out_dir = run.config.output_dir;
            return run;
        }

        void emit(Run &run, const std::string &name, const std::string &content)
        {
            write_file_atomic(run.out_dir / name, content);
            run.outputs.push_back(name);
        }

        void write_manifest(Run &run, const std::string &command, double wall_time_s)
        {
            json m;
            m["tool"] = tool_name;
            m["version"] = tool_version;
            m["command"] = command;
            m["config"] = run.config.to_json();
            m["outputs"] = run.outputs;
            m["notes"] = run.notes;
            m["wall_time_s"] = wall_time_s;
            write_file_atomic(run.out_dir / "manifest.json", m.dump(2) + "\n");
        }

        LinkSetup link_setup(const ScenarioConfig &c)
        {
            LinkSetup s;
            s.bs = c.bs;
            s.mode = c.mode;
            s.carrier = c.carrier();
            s.trace = c.trace;
            s.cascade = c.cascade;
            if (c.ris && c.mode != RisMode::none)
                s.panel = c.ris->resolve(s.carrier);
            if (c.anchor)
                s.anchor = *c.anchor;
            return s;
        }

        void warn_far_field(Run &run, std::ostream &err, std::size_t count, const std::string &what)
        {
            if (count == 0 || run.config.cascade.far_field != FarFieldPolicy::warn)
                return;
            const std::string msg = std::to_string(count) + " " + what + " inside the RIS far-field distance";
            err << "warning: " << msg << "\n";
            run.notes.push_back(msg);
        }

        void run_coverage(Run &run, std::ostream &out, std::ostream &err)
        {
            const auto &c = run.config;
            if (!c.area)
                throw ConfigFailure("field 'area' is required for coverage");

            CoverageRequest req;
            req.link = link_setup(c);
            req.area = *c.area;
            req.pt_dbm = c.pt_dbm;
            req.summation = c.summation;
            req.workers = c.workers;

            const CoverageGrid grid = compute_coverage(run.scene, req);
            warn_far_field(run, err, grid.far_field_points, "grid points have RIS legs");

            std::filesystem::create_directories(run.out_dir);
            emit(run, "grid.csv", grid_csv(grid));
            if (c.mode != RisMode::none)
            {
                const CoverageGrid base = grid.baseline();
                emit(run, "baseline_grid.csv", grid_csv(base));
                emit(run, "stats.csv", stats_csv(grid, &base));
            }
            else
                emit(run, "stats.csv", stats_csv(grid, nullptr));
            emit(run, "cdf.csv", cdf_csv(cdf(grid)));

            const CoverageStats st = coverage_stats(grid);
            out << "coverage: " << grid.points.size() << " points, mean " << format_fixed(st.mean_dbm_db_domain, 2)
                << " dBm, min " << format_fixed(st.min_dbm, 2) << " dBm, rate@-105 "
                << format_fixed(st.coverage_rate.at(min_service_threshold_dbm), 1) << "%\n";
        }

        void run_pdp(Run &run, const Overrides &o, std::ostream &out, std::ostream &err)
        {
            const auto &c = run.config;
            std::optional<Vec3> ms = c.pdp_ms;
            if (o.ms)
                ms = parse_point(*o.ms);
            if (!ms)
                throw ConfigFailure("pdp needs --ms x,y,z or field 'pdp.ms'");
            run.config.pdp_ms = ms;

            const LinkEvaluator evaluator(run.scene, link_setup(c));
            const LinkResult r = evaluator.evaluate(*ms);
            warn_far_field(run, err, r.far_field_violations, "RIS legs are");
            const Pdp pdp = power_delay_profile(r.sample, c.pt_dbm);

            std::filesystem::create_directories(run.out_dir);
            emit(run, "pdp.csv", pdp_csv(pdp));

            double best_conv = minus_infinity_dbm, best_ris = minus_infinity_dbm;
            for (const auto &b : pdp)
                (b.tag == PathTag::ris ? best_ris : best_conv) = std::max(b.tag == PathTag::ris ? best_ris : best_conv, b.power_dbm);
            out << "pdp: " << pdp.size() << " paths, total " << format_fixed(total_rx_power(r.sample, c.pt_dbm, c.summation), 2)
                << " dBm, strongest conventional " << format_fixed(best_conv, 2) << " dBm, strongest ris "
                << format_fixed(best_ris, 2) << " dBm\n";
        }

        void run_chamber(Run &run, std::ostream &out)
        {
            const auto &c = run.config;
            if (!c.ris)
                throw ConfigFailure("field 'ris' is required for chamber");

            ChamberSetup setup;
            setup.carrier = c.carrier();
            setup.panel = c.ris->resolve(setup.carrier);
            setup.tx_distance = c.chamber.tx_distance;
            setup.rx_distance = c.chamber.rx_distance;
            setup.pt_dbm = c.pt_dbm;
            setup.theta_min_deg = c.chamber.theta_min_deg;
            setup.theta_max_deg = c.chamber.theta_max_deg;
            setup.step_deg = c.chamber.step_deg;
            setup.rx_pattern_q = c.chamber.rx_pattern_q;
            setup.phase_model = c.cascade.phase_model;

            const double steer = c.chamber.steer_deg * pi / 180.0;
            const Vec3 target = std::cos(steer) * setup.panel.normal + std::sin(steer) * setup.panel.x_axis;
            setup.config = design_phases(setup.panel, setup.panel.normal, target, setup.carrier.wavelength_m);

            SweepResult sweep;
            std::vector<Lobe> lobes;
            try
            {
                sweep = chamber_sweep(setup);
                lobes = extract_lobes(sweep, c.chamber.lobes);
            }
            catch (const validation_error &e)
            {
                throw ConfigFailure(e.what());
            }

            std::filesystem::create_directories(run.out_dir);
            emit(run, "sweep.csv", sweep_csv(sweep));
            emit(run, "lobes.csv", lobes_csv(lobes));
            out << "chamber: " << sweep.samples.size() << " samples, primary lobe " << format_fixed(lobes[0].power_dbm, 2)
                << " dBm at " << format_fixed(lobes[0].theta_deg, 2) << " deg\n";
        }

        int run_ffcheck(Run &run, std::ostream &out, std::ostream &err)
        {
            const auto &c = run.config;
            if (!c.ris)
                throw ConfigFailure("field 'ris' is required for ffcheck");
            const Carrier carrier = c.carrier();
            const RisPanel panel = c.ris->resolve(carrier);
            const double limit = c.cascade.far_field_factor * fraunhofer_distance(panel, carrier.wavelength_m);

            std::vector<std::pair<std::string, double>> links;
            links.emplace_back("bs_to_ris", distance(c.bs, panel.center));
            if (c.anchor)
                links.emplace_back("ris_to_anchor", distance(panel.center, *c.anchor));
            if (c.area)
            {
                double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
                for (const auto &p : c.area->lattice())
                {
                    lo = std::min(lo, distance(panel.center, p));
                    hi = std::max(hi, distance(panel.center, p));
                }
                links.emplace_back("ris_to_area_nearest", lo);
                links.emplace_back("ris_to_area_farthest", hi);
            }

            std::string csv = "link,distance_m,fraunhofer_m,far_field\n";
            std::size_t failing = 0;
            for (const auto &[name, d] : links)
            {
                const bool ok = d >= limit;
                failing += ok ? 0 : 1;
                csv += name + ',' + format_fixed(d, 3) + ',' + format_fixed(limit, 3) + ',' + (ok ? "yes" : "no") + '\n';
            }

            std::filesystem::create_directories(run.out_dir);
            emit(run, "ffcheck.csv", csv);
            out << "ffcheck: far-field distance " << format_fixed(limit, 2) << " m, " << failing << " of " << links.size()
                << " links inside it\n";
            if (failing > 0 && c.cascade.far_field == FarFieldPolicy::strict)
            {
                err << "error: " << failing << " links violate the far-field distance (strict policy)\n";
                return exit_runtime;
            }
            warn_far_field(run, err, failing, "links are");
            return exit_ok;
        }
    }

    int dispatch(std::span<const std::string> args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Ray-based RIS coverage simulator", tool_name};
        app.require_subcommand(1);
        app.set_version_flag("--version", tool_version);

        Overrides o;
        auto *coverage = app.add_subcommand("coverage", "Grid sweep: grid.csv, stats.csv, cdf.csv");
        auto *pdp = app.add_subcommand("pdp", "Power delay profile at one MS: pdp.csv");
        auto *chamber = app.add_subcommand("chamber", "Angular sweep at normal incidence: sweep.csv, lobes.csv");
        auto *ffcheck = app.add_subcommand("ffcheck", "Far-field distance check: ffcheck.csv");
        for (auto *sub : {coverage, pdp, chamber, ffcheck})
            add_common_options(sub, o);
        pdp->add_option("--ms", o.ms, "MS position x,y,z (m)");

        try
        {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
            if (o.ms)
                parse_point(*o.ms);
        }
        catch (const CLI::CallForHelp &)
        {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::CallForVersion &)
        {
            out << tool_version << "\n";
            return exit_ok;
        }
        catch (const CLI::ParseError &e)
        {
            err << "error: " << e.what() << "\n\n"
                << app.help();
            return exit_usage;
        }

        const std::string command = app.get_subcommands().front()->get_name();
        const auto start = std::chrono::steady_clock::now();
        try
        {
            Run run = prepare(o);
            int code = exit_ok;
            if (command == "coverage")
                run_coverage(run, out, err);
            else if (command == "pdp")
                run_pdp(run, o, out, err);
            else if (command == "chamber")
                run_chamber(run, out);
            else
                code = run_ffcheck(run, out, err);
            const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            write_manifest(run, command, elapsed);
            return code;
        }
        catch (const ConfigFailure &e)
        {
            err << "config error: " << e.what() << "\n";
            return exit_config;
        }
        catch (const std::exception &e)
        {
            err << "runtime error: " << e.what() << "\n";
            return exit_runtime;
        }
    }
}
