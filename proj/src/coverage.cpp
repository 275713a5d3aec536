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

#include "rissim/coverage.hpp"
#include "rissim/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace rissim
{
    void AreaSpec::validate() const
    {
        if (!(extent_x > 0.0) || !std::isfinite(extent_x))
            throw validation_error("area.extent_x must be > 0");
        if (!(extent_y > 0.0) || !std::isfinite(extent_y))
            throw validation_error("area.extent_y must be > 0");
        if (!(resolution > 0.0) || !std::isfinite(resolution))
            throw validation_error("area.resolution must be > 0");
        if (!std::isfinite(ms_height))
            throw validation_error("area.ms_height must be finite");
    }

    // The 1e-9 slack keeps 1.1 / 0.1 from rounding up to 12 points
    static std::size_t lattice_count(double extent, double res)
    {
        return static_cast<std::size_t>(std::max(1.0, std::ceil(extent / res - 1e-9)));
    }

    std::size_t AreaSpec::count_x() const { return lattice_count(extent_x, resolution); }
    std::size_t AreaSpec::count_y() const { return lattice_count(extent_y, resolution); }

    std::vector<Vec3> AreaSpec::lattice() const
    {
        validate();
        std::vector<Vec3> pts;
        pts.reserve(count_x() * count_y());
        for (std::size_t j = 0; j < count_y(); ++j)
            for (std::size_t i = 0; i < count_x(); ++i)
                pts.push_back({origin.x + static_cast<double>(i) * resolution,
                               origin.y + static_cast<double>(j) * resolution,
                               origin.z + ms_height});
        return pts;
    }

    RisMode ris_mode_from_string(const std::string &name)
    {
        if (name == "none")
            return RisMode::none;
        if (name == "fixed")
            return RisMode::fixed;
        if (name == "ms_specific")
            return RisMode::ms_specific;
        throw validation_error("unknown mode '" + name + "' (expected none, fixed or ms_specific)");
    }

    std::string to_string(RisMode mode)
    {
        switch (mode)
        {
        case RisMode::none:
            return "none";
        case RisMode::fixed:
            return "fixed";
        case RisMode::ms_specific:
            return "ms_specific";
        }
        return "unknown";
    }

    // ------------------------------------------------------------------------

    static std::vector<PathContribution> with_amplitudes(std::vector<PropagationPath> paths, const Carrier &carrier,
                                                         const Scene &scene)
    {
        std::vector<PathContribution> out;
        out.reserve(paths.size());
        for (auto &p : paths)
        {
            const Complex a = path_amplitude(p, carrier, scene);
            out.push_back({std::move(p), a});
        }
        return out;
    }

    LinkEvaluator::LinkEvaluator(const Scene &scene, LinkSetup setup)
        : scene_(scene), setup_(std::move(setup))
    {
        if (setup_.mode == RisMode::none)
            return;
        if (!setup_.panel)
            throw validation_error("mode '" + to_string(setup_.mode) + "' requires a RIS panel");
        setup_.panel->validate();

        legs_a_ = trace_paths(scene_, setup_.bs, setup_.panel->center, setup_.trace);

        if (setup_.mode == RisMode::fixed)
        {
            const auto legs_b = trace_paths(scene_, setup_.panel->center, setup_.anchor, setup_.trace);
            const auto pick = strongest_pair(scene_, legs_a_, legs_b, *setup_.panel, setup_.carrier);
            if (!pick)
                throw simulation_error("fixed configuration: no illuminated BS->RIS->anchor pair");
            fixed_config_ = design_for_pair(*setup_.panel, legs_a_[pick->a], legs_b[pick->b], setup_.carrier.wavelength_m);
            fixed_config_->mode = ConfigMode::fixed;
            fixed_config_->anchor = setup_.anchor;
        }
    }

    LinkResult LinkEvaluator::evaluate(const Vec3 &ms) const
    {
        LinkResult r;
        auto conventional = with_amplitudes(trace_paths(scene_, setup_.bs, ms, setup_.trace), setup_.carrier, scene_);
        std::vector<PathContribution> ris;

        if (setup_.mode != RisMode::none)
        {
            const RisPanel &panel = *setup_.panel;
            const auto legs_b = trace_paths(scene_, panel.center, ms, setup_.trace);
            const auto pick = strongest_pair(scene_, legs_a_, legs_b, panel, setup_.carrier);
            if (pick)
            {
                RisConfig cfg;
                if (setup_.mode == RisMode::fixed)
                    cfg = *fixed_config_;
                else
                {
                    cfg = design_for_pair(panel, legs_a_[pick->a], legs_b[pick->b], setup_.carrier.wavelength_m);
                    cfg.mode = ConfigMode::ms_specific;
                }

                auto cascade = ris_cascade(scene_, legs_a_, legs_b, panel, cfg, setup_.carrier, setup_.cascade);
                r.far_field_violations = cascade.far_field_violations;
                ris = std::move(cascade.paths);

                const auto designed = ris_cascade(scene_, std::span(&legs_a_[pick->a], 1), std::span(&legs_b[pick->b], 1),
                                                  panel, cfg, setup_.carrier, {setup_.cascade.phase_model, FarFieldPolicy::ignore, 1.0});
                r.designed_pair_magnitude = designed.paths.empty() ? 0.0 : std::abs(designed.paths.front().amplitude);
            }
        }

        r.sample = compose_channel(std::move(conventional), std::move(ris), setup_.carrier);
        r.sample.bs = setup_.bs;
        r.sample.ms = ms;
        return r;
    }

    // ------------------------------------------------------------------------

    CoverageGrid CoverageGrid::baseline() const
    {
        CoverageGrid g;
        g.area = area;
        g.points = points;
        g.mode = RisMode::none;
        g.frequency_hz = frequency_hz;
        g.power_dbm.reserve(detail.size());
        g.detail.reserve(detail.size());
        for (const auto &d : detail)
        {
            g.power_dbm.push_back(d.baseline_dbm);
            CoveragePoint p;
            p.power_dbm = p.baseline_dbm = d.baseline_dbm;
            p.conventional_paths = d.conventional_paths;
            g.detail.push_back(p);
        }
        return g;
    }

    CoverageGrid compute_coverage(const Scene &scene, const CoverageRequest &request)
    {
        request.area.validate();
        if (!std::isfinite(request.pt_dbm))
            throw validation_error("pt_dbm must be finite");
        if (request.link.mode != RisMode::none && !request.link.panel)
            throw validation_error("mode '" + to_string(request.link.mode) + "' requires a RIS panel");

        const LinkEvaluator evaluator(scene, request.link);

        CoverageGrid grid;
        grid.area = request.area;
        grid.points = request.area.lattice();
        grid.mode = request.link.mode;
        grid.frequency_hz = request.link.carrier.frequency_hz;
        if (request.link.mode != RisMode::none)
        {
            grid.ris_nx = request.link.panel->nx;
            grid.ris_ny = request.link.panel->ny;
        }

        const std::size_t n = grid.points.size();
        grid.detail.resize(n);
        std::vector<std::size_t> ff(n, 0);

        auto work = [&](std::size_t i)
        {
            const LinkResult r = evaluator.evaluate(grid.points[i]);
            CoveragePoint &p = grid.detail[i];
            p.power_dbm = total_rx_power(r.sample, request.pt_dbm, request.summation);
            ChannelSample base = r.sample;
            base.ris_paths.clear();
            p.baseline_dbm = total_rx_power(base, request.pt_dbm, request.summation);
            p.ris_total = r.sample.ris_total();
            p.designed_pair_magnitude = r.designed_pair_magnitude;
            p.conventional_paths = r.sample.conventional_paths.size();
            p.ris_paths = r.sample.ris_paths.size();
            ff[i] = r.far_field_violations;
        };

        const unsigned workers = std::max(1u, std::min<unsigned>(request.workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
        if (workers == 1)
        {
            for (std::size_t i = 0; i < n; ++i)
                work(i);
        }
        else
        {
            std::atomic<std::size_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&]
                                  {
                    for (std::size_t i = next++; i < n; i = next++)
                    {
                        try
                        {
                            work(i);
                        }
                        catch (...)
                        {
                            std::lock_guard lock(failure_mutex);
                            if (!failure)
                                failure = std::current_exception();
                            next = n;
                        }
                    } });
            for (auto &t : pool)
                t.join();
            if (failure)
                std::rethrow_exception(failure);
        }

        grid.power_dbm.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            grid.power_dbm.push_back(grid.detail[i].power_dbm);
            if (ff[i] > 0)
                ++grid.far_field_points;
        }
        return grid;
    }

    // ------------------------------------------------------------------------
    // Statistics

    Cdf cdf(std::span<const double> values)
    {
        if (values.empty())
            throw validation_error("cdf: empty grid");
        std::vector<double> sorted(values.begin(), values.end());
        std::sort(sorted.begin(), sorted.end());
        Cdf out;
        const double total = static_cast<double>(sorted.size());
        for (std::size_t i = 0; i < sorted.size(); ++i)
        {
            if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i])
                continue;
            out.emplace_back(sorted[i], static_cast<double>(i + 1) / total);
        }
        return out;
    }

    Cdf cdf(const CoverageGrid &grid)
    {
        return cdf(grid.power_dbm);
    }

    double cdf_at(const Cdf &c, double value)
    {
        double p = 0.0;
        for (const auto &[v, prob] : c)
        {
            if (v > value)
                break;
            p = prob;
        }
        return p;
    }

    double coverage_rate(std::span<const double> values, double threshold)
    {
        if (values.empty())
            throw validation_error("coverage_rate: empty grid");
        const auto above = std::count_if(values.begin(), values.end(), [&](double v)
                                         { return v > threshold; });
        return 100.0 * static_cast<double>(above) / static_cast<double>(values.size());
    }

    double coverage_rate(const CoverageGrid &grid, double threshold)
    {
        return coverage_rate(grid.power_dbm, threshold);
    }

    MeanGain mean_gain(const CoverageGrid &with_ris, const CoverageGrid &without_ris)
    {
        if (with_ris.points != without_ris.points || with_ris.power_dbm.size() != without_ris.power_dbm.size())
            throw validation_error("mean_gain: grids use different lattices");
        MeanGain g;
        double sum_with = 0.0, sum_without = 0.0;
        std::size_t used = 0;
        for (std::size_t i = 0; i < with_ris.power_dbm.size(); ++i)
        {
            const double a = with_ris.power_dbm[i], b = without_ris.power_dbm[i];
            if (!std::isfinite(a) || !std::isfinite(b))
            {
                ++g.excluded;
                continue;
            }
            sum_with += a;
            sum_without += b;
            ++used;
        }
        g.gain_db = used > 0 ? (sum_with - sum_without) / static_cast<double>(used) : 0.0;
        return g;
    }

    std::span<const double> default_thresholds()
    {
        static constexpr double thresholds[] = {min_service_threshold_dbm, high_throughput_threshold_dbm};
        return thresholds;
    }

    CoverageStats coverage_stats(const CoverageGrid &grid, std::span<const double> thresholds)
    {
        CoverageStats s;
        s.cdf = cdf(grid);
        for (double t : thresholds)
            s.coverage_rate[t] = coverage_rate(grid, t);

        double sum_db = 0.0, sum_mw = 0.0;
        std::size_t finite = 0;
        s.min_dbm = grid.power_dbm.front();
        for (double v : grid.power_dbm)
        {
            s.min_dbm = std::min(s.min_dbm, v);
            if (std::isfinite(v))
            {
                sum_db += v;
                sum_mw += dbm_to_mw(v);
                ++finite;
            }
        }
        s.non_finite_points = grid.power_dbm.size() - finite;
        s.mean_dbm_db_domain = finite > 0 ? sum_db / static_cast<double>(finite) : minus_infinity_dbm;
        s.mean_dbm_linear_domain = mw_to_dbm(sum_mw / static_cast<double>(grid.power_dbm.size()));
        return s;
    }
}
