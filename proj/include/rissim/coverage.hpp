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

#ifndef RISSIM_COVERAGE_HPP
#define RISSIM_COVERAGE_HPP

#include "rissim/channel.hpp"
#include "rissim/ris.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rissim
{
    // Rectangular MS lattice: origin + (i res, j res) for i < ceil(extent_x / res), j < ceil(extent_y / res),
    // at height origin.z + ms_height
    struct AreaSpec
    {
        Vec3 origin;
        double extent_x = 0.0;
        double extent_y = 0.0;
        double resolution = 2.0;
        double ms_height = 1.5;

        void validate() const;
        std::size_t count_x() const;
        std::size_t count_y() const;
        std::vector<Vec3> lattice() const; // y outer, x inner
    };

    enum class RisMode
    {
        none,
        fixed,
        ms_specific
    };

    RisMode ris_mode_from_string(const std::string &name);
    std::string to_string(RisMode mode);

    // Everything needed to evaluate the channel from one BS to an arbitrary MS
    struct LinkSetup
    {
        Vec3 bs;
        std::optional<RisPanel> panel;
        RisMode mode = RisMode::none;
        Vec3 anchor;                  // design location in fixed mode
        Carrier carrier;
        TraceOptions trace;
        CascadeOptions cascade;
    };

    struct LinkResult
    {
        ChannelSample sample;
        // Cascade magnitude of this MS's strongest (BS->RIS, RIS->MS) pair under the configuration in use; 0 without RIS
        double designed_pair_magnitude = 0.0;
        std::size_t far_field_violations = 0;
    };

    // Traces the BS->panel legs and, in fixed mode, designs the anchor configuration once.
    // Immutable afterwards; evaluate() may be called concurrently.
    class LinkEvaluator
    {
    public:
        LinkEvaluator(const Scene &scene, LinkSetup setup);

        LinkResult evaluate(const Vec3 &ms) const;

        const LinkSetup &setup() const { return setup_; }
        const std::optional<RisConfig> &fixed_config() const { return fixed_config_; }

    private:
        const Scene &scene_;
        LinkSetup setup_;
        std::vector<PropagationPath> legs_a_;
        std::optional<RisConfig> fixed_config_;
    };

    struct CoveragePoint
    {
        double power_dbm = 0.0;     // total RX power per the summation mode
        double baseline_dbm = 0.0;  // conventional paths only
        Complex ris_total;          // sum of RIS path amplitudes
        double designed_pair_magnitude = 0.0;
        std::size_t conventional_paths = 0;
        std::size_t ris_paths = 0;
    };

    struct CoverageGrid
    {
        AreaSpec area;
        std::vector<Vec3> points;
        std::vector<double> power_dbm;
        std::vector<CoveragePoint> detail;
        RisMode mode = RisMode::none;
        unsigned ris_nx = 0, ris_ny = 0;
        double frequency_hz = 0.0;
        std::size_t far_field_points = 0; // points with at least one leg inside the far-field distance

        // The same lattice with the no-RIS powers
        CoverageGrid baseline() const;
    };

    struct CoverageRequest
    {
        LinkSetup link;
        AreaSpec area;
        double pt_dbm = 30.0;
        Summation summation = Summation::coherent;
        unsigned workers = 1;
    };

    CoverageGrid compute_coverage(const Scene &scene, const CoverageRequest &request);

    // Empirical CDF as (value, P[X <= value]) at each distinct value; -inf sorts first
    using Cdf = std::vector<std::pair<double, double>>;
    Cdf cdf(std::span<const double> values_dbm);
    Cdf cdf(const CoverageGrid &grid);
    double cdf_at(const Cdf &c, double value);

    // Percentage of points strictly above the threshold
    double coverage_rate(std::span<const double> values_dbm, double threshold_dbm);
    double coverage_rate(const CoverageGrid &grid, double threshold_dbm);

    struct MeanGain
    {
        double gain_db = 0.0;
        std::size_t excluded = 0; // points that are -inf in either grid
    };

    // dB-domain mean difference over points finite in both grids; throws validation_error on lattice mismatch
    MeanGain mean_gain(const CoverageGrid &with_ris, const CoverageGrid &without_ris);

    struct CoverageStats
    {
        Cdf cdf;
        std::map<double, double> coverage_rate; // threshold -> percent
        double mean_dbm_db_domain = 0.0;        // over finite points
        double mean_dbm_linear_domain = 0.0;    // mean of mW values, -inf points count as 0 mW
        double min_dbm = 0.0;
        std::size_t non_finite_points = 0;
    };

    inline constexpr double min_service_threshold_dbm = -105.0;
    inline constexpr double high_throughput_threshold_dbm = -80.0;

    // {-105, -80} dBm
    std::span<const double> default_thresholds();

    CoverageStats coverage_stats(const CoverageGrid &grid,
                                 std::span<const double> thresholds_dbm = default_thresholds());
}

#endif
