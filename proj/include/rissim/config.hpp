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

#ifndef RISSIM_CONFIG_HPP
#define RISSIM_CONFIG_HPP

#include "rissim/chamber.hpp"
#include "rissim/coverage.hpp"
#include "rissim/json_io.hpp"

#include <optional>
#include <string>

namespace rissim
{
    // Panel as written in a scenario file; cell pitch is given in wavelengths
    struct RisPanelSpec
    {
        Vec3 center;
        Vec3 normal;
        Vec3 x_axis;
        unsigned nx = 16, ny = 16;
        double dx_over_lambda = 0.5, dy_over_lambda = 0.5;
        double amplitude = 1.0;
        ScatteringModel model = ScatteringModel::tang2022;
        double alpha = 1.0;

        RisPanel resolve(const Carrier &carrier) const;
    };

    struct ChamberSpec
    {
        double tx_distance = 3.0;
        double rx_distance = 3.0;
        double theta_min_deg = 0.0;
        double theta_max_deg = 90.0;
        double step_deg = 0.01;
        std::size_t lobes = 3;
        double steer_deg = 0.0; // design target angle in the sweep plane; 0 gives the uniform configuration
        double rx_pattern_q = 0.0;
    };

    struct ScenarioConfig
    {
        json scene_document;  // inline scene (surfaces or factory block)
        double frequency_hz = 3.7e9;
        double pt_dbm = 30.0;
        Vec3 bs;
        std::optional<RisPanelSpec> ris;
        std::optional<AreaSpec> area;
        RisMode mode = RisMode::none;
        std::optional<Vec3> anchor;
        TraceOptions trace;
        Summation summation = Summation::coherent;
        CascadeOptions cascade;
        std::optional<Vec3> pdp_ms;
        ChamberSpec chamber;
        std::string output_dir = "out";
        unsigned workers = 1;

        Carrier carrier() const { return Carrier::from_frequency(frequency_hz); }

        // Checks cross-field invariants; throws validation_error naming the field
        void validate() const;

        // Self-contained echo (scene inlined) that config_from_json reads back to an identical config
        json to_json() const;
    };

    // Accepts a scenario document or a run manifest (uses its "config" member).
    // Relative scene file paths resolve against base_dir.
    ScenarioConfig config_from_json(const json &doc, const std::string &base_dir = ".");
    ScenarioConfig load_config_file(const std::string &path);
}

#endif
