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

#ifndef RISSIM_RIS_HPP
#define RISSIM_RIS_HPP

#include "rissim/em.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rissim
{
    // Unit-cell scattering functions (square root of the cell RCS, in meters)
    enum class ScatteringModel
    {
        tang2020,  // [dx dy G F(ti) F(ts)]^(1/2), F = cos^alpha, G = 2(alpha+1)
        tang2022,  // (4 pi cos ti cos ts)^(1/2) dx dy / lambda
        ellingson  // G lambda [F(ti) F(ts) / (4 pi)]^(1/2), F = cos^alpha, G = 2(alpha+1)
    };

    ScatteringModel scattering_model_from_string(const std::string &name);
    std::string to_string(ScatteringModel model);

    struct RisPanel
    {
        Vec3 center;
        Vec3 normal{1.0, 0.0, 0.0};  // unit, points into the illuminated half-space
        Vec3 x_axis{0.0, 1.0, 0.0};  // unit, in the panel plane; cells run fastest along it
        unsigned nx = 1, ny = 1;
        double dx = 0.0, dy = 0.0;   // cell pitch (m)
        double amplitude = 1.0;      // |Gamma_uc| = A, shared by every cell
        ScatteringModel model = ScatteringModel::tang2022;
        double alpha = 1.0;          // tang2020 / ellingson only

        std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
        Vec3 y_axis() const { return cross(normal, x_axis); }

        // Throws validation_error on a broken invariant
        void validate() const;
    };

    enum class ConfigMode
    {
        fixed,
        ms_specific
    };

    struct RisConfig
    {
        std::vector<double> beta; // per-cell phase in [0, 2 pi), row-major with x fastest
        ConfigMode mode = ConfigMode::fixed;
        Vec3 anchor;              // location the phases were designed for
    };

    // Cell centers on a centered rectangular lattice, row-major (x fastest)
    std::vector<Vec3> uc_positions(const RisPanel &panel);

    // Angles in [0, pi/2]; throws validation_error outside that range or for alpha < 0
    double uc_scattering(ScatteringModel model, double theta_i, double theta_s, double wavelength,
                         double dx, double dy, double alpha);

    // [dx dy G cos^alpha(ti) cos^alpha(ts)]^(1/2) with a free gain G; no range checks
    double tang2020_scattering(double theta_i, double theta_s, double dx, double dy, double alpha, double gain);

    // 2 D^2 / lambda with D the panel diagonal
    double fraunhofer_distance(const RisPanel &panel, double wavelength);

    // Phases that bring every cell's cascade term to the same total phase for a plane wave arriving
    // from `incident_dir` and leaving toward `target_dir` (both unit vectors pointing away from the panel).
    // Throws validation_error when either direction is behind the panel.
    RisConfig design_phases(const RisPanel &panel, const Vec3 &incident_dir, const Vec3 &target_dir,
                            double wavelength);

    // Omega(n,n) = g_uc * A * exp(j beta(n)), g_uc shared by all cells
    std::vector<Complex> omega_entries(const RisPanel &panel, const RisConfig &config,
                                       double theta_i, double theta_s, double wavelength);

    enum class PhaseModel
    {
        plane_wave,    // per-cell phase from the plane-wave offset (u_i + u_s) . r_n
        exact_distance // per-cell phase from exact distances to the unfolded source and target points
    };

    enum class FarFieldPolicy
    {
        ignore,
        warn,
        strict
    };

    struct CascadeOptions
    {
        PhaseModel phase_model = PhaseModel::plane_wave;
        FarFieldPolicy far_field = FarFieldPolicy::warn;
        double far_field_factor = 1.0; // a leg is in the far field when its length >= factor * 2 D^2 / lambda
    };

    struct CascadeResult
    {
        std::vector<PathContribution> paths; // tagged PathTag::ris
        std::size_t far_field_violations = 0; // legs shorter than the far-field distance
    };

    // BS -> panel center legs `paths_a` and panel center -> MS legs `paths_b` combined pairwise:
    //   a = lambda / ((4 pi)^(3/2) d_a d_b) exp(-j 2 pi (d_a + d_b) / lambda) Gamma_a Gamma_b sum_n Omega(n,n) exp(j phi_n)
    // Pairs whose incident or scattered direction lies behind the panel contribute nothing.
    CascadeResult ris_cascade(const Scene &scene, std::span<const PropagationPath> paths_a,
                              std::span<const PropagationPath> paths_b, const RisPanel &panel,
                              const RisConfig &config, const Carrier &carrier, const CascadeOptions &options = {});

    struct PairChoice
    {
        std::size_t a = 0, b = 0;
        double magnitude = 0.0; // cascade magnitude under the configuration designed for this pair
    };

    // The (a, b) pair with the largest cascade magnitude under its own optimal configuration;
    // ties go to the shortest combined length. Empty when no pair illuminates the front of the panel.
    std::optional<PairChoice> strongest_pair(const Scene &scene, std::span<const PropagationPath> paths_a,
                                             std::span<const PropagationPath> paths_b, const RisPanel &panel,
                                             const Carrier &carrier);

    // design_phases for the geometry of one traced pair
    RisConfig design_for_pair(const RisPanel &panel, const PropagationPath &leg_a, const PropagationPath &leg_b,
                              double wavelength);
}

#endif
