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

#include "rissim/ris.hpp"
#include "rissim/error.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace rissim
{
    ScatteringModel scattering_model_from_string(const std::string &name)
    {
        if (name == "tang2022")
            return ScatteringModel::tang2022;
        if (name == "tang2020")
            return ScatteringModel::tang2020;
        if (name == "ellingson")
            return ScatteringModel::ellingson;
        throw validation_error("unknown scattering model '" + name + "' (expected tang2020, tang2022 or ellingson)");
    }

    std::string to_string(ScatteringModel model)
    {
        switch (model)
        {
        case ScatteringModel::tang2020:
            return "tang2020";
        case ScatteringModel::tang2022:
            return "tang2022";
        case ScatteringModel::ellingson:
            return "ellingson";
        }
        return "unknown";
    }

    void RisPanel::validate() const
    {
        if (std::abs(norm(normal) - 1.0) > 1e-9)
            throw validation_error("ris.normal must be a unit vector");
        if (std::abs(norm(x_axis) - 1.0) > 1e-9)
            throw validation_error("ris.x_axis must be a unit vector");
        if (std::abs(dot(normal, x_axis)) > 1e-9)
            throw validation_error("ris.x_axis must be perpendicular to ris.normal");
        if (nx < 1 || ny < 1)
            throw validation_error("ris.nx and ris.ny must be >= 1");
        if (!(dx > 0.0) || !(dy > 0.0))
            throw validation_error("ris cell pitch dx, dy must be > 0");
        if (!(amplitude >= 0.0 && amplitude <= 1.0))
            throw validation_error("ris.A must lie in [0, 1]");
        if (!(alpha >= 0.0))
            throw validation_error("ris.alpha must be >= 0");
    }

    namespace
    {
        double lattice_offset(unsigned index, unsigned count)
        {
            return static_cast<double>(index) - 0.5 * static_cast<double>(count - 1);
        }

        Vec3 uc_offset(const RisPanel &panel, unsigned ix, unsigned iy)
        {
            return lattice_offset(ix, panel.nx) * panel.dx * panel.x_axis +
                   lattice_offset(iy, panel.ny) * panel.dy * panel.y_axis();
        }

        // exp(-j 2 pi d / lambda) with the cycle count reduced before scaling
        Complex propagation_phasor(double d, double wavelength)
        {
            const double cycles = d / wavelength;
            return std::polar(1.0, -2.0 * pi * (cycles - std::floor(cycles)));
        }

        double wrap_phase(double phase)
        {
            double r = std::fmod(phase, 2.0 * pi);
            if (r < 0.0)
                r += 2.0 * pi;
            if (r >= 2.0 * pi)
                r = 0.0;
            return r + 0.0; // no negative zero
        }

        // One side of a cascade as seen from the panel
        struct Leg
        {
            double length = 0.0;
            Complex gain;          // accumulated reflection / transmission factor
            Vec3 dir;              // unit, from the panel toward the far end of the leg
            double theta = 0.0;    // angle to the panel normal
            bool illuminated = false;
        };

        std::vector<Leg> prepare_legs(const Scene &scene, std::span<const PropagationPath> paths, const RisPanel &panel,
                                      const Carrier &carrier, bool incoming)
        {
            constexpr double endpoint_tol = 1e-6;
            std::vector<Leg> legs;
            legs.reserve(paths.size());
            for (const auto &p : paths)
            {
                const Vec3 &end = incoming ? p.rx : p.tx;
                if (distance(end, panel.center) > endpoint_tol)
                    throw validation_error(std::string("ris_cascade: ") + (incoming ? "BS->RIS path does not end" : "RIS->MS path does not start") +
                                           " at the panel center");
                Leg leg;
                leg.length = p.length;
                leg.dir = incoming ? -p.arrival_dir : p.departure_dir;
                leg.illuminated = dot(leg.dir, panel.normal) > 0.0;
                if (leg.illuminated)
                {
                    leg.theta = angle_between(leg.dir, panel.normal);
                    leg.gain = interaction_gain(p, carrier, scene);
                }
                legs.push_back(leg);
            }
            return legs;
        }

        // sum_n exp(j beta_n) exp(j phi_n) without the shared g_uc * A factor
        class ApertureSum
        {
        public:
            ApertureSum(const RisPanel &panel, const RisConfig &config, const Carrier &carrier, PhaseModel model)
                : panel_(panel), model_(model), k_(carrier.wavenumber()), ex_(panel.nx), ey_(panel.ny)
            {
                weights_.reserve(config.beta.size());
                for (double b : config.beta)
                    weights_.push_back(std::polar(1.0, b));
                if (model_ == PhaseModel::exact_distance)
                    positions_ = uc_positions(panel);
            }

            Complex operator()(const Leg &a, const Leg &b)
            {
                if (model_ == PhaseModel::exact_distance)
                    return exact(a, b);

                const Vec3 w = a.dir + b.dir;
                const double step_x = k_ * panel_.dx * dot(w, panel_.x_axis);
                const double step_y = k_ * panel_.dy * dot(w, panel_.y_axis());
                for (unsigned ix = 0; ix < panel_.nx; ++ix)
                    ex_[ix] = std::polar(1.0, step_x * lattice_offset(ix, panel_.nx));
                for (unsigned iy = 0; iy < panel_.ny; ++iy)
                    ey_[iy] = std::polar(1.0, step_y * lattice_offset(iy, panel_.ny));

                Complex total = 0.0;
                std::size_t n = 0;
                for (unsigned iy = 0; iy < panel_.ny; ++iy)
                {
                    Complex row = 0.0;
                    for (unsigned ix = 0; ix < panel_.nx; ++ix, ++n)
                        row += weights_[n] * ex_[ix];
                    total += row * ey_[iy];
                }
                return total;
            }

        private:
            Complex exact(const Leg &a, const Leg &b) const
            {
                const Vec3 source = panel_.center + a.length * a.dir;
                const Vec3 target = panel_.center + b.length * b.dir;
                Complex total = 0.0;
                for (std::size_t n = 0; n < positions_.size(); ++n)
                {
                    const double excess = distance(source, positions_[n]) + distance(target, positions_[n]) - a.length - b.length;
                    total += weights_[n] * std::polar(1.0, -k_ * excess);
                }
                return total;
            }

            const RisPanel &panel_;
            PhaseModel model_;
            double k_;
            std::vector<Complex> weights_;
            std::vector<Complex> ex_, ey_;
            std::vector<Vec3> positions_;
        };

        double cascade_prefactor(double wavelength, double da, double db)
        {
            return wavelength / (std::pow(4.0 * pi, 1.5) * da * db);
        }

        PropagationPath join_legs(const PropagationPath &a, const PropagationPath &b, const Vec3 &center)
        {
            PropagationPath p;
            p.tx = a.tx;
            p.rx = b.rx;
            p.interactions = a.interactions;
            p.interactions.insert(p.interactions.end(), b.interactions.begin(), b.interactions.end());
            p.ris_point = center;
            p.ris_split = a.interactions.size();
            p.length = a.length + b.length;
            p.delay = p.length / speed_of_light;
            p.departure_dir = a.departure_dir;
            p.arrival_dir = b.arrival_dir;
            p.tag = PathTag::ris;
            return p;
        }
    }

    std::vector<Vec3> uc_positions(const RisPanel &panel)
    {
        std::vector<Vec3> out;
        out.reserve(panel.size());
        for (unsigned iy = 0; iy < panel.ny; ++iy)
            for (unsigned ix = 0; ix < panel.nx; ++ix)
                out.push_back(panel.center + uc_offset(panel, ix, iy));
        return out;
    }

    double tang2020_scattering(double theta_i, double theta_s, double dx, double dy, double alpha, double gain)
    {
        const double ci = std::max(std::cos(theta_i), 0.0);
        const double cs = std::max(std::cos(theta_s), 0.0);
        return std::sqrt(dx * dy * gain * std::pow(ci * cs, alpha));
    }

    double uc_scattering(ScatteringModel model, double theta_i, double theta_s, double wavelength,
                         double dx, double dy, double alpha)
    {
        const auto in_range = [](double t)
        { return t >= 0.0 && t <= 0.5 * pi; };
        if (!in_range(theta_i) || !in_range(theta_s))
            throw validation_error("uc_scattering: angles must lie in [0, pi/2]");
        if (!(alpha >= 0.0))
            throw validation_error("uc_scattering: alpha must be >= 0");

        const double ci = std::max(std::cos(theta_i), 0.0);
        const double cs = std::max(std::cos(theta_s), 0.0);
        switch (model)
        {
        case ScatteringModel::tang2022:
            return std::sqrt(4.0 * pi * (ci * cs)) * dx * dy / wavelength;
        case ScatteringModel::tang2020:
            return tang2020_scattering(theta_i, theta_s, dx, dy, alpha, 2.0 * (alpha + 1.0));
        case ScatteringModel::ellingson:
        {
            const double gain = 2.0 * (alpha + 1.0);
            return gain * wavelength * std::sqrt(std::pow(ci * cs, alpha) / (4.0 * pi));
        }
        }
        throw validation_error("uc_scattering: unknown model");
    }

    double fraunhofer_distance(const RisPanel &panel, double wavelength)
    {
        const double wx = panel.nx * panel.dx, wy = panel.ny * panel.dy;
        return 2.0 * (wx * wx + wy * wy) / wavelength;
    }

    RisConfig design_phases(const RisPanel &panel, const Vec3 &incident_dir, const Vec3 &target_dir, double wavelength)
    {
        if (!(dot(incident_dir, panel.normal) > 0.0))
            throw validation_error("design_phases: incident direction is behind the panel");
        if (!(dot(target_dir, panel.normal) > 0.0))
            throw validation_error("design_phases: target direction is behind the panel");

        // Cell n adds phase k (u_i + u_s) . r_n on the way through; beta cancels it
        const double k = 2.0 * pi / wavelength;
        const Vec3 w = incident_dir + target_dir;
        const double step_x = k * panel.dx * dot(w, panel.x_axis);
        const double step_y = k * panel.dy * dot(w, panel.y_axis());

        RisConfig cfg;
        cfg.beta.reserve(panel.size());
        for (unsigned iy = 0; iy < panel.ny; ++iy)
            for (unsigned ix = 0; ix < panel.nx; ++ix)
                cfg.beta.push_back(wrap_phase(-(step_x * lattice_offset(ix, panel.nx) + step_y * lattice_offset(iy, panel.ny))));
        cfg.anchor = panel.center + target_dir;
        return cfg;
    }

    RisConfig design_for_pair(const RisPanel &panel, const PropagationPath &leg_a, const PropagationPath &leg_b,
                              double wavelength)
    {
        RisConfig cfg = design_phases(panel, -leg_a.arrival_dir, leg_b.departure_dir, wavelength);
        cfg.anchor = leg_b.rx;
        return cfg;
    }

    std::vector<Complex> omega_entries(const RisPanel &panel, const RisConfig &config, double theta_i, double theta_s,
                                       double wavelength)
    {
        if (config.beta.size() != panel.size())
            throw validation_error("omega_entries: configuration has " + std::to_string(config.beta.size()) +
                                   " phases for " + std::to_string(panel.size()) + " cells");
        const double g = uc_scattering(panel.model, theta_i, theta_s, wavelength, panel.dx, panel.dy, panel.alpha);
        std::vector<Complex> out;
        out.reserve(config.beta.size());
        for (double b : config.beta)
            out.push_back(std::polar(g * panel.amplitude, b));
        return out;
    }

    CascadeResult ris_cascade(const Scene &scene, std::span<const PropagationPath> paths_a,
                              std::span<const PropagationPath> paths_b, const RisPanel &panel,
                              const RisConfig &config, const Carrier &carrier, const CascadeOptions &options)
    {
        if (config.beta.size() != panel.size())
            throw validation_error("ris_cascade: configuration size does not match the panel");

        const auto legs_a = prepare_legs(scene, paths_a, panel, carrier, true);
        const auto legs_b = prepare_legs(scene, paths_b, panel, carrier, false);

        CascadeResult result;
        if (options.far_field != FarFieldPolicy::ignore)
        {
            const double limit = options.far_field_factor * fraunhofer_distance(panel, carrier.wavelength_m);
            for (const auto *legs : {&legs_a, &legs_b})
                for (const auto &leg : *legs)
                    if (leg.length < limit)
                        ++result.far_field_violations;
            if (result.far_field_violations > 0 && options.far_field == FarFieldPolicy::strict)
                throw simulation_error("ris_cascade: " + std::to_string(result.far_field_violations) +
                                       " legs are shorter than the far-field distance " + std::to_string(limit) + " m");
        }

        ApertureSum aperture(panel, config, carrier, options.phase_model);
        const double lambda = carrier.wavelength_m;
        for (std::size_t i = 0; i < legs_a.size(); ++i)
        {
            const Leg &a = legs_a[i];
            if (!a.illuminated)
                continue;
            for (std::size_t j = 0; j < legs_b.size(); ++j)
            {
                const Leg &b = legs_b[j];
                if (!b.illuminated)
                    continue;
                const double g = uc_scattering(panel.model, a.theta, b.theta, lambda, panel.dx, panel.dy, panel.alpha);
                const Complex omega_sum = g * panel.amplitude * aperture(a, b);
                const Complex amp = cascade_prefactor(lambda, a.length, b.length) *
                                    propagation_phasor(a.length + b.length, lambda) * a.gain * b.gain * omega_sum;
                result.paths.push_back({join_legs(paths_a[i], paths_b[j], panel.center), amp});
            }
        }
        return result;
    }

    std::optional<PairChoice> strongest_pair(const Scene &scene, std::span<const PropagationPath> paths_a,
                                             std::span<const PropagationPath> paths_b, const RisPanel &panel,
                                             const Carrier &carrier)
    {
        const auto legs_a = prepare_legs(scene, paths_a, panel, carrier, true);
        const auto legs_b = prepare_legs(scene, paths_b, panel, carrier, false);
        const double lambda = carrier.wavelength_m;
        const double cells = static_cast<double>(panel.size());

        std::optional<PairChoice> best;
        double best_length = 0.0;
        for (std::size_t i = 0; i < legs_a.size(); ++i)
        {
            if (!legs_a[i].illuminated)
                continue;
            for (std::size_t j = 0; j < legs_b.size(); ++j)
            {
                const Leg &a = legs_a[i], &b = legs_b[j];
                if (!b.illuminated)
                    continue;
                const double g = uc_scattering(panel.model, a.theta, b.theta, lambda, panel.dx, panel.dy, panel.alpha);
                const double mag = cascade_prefactor(lambda, a.length, b.length) * std::abs(a.gain * b.gain) *
                                   cells * g * panel.amplitude;
                const double len = a.length + b.length;
                if (!best || mag > best->magnitude || (mag == best->magnitude && len < best_length))
                {
                    best = PairChoice{i, j, mag};
                    best_length = len;
                }
            }
        }
        return best;
    }
}
