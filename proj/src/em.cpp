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

#include "rissim/em.hpp"
#include "rissim/error.hpp"

#include <algorithm>

namespace rissim
{
    Complex friis_gain(double distance_m, double wavelength_m)
    {
        if (!(distance_m > 0.0))
            throw validation_error("friis_gain: distance must be > 0");
        if (!(wavelength_m > 0.0))
            throw validation_error("friis_gain: wavelength must be > 0");
        const double magnitude = wavelength_m / (4.0 * pi * distance_m);
        // Reduce the phase argument first; d/lambda can be large
        const double cycles = distance_m / wavelength_m;
        const double phase = -2.0 * pi * (cycles - std::floor(cycles));
        return std::polar(magnitude, phase);
    }

    Complex fresnel_coeff(double incidence_rad, const Material &material, double wavelength_m, Polarization pol)
    {
        const double theta = std::clamp(incidence_rad, 0.0, 0.5 * pi);
        const double frequency = speed_of_light / wavelength_m;
        const Complex eps(material.relative_permittivity,
                          -material.conductivity / (2.0 * pi * frequency * vacuum_permittivity));
        const double c = std::cos(theta), s = std::sin(theta);
        const Complex root = std::sqrt(eps - s * s);
        if (pol == Polarization::te)
            return (c - root) / (c + root);
        return (eps * c - root) / (eps * c + root);
    }

    namespace
    {
        struct CVec3
        {
            Complex x, y, z;
        };

        Complex cdot(const CVec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
        CVec3 scaled(const Vec3 &v, Complex s) { return {s * v.x, s * v.y, s * v.z}; }
        CVec3 add(const CVec3 &a, const CVec3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }

        // Unit vector transverse to k, as close to +z as possible (x axis for vertical k)
        Vec3 vertical_basis(const Vec3 &k)
        {
            const Vec3 z{0.0, 0.0, 1.0};
            Vec3 e = z - dot(z, k) * k;
            if (norm(e) < 1e-12)
            {
                const Vec3 x{1.0, 0.0, 0.0};
                e = x - dot(x, k) * k;
            }
            return normalize(e);
        }
    }

    Complex interaction_gain(const PropagationPath &path, const Carrier &carrier, const Scene &scene)
    {
        if (path.tag == PathTag::ris)
            throw validation_error("interaction_gain: expects a conventional path");

        const auto verts = path.vertices();
        const auto &surfaces = scene.surfaces();

        CVec3 field = scaled(vertical_basis(path.departure_dir), 1.0);
        Complex scalar = 1.0;
        for (std::size_t i = 0; i < path.interactions.size(); ++i)
        {
            const Interaction &it = path.interactions[i];
            if (it.surface_index >= surfaces.size())
                throw validation_error("interaction references surface " + std::to_string(it.surface_index) +
                                       " outside the scene");
            const Surface &surface = surfaces[it.surface_index];
            const Material &material = scene.material_of(surface);

            if (it.kind == InteractionKind::transmission)
            {
                scalar *= std::pow(10.0, -material.transmission_loss_db / 20.0);
                continue;
            }

            const Vec3 k_in = normalize(verts[i + 1] - verts[i]);
            const Vec3 k_out = normalize(verts[i + 2] - verts[i + 1]);
            const Vec3 n = surface.normal();
            const double theta = std::atan2(norm(cross(k_in, n)), std::abs(dot(k_in, n)));

            Vec3 s = cross(k_in, n);
            if (norm(s) < 1e-12) // normal incidence: TE = -TM, any transverse s works
                s = cross(k_in, vertical_basis(k_in));
            s = normalize(s);
            const Vec3 p_in = cross(s, k_in);
            const Vec3 p_out = cross(s, k_out);

            const Complex r_te = fresnel_coeff(theta, material, carrier.wavelength_m, Polarization::te);
            const Complex r_tm = fresnel_coeff(theta, material, carrier.wavelength_m, Polarization::tm);
            field = add(scaled(s, r_te * cdot(field, s)), scaled(p_out, r_tm * cdot(field, p_in)));
        }
        return scalar * cdot(field, vertical_basis(path.arrival_dir));
    }

    Complex path_amplitude(const PropagationPath &path, const Carrier &carrier, const Scene &scene)
    {
        return friis_gain(path.length, carrier.wavelength_m) * interaction_gain(path, carrier, scene);
    }

    double dbm_from_amplitude(Complex amplitude, double pt_dbm)
    {
        const double mag = std::abs(amplitude);
        if (mag == 0.0)
            return minus_infinity_dbm;
        return pt_dbm + 20.0 * std::log10(mag);
    }

    double dbm_to_mw(double dbm)
    {
        return std::pow(10.0, dbm / 10.0);
    }

    double mw_to_dbm(double mw)
    {
        if (mw <= 0.0)
            return minus_infinity_dbm;
        return 10.0 * std::log10(mw);
    }
}
