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

#ifndef RISSIM_EM_HPP
#define RISSIM_EM_HPP

#include "rissim/raytrace.hpp"

#include <limits>

namespace rissim
{
    enum class Polarization
    {
        te, // E perpendicular to the plane of incidence
        tm  // E in the plane of incidence
    };

    // Free-space voltage gain lambda/(4 pi d) * exp(-j 2 pi d / lambda); throws validation_error for d <= 0
    Complex friis_gain(double distance_m, double wavelength_m);

    // Fresnel reflection coefficient for a half-space with eps = eps_r - j sigma / (2 pi f eps0).
    // The TM value refers to the basis p = s x k, so a perfect conductor gives TE = -1, TM = +1.
    Complex fresnel_coeff(double incidence_rad, const Material &material, double wavelength_m, Polarization pol);

    // Product of reflection and transmission factors along a path, with a vertically polarized
    // source and the field projected back onto the vertical at the path end.
    Complex interaction_gain(const PropagationPath &path, const Carrier &carrier, const Scene &scene);

    // friis_gain(length) * interaction_gain; isotropic unit-gain antennas at both ends
    Complex path_amplitude(const PropagationPath &path, const Carrier &carrier, const Scene &scene);

    // A traced path with its complex channel contribution
    struct PathContribution
    {
        PropagationPath path;
        Complex amplitude;
    };

    inline constexpr double minus_infinity_dbm = -std::numeric_limits<double>::infinity();

    // Pt + 20 log10 |a|; -inf for a zero amplitude
    double dbm_from_amplitude(Complex amplitude, double pt_dbm);
    double dbm_to_mw(double dbm);
    double mw_to_dbm(double mw);
}

#endif
