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

#ifndef RISSIM_CHAMBER_HPP
#define RISSIM_CHAMBER_HPP

#include "rissim/ris.hpp"

#include <vector>

namespace rissim
{
    // Anechoic-chamber style measurement: the transmitter sits on the panel normal and the receiver
    // circles the panel center in the plane spanned by the normal and the panel x axis.
    struct ChamberSetup
    {
        RisPanel panel;
        RisConfig config;
        Carrier carrier;
        double tx_distance = 1.0; // m
        double rx_distance = 1.0; // m
        double pt_dbm = 0.0;      // antenna gains folded in
        double theta_min_deg = -90.0;
        double theta_max_deg = 90.0;
        double step_deg = 0.1;
        double rx_pattern_q = 0.0; // receive power pattern cos^q(theta_s); 0 is isotropic
        PhaseModel phase_model = PhaseModel::plane_wave;
    };

    struct SweepSample
    {
        double theta_deg = 0.0;
        double power_dbm = 0.0;
    };

    struct SweepResult
    {
        std::vector<SweepSample> samples; // strictly increasing angle, uniform step
        ChamberSetup setup;
    };

    // Throws validation_error for non-positive distances or step, or an angle range outside [-90, 90]
    SweepResult chamber_sweep(const ChamberSetup &setup);

    struct Lobe
    {
        double theta_deg = 0.0;
        double power_dbm = 0.0;
    };

    // The n strongest local maxima, strongest first. A sample (or a plateau, reported at its lowest angle)
    // is a maximum when it exceeds each existing neighbor. Throws validation_error if fewer than n exist.
    std::vector<Lobe> extract_lobes(const SweepResult &sweep, std::size_t n);
}

#endif
