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

#include "rissim/chamber.hpp"
#include "rissim/error.hpp"

#include <algorithm>
#include <cmath>

namespace rissim
{
    SweepResult chamber_sweep(const ChamberSetup &setup)
    {
        setup.panel.validate();
        if (!(setup.tx_distance > 0.0) || !(setup.rx_distance > 0.0))
            throw validation_error("chamber: distances must be > 0");
        if (!(setup.step_deg > 0.0))
            throw validation_error("chamber: step must be > 0");
        if (!(setup.theta_min_deg >= -90.0 && setup.theta_max_deg <= 90.0 && setup.theta_min_deg <= setup.theta_max_deg))
            throw validation_error("chamber: angle range must satisfy -90 <= min <= max <= 90");
        if (!(setup.rx_pattern_q >= 0.0))
            throw validation_error("chamber: rx_pattern_q must be >= 0");

        const RisPanel &panel = setup.panel;
        const Scene free_space;
        const Vec3 tx = panel.center + setup.tx_distance * panel.normal;
        const PropagationPath incoming = make_path(tx, panel.center, {});
        const CascadeOptions options{setup.phase_model, FarFieldPolicy::ignore, 1.0};

        SweepResult result;
        result.setup = setup;
        const auto count = static_cast<std::size_t>(std::floor((setup.theta_max_deg - setup.theta_min_deg) / setup.step_deg + 1e-9)) + 1;
        result.samples.reserve(count);
        for (std::size_t k = 0; k < count; ++k)
        {
            const double theta_deg = setup.theta_min_deg + static_cast<double>(k) * setup.step_deg;
            const double theta = theta_deg * pi / 180.0;
            const Vec3 dir = std::cos(theta) * panel.normal + std::sin(theta) * panel.x_axis;
            const PropagationPath outgoing = make_path(panel.center, panel.center + setup.rx_distance * dir, {});

            const auto cascade = ris_cascade(free_space, std::span(&incoming, 1), std::span(&outgoing, 1), panel,
                                             setup.config, setup.carrier, options);
            Complex amp = cascade.paths.empty() ? Complex{} : cascade.paths.front().amplitude;
            if (setup.rx_pattern_q > 0.0)
                amp *= std::pow(std::max(std::cos(theta), 0.0), 0.5 * setup.rx_pattern_q);
            result.samples.push_back({theta_deg, dbm_from_amplitude(amp, setup.pt_dbm)});
        }
        return result;
    }

    std::vector<Lobe> extract_lobes(const SweepResult &sweep, std::size_t n)
    {
        if (n < 1)
            throw validation_error("extract_lobes: n must be >= 1");
        const auto &s = sweep.samples;
        std::vector<Lobe> maxima;
        for (std::size_t i = 0; i < s.size();)
        {
            std::size_t j = i;
            while (j + 1 < s.size() && s[j + 1].power_dbm == s[i].power_dbm)
                ++j;
            const bool above_left = i == 0 || s[i - 1].power_dbm < s[i].power_dbm;
            const bool above_right = j + 1 == s.size() || s[j + 1].power_dbm < s[i].power_dbm;
            const bool has_neighbor = i > 0 || j + 1 < s.size();
            if (above_left && above_right && (has_neighbor || s.size() == 1))
                maxima.push_back({s[i].theta_deg, s[i].power_dbm});
            i = j + 1;
        }
        if (maxima.size() < n)
            throw validation_error("extract_lobes: found " + std::to_string(maxima.size()) + " local maxima, " +
                                   std::to_string(n) + " requested");
        std::stable_sort(maxima.begin(), maxima.end(), [](const Lobe &a, const Lobe &b)
                         { return a.power_dbm > b.power_dbm; });
        maxima.resize(n);
        return maxima;
    }
}
