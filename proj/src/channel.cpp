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

#include "rissim/channel.hpp"

#include <algorithm>

namespace rissim
{
    namespace
    {
        Complex sum_of(const std::vector<PathContribution> &paths)
        {
            Complex s = 0.0;
            for (const auto &p : paths)
                s += p.amplitude;
            return s;
        }
    }

    Complex ChannelSample::conventional_total() const { return sum_of(conventional_paths); }
    Complex ChannelSample::ris_total() const { return sum_of(ris_paths); }
    Complex ChannelSample::total() const { return conventional_total() + ris_total(); }

    ChannelSample compose_channel(std::vector<PathContribution> conventional, std::vector<PathContribution> ris,
                                  const Carrier &carrier)
    {
        ChannelSample s;
        s.carrier = carrier;
        const auto *first = !conventional.empty() ? &conventional.front() : (!ris.empty() ? &ris.front() : nullptr);
        if (first)
        {
            s.bs = first->path.tx;
            s.ms = first->path.rx;
        }
        s.conventional_paths = std::move(conventional);
        s.ris_paths = std::move(ris);
        return s;
    }

    double total_rx_power(const ChannelSample &sample, double pt_dbm, Summation mode)
    {
        if (sample.conventional_paths.empty() && sample.ris_paths.empty())
            return minus_infinity_dbm;
        if (mode == Summation::coherent)
            return dbm_from_amplitude(sample.total(), pt_dbm);

        double power = 0.0;
        for (const auto *list : {&sample.conventional_paths, &sample.ris_paths})
            for (const auto &p : *list)
                power += std::norm(p.amplitude);
        if (power == 0.0)
            return minus_infinity_dbm;
        return pt_dbm + 10.0 * std::log10(power);
    }

    Pdp power_delay_profile(const ChannelSample &sample, double pt_dbm)
    {
        Pdp pdp;
        pdp.reserve(sample.conventional_paths.size() + sample.ris_paths.size());
        for (const auto *list : {&sample.conventional_paths, &sample.ris_paths})
            for (const auto &p : *list)
                pdp.push_back({p.path.delay, dbm_from_amplitude(p.amplitude, pt_dbm), p.path.tag});
        std::stable_sort(pdp.begin(), pdp.end(), [](const PdpBin &a, const PdpBin &b)
                         { return a.delay_s < b.delay_s; });
        return pdp;
    }
}
