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

#ifndef RISSIM_CHANNEL_HPP
#define RISSIM_CHANNEL_HPP

#include "rissim/em.hpp"

#include <vector>

namespace rissim
{
    // SISO channel between one BS and one MS: conventional multipath plus RIS cascades
    struct ChannelSample
    {
        Vec3 bs;
        Vec3 ms;
        std::vector<PathContribution> conventional_paths;
        std::vector<PathContribution> ris_paths;
        Carrier carrier;

        // Scalar H = sum of conventional amplitudes + sum of RIS amplitudes
        Complex total() const;
        Complex conventional_total() const;
        Complex ris_total() const;
    };

    ChannelSample compose_channel(std::vector<PathContribution> conventional, std::vector<PathContribution> ris,
                                  const Carrier &carrier);

    enum class Summation
    {
        coherent,
        incoherent
    };

    // Coherent: Pt + 20 log10 |sum a|. Incoherent: Pt + 10 log10 sum |a|^2. No paths gives -inf.
    double total_rx_power(const ChannelSample &sample, double pt_dbm, Summation mode = Summation::coherent);

    struct PdpBin
    {
        double delay_s = 0.0;
        double power_dbm = 0.0;
        PathTag tag = PathTag::conventional;
    };

    // One impulse per path, sorted by delay
    using Pdp = std::vector<PdpBin>;
    Pdp power_delay_profile(const ChannelSample &sample, double pt_dbm);
}

#endif
