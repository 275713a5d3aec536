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

#ifndef RISSIM_TEST_SUPPORT_HPP
#define RISSIM_TEST_SUPPORT_HPP

#include "rissim/scene.hpp"

#include <string>

namespace rissim::test
{
    inline const std::string source_dir = RISSIM_SOURCE_DIR;

    inline Material pec()
    {
        return {"pec", 1.0e9, 0.0, 0.0};
    }

    // Axis-aligned square facet of half-width `half` in the plane coord[axis] = at
    inline Surface plane(int axis, double at, double half, const std::string &material)
    {
        const double h = 2.0 * half;
        switch (axis)
        {
        case 0:
            return {{at, -half, -half}, {0, h, 0}, {0, 0, h}, material};
        case 1:
            return {{-half, at, -half}, {0, 0, h}, {h, 0, 0}, material};
        default:
            return {{-half, -half, at}, {h, 0, 0}, {0, h, 0}, material};
        }
    }
}

#endif
