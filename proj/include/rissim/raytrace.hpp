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

#ifndef RISSIM_RAYTRACE_HPP
#define RISSIM_RAYTRACE_HPP

#include "rissim/scene.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rissim
{
    // Endpoint tolerance for blockage tests (m)
    inline constexpr double geometry_epsilon = 1e-9;

    enum class InteractionKind
    {
        reflection,
        transmission
    };

    struct Interaction
    {
        InteractionKind kind = InteractionKind::reflection;
        std::size_t surface_index = 0;
        Vec3 point;
    };

    enum class PathTag
    {
        conventional,
        ris
    };

    struct PropagationPath
    {
        Vec3 tx;
        Vec3 rx;
        std::vector<Interaction> interactions;
        double length = 0.0;   // m
        double delay = 0.0;    // s
        Vec3 departure_dir;    // unit, leaving tx
        Vec3 arrival_dir;      // unit, propagation direction when reaching rx
        PathTag tag = PathTag::conventional;

        // RIS cascades only: the panel center and how many interactions precede it
        std::optional<Vec3> ris_point;
        std::size_t ris_split = 0;

        // tx, every interaction point (and the RIS point) in order, rx
        std::vector<Vec3> vertices() const;

        std::size_t reflection_count() const;
    };

    // Builds a path from its vertex list; fills length, delay and directions
    PropagationPath make_path(const Vec3 &tx, const Vec3 &rx, std::vector<Interaction> interactions,
                              PathTag tag = PathTag::conventional);

    struct TraceOptions
    {
        unsigned max_reflections = 2;
        bool allow_transmission = false;
        unsigned reflection_cap = 3; // hard limit on max_reflections
    };

    // True iff segment (a,b) crosses no facet interior; touching within geometry_epsilon of an endpoint does not block
    bool line_of_sight(const Scene &scene, const Vec3 &a, const Vec3 &b);

    // Reflection of p across the infinite plane of s
    Vec3 mirror_point(const Vec3 &p, const Surface &s);

    // Image-method enumeration of specular paths up to max_reflections. With allow_transmission, facets
    // blocking a segment become straight-through transmission interactions instead of invalidating it.
    // Ordered by interaction count, then by the (surface, kind) tuple. Throws simulation_error if the cap is exceeded.
    std::vector<PropagationPath> trace_paths(const Scene &scene, const Vec3 &tx, const Vec3 &rx,
                                             const TraceOptions &options = {});
}

#endif
