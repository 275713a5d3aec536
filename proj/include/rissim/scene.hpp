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

#ifndef RISSIM_SCENE_HPP
#define RISSIM_SCENE_HPP

#include "rissim/geometry.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rissim
{
    struct Material
    {
        std::string id;
        double relative_permittivity = 1.0; // eps_r >= 1
        double conductivity = 0.0;          // S/m
        double transmission_loss_db = 0.0;  // flat loss per traversal
    };

    // Planar rectangle spanned by two orthogonal edges from `origin`
    struct Surface
    {
        Vec3 origin;
        Vec3 edge_u;
        Vec3 edge_v;
        std::string material_id;

        Vec3 normal() const { return normalize(cross(edge_u, edge_v)); }
        double area() const { return norm(cross(edge_u, edge_v)); }

        // Facet coordinates of the orthogonal projection of p, both in [0,1] inside the facet
        double coord_u(const Vec3 &p) const { return dot(p - origin, edge_u) / dot(edge_u, edge_u); }
        double coord_v(const Vec3 &p) const { return dot(p - origin, edge_v) / dot(edge_v, edge_v); }

        // Signed distance of p from the infinite plane
        double plane_distance(const Vec3 &p) const { return dot(p - origin, normal()); }
    };

    struct Box
    {
        Vec3 min, max;
        bool contains(const Vec3 &p, double tol = 1e-9) const;
    };

    class Scene
    {
    public:
        Scene() = default;

        // Validates every invariant; throws validation_error naming the offending item
        Scene(std::vector<Surface> surfaces, std::vector<Material> materials);

        const std::vector<Surface> &surfaces() const { return surfaces_; }
        const std::map<std::string, Material> &materials() const { return materials_; }
        const Box &bounds() const { return bounds_; }

        const Material &material_of(const Surface &s) const;
        const Material &material(const std::string &id) const;

    private:
        std::vector<Surface> surfaces_;
        std::map<std::string, Material> materials_;
        Box bounds_{};
    };

    // Parametric warehouse: walls, floor and ceiling plus rows of rack boxes centered on the floor.
    // Rack boxes are `rack_length` along x and `rack_width` along y.
    struct FactoryParams
    {
        double floor_width = 60.0;  // x extent
        double floor_length = 40.0; // y extent
        double wall_height = 5.0;
        double rack_height = 4.4;
        unsigned rack_rows = 3;
        unsigned racks_per_row = 5;
        double rack_width = 2.0;
        double rack_length = 6.0;
        double aisle_width = 3.0;
        std::string wall_material = "concrete";
        std::string rack_material = "rack_metal";
        std::vector<Material> materials = default_materials();

        static std::vector<Material> default_materials();
    };

    Scene build_factory(const FactoryParams &params);

    // Scene document (JSON): {"materials": [...], "surfaces": [...]} or {"materials": [...], "factory": {...}}
    Scene load_scene(std::string_view document);
    Scene load_scene_file(const std::string &path);

    // Canonical JSON text of a scene; equal scenes serialize to identical bytes
    std::string serialize_scene(const Scene &scene);
}

#endif
