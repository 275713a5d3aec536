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

#include "rissim/scene.hpp"
#include "rissim/error.hpp"
#include "rissim/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace rissim
{
    Carrier Carrier::from_frequency(double frequency_hz)
    {
        if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
            throw validation_error("carrier frequency must be positive and finite");
        return {frequency_hz, speed_of_light / frequency_hz};
    }

    bool Box::contains(const Vec3 &p, double tol) const
    {
        return p.x >= min.x - tol && p.x <= max.x + tol &&
               p.y >= min.y - tol && p.y <= max.y + tol &&
               p.z >= min.z - tol && p.z <= max.z + tol;
    }

    static void validate_material(const Material &m)
    {
        if (m.id.empty())
            throw validation_error("material id must not be empty");
        if (!(m.relative_permittivity >= 1.0) || !std::isfinite(m.relative_permittivity))
            throw validation_error("material '" + m.id + "': eps_r must be >= 1");
        if (!(m.conductivity >= 0.0) || !std::isfinite(m.conductivity))
            throw validation_error("material '" + m.id + "': sigma must be >= 0");
        if (!(m.transmission_loss_db >= 0.0) || !std::isfinite(m.transmission_loss_db))
            throw validation_error("material '" + m.id + "': trans_loss_db must be >= 0");
    }

    static void validate_surface(const Surface &s, std::size_t index)
    {
        const double lu = norm(s.edge_u), lv = norm(s.edge_v);
        const std::string where = "surface " + std::to_string(index);
        if (!(lu > 0.0) || !(lv > 0.0) || !std::isfinite(lu) || !std::isfinite(lv))
            throw validation_error(where + ": degenerate edge");
        if (std::abs(dot(s.edge_u, s.edge_v)) >= 1e-9 * lu * lv)
            throw validation_error(where + ": edges u and v are not orthogonal");
        if (!(s.area() > 0.0))
            throw validation_error(where + ": zero area");
    }

    Scene::Scene(std::vector<Surface> surfaces, std::vector<Material> materials)
        : surfaces_(std::move(surfaces))
    {
        for (const auto &m : materials)
        {
            validate_material(m);
            if (!materials_.emplace(m.id, m).second)
                throw validation_error("duplicate material id '" + m.id + "'");
        }

        constexpr double inf = std::numeric_limits<double>::infinity();
        bounds_ = {{inf, inf, inf}, {-inf, -inf, -inf}};
        for (std::size_t i = 0; i < surfaces_.size(); ++i)
        {
            const Surface &s = surfaces_[i];
            validate_surface(s, i);
            if (!materials_.contains(s.material_id))
                throw validation_error("surface " + std::to_string(i) + " references unknown material '" +
                                       s.material_id + "'");
            for (const Vec3 &c : {s.origin, s.origin + s.edge_u, s.origin + s.edge_v, s.origin + s.edge_u + s.edge_v})
            {
                bounds_.min = {std::min(bounds_.min.x, c.x), std::min(bounds_.min.y, c.y), std::min(bounds_.min.z, c.z)};
                bounds_.max = {std::max(bounds_.max.x, c.x), std::max(bounds_.max.y, c.y), std::max(bounds_.max.z, c.z)};
            }
        }
        if (surfaces_.empty())
            bounds_ = {};
    }

    const Material &Scene::material(const std::string &id) const
    {
        auto it = materials_.find(id);
        if (it == materials_.end())
            throw validation_error("unknown material '" + id + "'");
        return it->second;
    }

    const Material &Scene::material_of(const Surface &s) const
    {
        return material(s.material_id);
    }

    // ------------------------------------------------------------------------
    // Factory generator

    std::vector<Material> FactoryParams::default_materials()
    {
        // Concrete shell; racks are steel shelving loaded with goods, close to a conductor for reflection
        // but leaky for straight-through transmission.
        return {{"concrete", 5.31, 0.15, 20.0},
                {"rack_metal", 1.0, 1.0e7, 12.0}};
    }

    static void require_positive(double value, const char *name)
    {
        if (!(value > 0.0) || !std::isfinite(value))
            throw validation_error(std::string("factory.") + name + " must be > 0");
    }

    static void add_box(std::vector<Surface> &out, double x0, double y0, double lx, double ly, double h,
                        const std::string &mat)
    {
        const double x1 = x0 + lx, y1 = y0 + ly;
        out.push_back({{x0, y0, h}, {lx, 0, 0}, {0, ly, 0}, mat});  // top, +z
        out.push_back({{x0, y0, 0}, {lx, 0, 0}, {0, 0, h}, mat});   // south, -y
        out.push_back({{x0, y1, 0}, {0, 0, h}, {lx, 0, 0}, mat});   // north, +y
        out.push_back({{x0, y0, 0}, {0, 0, h}, {0, ly, 0}, mat});   // west, -x
        out.push_back({{x1, y0, 0}, {0, ly, 0}, {0, 0, h}, mat});   // east, +x
    }

    Scene build_factory(const FactoryParams &p)
    {
        require_positive(p.floor_width, "floor_w");
        require_positive(p.floor_length, "floor_l");
        require_positive(p.wall_height, "wall_h");
        require_positive(p.rack_height, "rack_h");
        require_positive(p.rack_width, "rack_w");
        require_positive(p.rack_length, "rack_l");
        require_positive(p.aisle_width, "aisle_w");
        if (p.rack_height > p.wall_height)
            throw layout_error("factory.rack_h exceeds wall_h");

        const double W = p.floor_width, L = p.floor_length, H = p.wall_height;
        const std::string &wm = p.wall_material;

        std::vector<Surface> surfaces;
        surfaces.push_back({{0, 0, 0}, {W, 0, 0}, {0, L, 0}, wm}); // floor, +z
        surfaces.push_back({{0, 0, H}, {0, L, 0}, {W, 0, 0}, wm}); // ceiling, -z
        surfaces.push_back({{0, 0, 0}, {0, L, 0}, {0, 0, H}, wm}); // x = 0, +x
        surfaces.push_back({{W, 0, 0}, {0, 0, H}, {0, L, 0}, wm}); // x = W, -x
        surfaces.push_back({{0, 0, 0}, {0, 0, H}, {W, 0, 0}, wm}); // y = 0, +y
        surfaces.push_back({{0, L, 0}, {W, 0, 0}, {0, 0, H}, wm}); // y = L, -y

        if (p.rack_rows > 0 && p.racks_per_row > 0)
        {
            const double nx = p.racks_per_row, ny = p.rack_rows;
            const double block_x = nx * p.rack_length + (nx - 1.0) * p.aisle_width;
            const double block_y = ny * p.rack_width + (ny - 1.0) * p.aisle_width;

            // Keep at least one aisle between the rack block and the walls
            if (block_x + 2.0 * p.aisle_width > W + 1e-9)
                throw layout_error("factory: " + std::to_string(p.racks_per_row) + " racks per row do not fit in floor_w");
            if (block_y + 2.0 * p.aisle_width > L + 1e-9)
                throw layout_error("factory: " + std::to_string(p.rack_rows) + " rack rows do not fit in floor_l");

            const double x_start = 0.5 * (W - block_x);
            const double y_start = 0.5 * (L - block_y);
            for (unsigned row = 0; row < p.rack_rows; ++row)
                for (unsigned col = 0; col < p.racks_per_row; ++col)
                    add_box(surfaces,
                            x_start + col * (p.rack_length + p.aisle_width),
                            y_start + row * (p.rack_width + p.aisle_width),
                            p.rack_length, p.rack_width, p.rack_height, p.rack_material);
        }

        return Scene(std::move(surfaces), p.materials);
    }

    // ------------------------------------------------------------------------
    // JSON encoding

    static const json &require_key(const json &obj, const std::string &key, const std::string &path)
    {
        if (!obj.is_object() || !obj.contains(key))
            throw parse_error("missing field '" + path + key + "'");
        return obj.at(key);
    }

    Vec3 vec3_from_json(const json &j, const std::string &field)
    {
        if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number())
            throw parse_error("field '" + field + "' must be an array of 3 numbers");
        return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
    }

    json vec3_to_json(const Vec3 &v)
    {
        return json::array({v.x, v.y, v.z});
    }

    double number_field(const json &obj, const std::string &key, const std::string &path)
    {
        const json &v = require_key(obj, key, path);
        if (!v.is_number())
            throw parse_error("field '" + path + key + "' must be a number");
        return v.get<double>();
    }

    double number_field(const json &obj, const std::string &key, const std::string &path, double fallback)
    {
        if (!obj.is_object() || !obj.contains(key))
            return fallback;
        return number_field(obj, key, path);
    }

    static std::string string_field(const json &obj, const std::string &key, const std::string &path)
    {
        const json &v = require_key(obj, key, path);
        if (!v.is_string())
            throw parse_error("field '" + path + key + "' must be a string");
        return v.get<std::string>();
    }

    Material material_from_json(const json &j)
    {
        Material m;
        m.id = string_field(j, "id", "materials[].");
        m.relative_permittivity = number_field(j, "eps_r", "materials[].");
        m.conductivity = number_field(j, "sigma", "materials[].", 0.0);
        m.transmission_loss_db = number_field(j, "trans_loss_db", "materials[].", 0.0);
        return m;
    }

    json material_to_json(const Material &m)
    {
        json j;
        j["id"] = m.id;
        j["eps_r"] = m.relative_permittivity;
        j["sigma"] = m.conductivity;
        j["trans_loss_db"] = m.transmission_loss_db;
        return j;
    }

    static unsigned count_field(const json &obj, const std::string &key, unsigned fallback)
    {
        if (!obj.contains(key))
            return fallback;
        const json &v = obj.at(key);
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw validation_error("field 'factory." + key + "' must be a non-negative integer");
        return v.get<unsigned>();
    }

    FactoryParams factory_from_json(const json &j)
    {
        if (!j.is_object())
            throw parse_error("field 'factory' must be an object");
        FactoryParams p;
        const std::string path = "factory.";
        p.floor_width = number_field(j, "floor_w", path, p.floor_width);
        p.floor_length = number_field(j, "floor_l", path, p.floor_length);
        p.wall_height = number_field(j, "wall_h", path, p.wall_height);
        p.rack_height = number_field(j, "rack_h", path, p.rack_height);
        p.rack_rows = count_field(j, "rack_rows", p.rack_rows);
        p.racks_per_row = count_field(j, "racks_per_row", p.racks_per_row);
        p.rack_width = number_field(j, "rack_w", path, p.rack_width);
        p.rack_length = number_field(j, "rack_l", path, p.rack_length);
        p.aisle_width = number_field(j, "aisle_w", path, p.aisle_width);
        if (j.contains("wall_material"))
            p.wall_material = string_field(j, "wall_material", path);
        if (j.contains("rack_material"))
            p.rack_material = string_field(j, "rack_material", path);
        return p;
    }

    json factory_to_json(const FactoryParams &p)
    {
        json j;
        j["floor_w"] = p.floor_width;
        j["floor_l"] = p.floor_length;
        j["wall_h"] = p.wall_height;
        j["rack_h"] = p.rack_height;
        j["rack_rows"] = p.rack_rows;
        j["racks_per_row"] = p.racks_per_row;
        j["rack_w"] = p.rack_width;
        j["rack_l"] = p.rack_length;
        j["aisle_w"] = p.aisle_width;
        j["wall_material"] = p.wall_material;
        j["rack_material"] = p.rack_material;
        return j;
    }

    Scene scene_from_json(const json &doc)
    {
        if (!doc.is_object())
            throw parse_error("scene document must be a JSON object");

        std::vector<Material> materials;
        if (doc.contains("materials"))
        {
            if (!doc["materials"].is_array())
                throw parse_error("field 'materials' must be an array");
            for (const auto &m : doc["materials"])
                materials.push_back(material_from_json(m));
        }

        if (doc.contains("factory"))
        {
            if (doc.contains("surfaces"))
                throw parse_error("scene document has both 'surfaces' and 'factory'");
            FactoryParams p = factory_from_json(doc["factory"]);
            if (doc.contains("materials"))
                p.materials = std::move(materials);
            return build_factory(p);
        }

        const json &jsurf = require_key(doc, "surfaces", "");
        if (!jsurf.is_array())
            throw parse_error("field 'surfaces' must be an array");
        std::vector<Surface> surfaces;
        surfaces.reserve(jsurf.size());
        for (std::size_t i = 0; i < jsurf.size(); ++i)
        {
            const json &s = jsurf[i];
            const std::string path = "surfaces[" + std::to_string(i) + "].";
            surfaces.push_back({vec3_from_json(require_key(s, "origin", path), path + "origin"),
                                vec3_from_json(require_key(s, "u", path), path + "u"),
                                vec3_from_json(require_key(s, "v", path), path + "v"),
                                string_field(s, "material", path)});
        }
        return Scene(std::move(surfaces), std::move(materials));
    }

    json scene_to_json(const Scene &scene)
    {
        json doc;
        doc["materials"] = json::array();
        for (const auto &[id, m] : scene.materials())
            doc["materials"].push_back(material_to_json(m));
        doc["surfaces"] = json::array();
        for (const auto &s : scene.surfaces())
        {
            json js;
            js["origin"] = vec3_to_json(s.origin);
            js["u"] = vec3_to_json(s.edge_u);
            js["v"] = vec3_to_json(s.edge_v);
            js["material"] = s.material_id;
            doc["surfaces"].push_back(std::move(js));
        }
        return doc;
    }

    Scene load_scene(std::string_view document)
    {
        json doc;
        try
        {
            doc = json::parse(document.begin(), document.end());
        }
        catch (const json::parse_error &e)
        {
            throw parse_error(std::string("scene document: ") + e.what());
        }
        return scene_from_json(doc);
    }

    Scene load_scene_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw parse_error("cannot open scene file '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return load_scene(ss.str());
    }

    std::string serialize_scene(const Scene &scene)
    {
        return scene_to_json(scene).dump(2);
    }
}
