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

#include "rissim/config.hpp"
#include "rissim/error.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace rissim
{
    RisPanel RisPanelSpec::resolve(const Carrier &carrier) const
    {
        RisPanel p;
        p.center = center;
        p.normal = normalize(normal);
        p.x_axis = normalize(x_axis);
        p.nx = nx;
        p.ny = ny;
        p.dx = dx_over_lambda * carrier.wavelength_m;
        p.dy = dy_over_lambda * carrier.wavelength_m;
        p.amplitude = amplitude;
        p.model = model;
        p.alpha = alpha;
        return p;
    }

    namespace
    {
        std::string string_at(const json &obj, const std::string &key, const std::string &path, const std::string &fallback)
        {
            if (!obj.contains(key))
                return fallback;
            if (!obj[key].is_string())
                throw parse_error("field '" + path + key + "' must be a string");
            return obj[key].get<std::string>();
        }

        unsigned unsigned_at(const json &obj, const std::string &key, const std::string &path, unsigned fallback)
        {
            if (!obj.contains(key))
                return fallback;
            const json &v = obj[key];
            if (!v.is_number_integer())
                throw parse_error("field '" + path + key + "' must be an integer");
            if (v.get<long long>() < 0)
                throw validation_error("field '" + path + key + "' must be >= 0");
            return v.get<unsigned>();
        }

        bool bool_at(const json &obj, const std::string &key, const std::string &path, bool fallback)
        {
            if (!obj.contains(key))
                return fallback;
            if (!obj[key].is_boolean())
                throw parse_error("field '" + path + key + "' must be true or false");
            return obj[key].get<bool>();
        }

        const json &object_at(const json &obj, const std::string &key)
        {
            if (!obj[key].is_object())
                throw parse_error("field '" + key + "' must be an object");
            return obj[key];
        }

        RisPanelSpec panel_from_json(const json &j)
        {
            RisPanelSpec p;
            const std::string path = "ris.";
            if (!j.contains("center") || !j.contains("normal") || !j.contains("x_axis"))
                throw parse_error("field 'ris' needs center, normal and x_axis");
            p.center = vec3_from_json(j["center"], path + "center");
            p.normal = vec3_from_json(j["normal"], path + "normal");
            p.x_axis = vec3_from_json(j["x_axis"], path + "x_axis");
            p.nx = unsigned_at(j, "nx", path, p.nx);
            p.ny = unsigned_at(j, "ny", path, p.ny);
            p.dx_over_lambda = number_field(j, "dx_over_lambda", path, p.dx_over_lambda);
            p.dy_over_lambda = number_field(j, "dy_over_lambda", path, p.dy_over_lambda);
            p.amplitude = number_field(j, "A", path, p.amplitude);
            p.model = scattering_model_from_string(string_at(j, "model", path, "tang2022"));
            p.alpha = number_field(j, "alpha", path, p.alpha);
            return p;
        }

        json panel_to_json(const RisPanelSpec &p)
        {
            json j;
            j["center"] = vec3_to_json(p.center);
            j["normal"] = vec3_to_json(p.normal);
            j["x_axis"] = vec3_to_json(p.x_axis);
            j["nx"] = p.nx;
            j["ny"] = p.ny;
            j["dx_over_lambda"] = p.dx_over_lambda;
            j["dy_over_lambda"] = p.dy_over_lambda;
            j["A"] = p.amplitude;
            j["model"] = to_string(p.model);
            j["alpha"] = p.alpha;
            return j;
        }

        AreaSpec area_from_json(const json &j)
        {
            AreaSpec a;
            const std::string path = "area.";
            if (!j.contains("origin"))
                throw parse_error("missing field 'area.origin'");
            a.origin = vec3_from_json(j["origin"], path + "origin");
            a.extent_x = number_field(j, "extent_x", path);
            a.extent_y = number_field(j, "extent_y", path);
            a.resolution = number_field(j, "resolution", path, a.resolution);
            a.ms_height = number_field(j, "ms_height", path, a.ms_height);
            return a;
        }

        json area_to_json(const AreaSpec &a)
        {
            json j;
            j["origin"] = vec3_to_json(a.origin);
            j["extent_x"] = a.extent_x;
            j["extent_y"] = a.extent_y;
            j["resolution"] = a.resolution;
            j["ms_height"] = a.ms_height;
            return j;
        }

        PhaseModel phase_model_from_string(const std::string &s)
        {
            if (s == "plane_wave")
                return PhaseModel::plane_wave;
            if (s == "exact_distance")
                return PhaseModel::exact_distance;
            throw validation_error("unknown phase_model '" + s + "' (expected plane_wave or exact_distance)");
        }

        std::string to_string(PhaseModel m)
        {
            return m == PhaseModel::plane_wave ? "plane_wave" : "exact_distance";
        }

        FarFieldPolicy ff_policy_from_string(const std::string &s)
        {
            if (s == "ignore")
                return FarFieldPolicy::ignore;
            if (s == "warn")
                return FarFieldPolicy::warn;
            if (s == "strict")
                return FarFieldPolicy::strict;
            throw validation_error("unknown far_field.policy '" + s + "' (expected ignore, warn or strict)");
        }

        std::string to_string(FarFieldPolicy p)
        {
            switch (p)
            {
            case FarFieldPolicy::ignore:
                return "ignore";
            case FarFieldPolicy::warn:
                return "warn";
            case FarFieldPolicy::strict:
                return "strict";
            }
            return "warn";
        }

        json read_json_file(const std::string &path)
        {
            std::ifstream in(path);
            if (!in)
                throw parse_error("cannot open '" + path + "'");
            try
            {
                return json::parse(in);
            }
            catch (const json::parse_error &e)
            {
                throw parse_error("'" + path + "': " + e.what());
            }
        }
    }

    ScenarioConfig config_from_json(const json &input, const std::string &base_dir)
    {
        const json &doc = (input.is_object() && input.contains("config") && input.contains("tool")) ? input["config"] : input;
        if (!doc.is_object())
            throw parse_error("scenario config must be a JSON object");

        ScenarioConfig c;

        if (!doc.contains("scene"))
            throw parse_error("missing field 'scene'");
        const json &scene = doc["scene"];
        if (scene.is_object() && scene.contains("file"))
        {
            if (!scene["file"].is_string())
                throw parse_error("field 'scene.file' must be a string");
            std::filesystem::path p(scene["file"].get<std::string>());
            if (p.is_relative())
                p = std::filesystem::path(base_dir) / p;
            c.scene_document = read_json_file(p.string());
        }
        else if (scene.is_object())
            c.scene_document = scene;
        else
            throw parse_error("field 'scene' must be an object");

        c.frequency_hz = number_field(doc, "frequency_hz", "", c.frequency_hz);
        c.pt_dbm = number_field(doc, "pt_dbm", "", c.pt_dbm);
        if (doc.contains("bs"))
            c.bs = vec3_from_json(doc["bs"], "bs");
        if (doc.contains("ris"))
            c.ris = panel_from_json(object_at(doc, "ris"));
        if (doc.contains("area"))
            c.area = area_from_json(object_at(doc, "area"));
        c.mode = ris_mode_from_string(string_at(doc, "mode", "", c.ris ? "ms_specific" : "none"));
        if (doc.contains("anchor"))
            c.anchor = vec3_from_json(doc["anchor"], "anchor");

        if (doc.contains("trace"))
        {
            const json &t = object_at(doc, "trace");
            c.trace.max_reflections = unsigned_at(t, "max_reflections", "trace.", c.trace.max_reflections);
            c.trace.allow_transmission = bool_at(t, "allow_transmission", "trace.", c.trace.allow_transmission);
        }

        const std::string summation = string_at(doc, "summation", "", "coherent");
        if (summation == "coherent")
            c.summation = Summation::coherent;
        else if (summation == "incoherent")
            c.summation = Summation::incoherent;
        else
            throw validation_error("field 'summation' must be coherent or incoherent");

        c.cascade.phase_model = phase_model_from_string(string_at(doc, "phase_model", "", "plane_wave"));
        if (doc.contains("far_field"))
        {
            const json &f = object_at(doc, "far_field");
            c.cascade.far_field = ff_policy_from_string(string_at(f, "policy", "far_field.", "warn"));
            c.cascade.far_field_factor = number_field(f, "factor", "far_field.", 1.0);
        }

        if (doc.contains("pdp"))
        {
            const json &p = object_at(doc, "pdp");
            if (p.contains("ms"))
                c.pdp_ms = vec3_from_json(p["ms"], "pdp.ms");
        }

        if (doc.contains("chamber"))
        {
            const json &ch = object_at(doc, "chamber");
            const std::string path = "chamber.";
            c.chamber.tx_distance = number_field(ch, "tx_distance", path, c.chamber.tx_distance);
            c.chamber.rx_distance = number_field(ch, "rx_distance", path, c.chamber.rx_distance);
            c.chamber.theta_min_deg = number_field(ch, "theta_min_deg", path, c.chamber.theta_min_deg);
            c.chamber.theta_max_deg = number_field(ch, "theta_max_deg", path, c.chamber.theta_max_deg);
            c.chamber.step_deg = number_field(ch, "step_deg", path, c.chamber.step_deg);
            c.chamber.lobes = unsigned_at(ch, "lobes", path, static_cast<unsigned>(c.chamber.lobes));
            c.chamber.steer_deg = number_field(ch, "steer_deg", path, c.chamber.steer_deg);
            c.chamber.rx_pattern_q = number_field(ch, "rx_pattern_q", path, c.chamber.rx_pattern_q);
        }

        c.output_dir = string_at(doc, "output_dir", "", c.output_dir);
        c.workers = unsigned_at(doc, "workers", "", c.workers);
        return c;
    }

    ScenarioConfig load_config_file(const std::string &path)
    {
        const auto base = std::filesystem::path(path).parent_path().string();
        return config_from_json(read_json_file(path), base.empty() ? "." : base);
    }

    void ScenarioConfig::validate() const
    {
        if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
            throw validation_error("field 'frequency_hz' must be > 0");
        if (!std::isfinite(pt_dbm))
            throw validation_error("field 'pt_dbm' must be finite");
        if (area)
            area->validate();
        if (ris)
        {
            if (!(ris->dx_over_lambda > 0.0) || !(ris->dy_over_lambda > 0.0))
                throw validation_error("field 'ris.dx_over_lambda' and 'ris.dy_over_lambda' must be > 0");
            if (norm(ris->normal) == 0.0 || norm(ris->x_axis) == 0.0)
                throw validation_error("fields 'ris.normal' and 'ris.x_axis' must be non-zero");
            ris->resolve(carrier()).validate();
        }
        if (mode != RisMode::none && !ris)
            throw validation_error("field 'mode' = " + to_string(mode) + " requires a 'ris' block");
        if (mode == RisMode::fixed && !anchor)
            throw validation_error("field 'anchor' is required when mode = fixed");
        if (trace.max_reflections > trace.reflection_cap)
            throw validation_error("field 'trace.max_reflections' exceeds the cap of " + std::to_string(trace.reflection_cap));
        if (!(cascade.far_field_factor > 0.0))
            throw validation_error("field 'far_field.factor' must be > 0");
        if (!(chamber.tx_distance > 0.0))
            throw validation_error("field 'chamber.tx_distance' must be > 0");
        if (!(chamber.rx_distance > 0.0))
            throw validation_error("field 'chamber.rx_distance' must be > 0");
        if (!(chamber.step_deg > 0.0))
            throw validation_error("field 'chamber.step_deg' must be > 0");
        if (chamber.lobes < 1)
            throw validation_error("field 'chamber.lobes' must be >= 1");
        if (workers < 1)
            throw validation_error("field 'workers' must be >= 1");
    }

    json ScenarioConfig::to_json() const
    {
        json j;
        j["scene"] = scene_document;
        j["frequency_hz"] = frequency_hz;
        j["pt_dbm"] = pt_dbm;
        j["bs"] = vec3_to_json(bs);
        if (ris)
            j["ris"] = panel_to_json(*ris);
        if (area)
            j["area"] = area_to_json(*area);
        j["mode"] = rissim::to_string(mode);
        if (anchor)
            j["anchor"] = vec3_to_json(*anchor);
        j["trace"] = {{"max_reflections", trace.max_reflections}, {"allow_transmission", trace.allow_transmission}};
        j["summation"] = summation == Summation::coherent ? "coherent" : "incoherent";
        j["phase_model"] = to_string(cascade.phase_model);
        j["far_field"] = {{"policy", to_string(cascade.far_field)}, {"factor", cascade.far_field_factor}};
        if (pdp_ms)
            j["pdp"] = {{"ms", vec3_to_json(*pdp_ms)}};
        j["chamber"] = {{"tx_distance", chamber.tx_distance},
                        {"rx_distance", chamber.rx_distance},
                        {"theta_min_deg", chamber.theta_min_deg},
                        {"theta_max_deg", chamber.theta_max_deg},
                        {"step_deg", chamber.step_deg},
                        {"lobes", chamber.lobes},
                        {"steer_deg", chamber.steer_deg},
                        {"rx_pattern_q", chamber.rx_pattern_q}};
        j["output_dir"] = output_dir;
        j["workers"] = workers;
        return j;
    }
}
