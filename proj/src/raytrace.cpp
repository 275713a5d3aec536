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

#include "rissim/raytrace.hpp"
#include "rissim/error.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace rissim
{
    std::vector<Vec3> PropagationPath::vertices() const
    {
        std::vector<Vec3> v;
        v.reserve(interactions.size() + 3);
        v.push_back(tx);
        for (std::size_t i = 0; i < interactions.size(); ++i)
        {
            if (ris_point && i == ris_split)
                v.push_back(*ris_point);
            v.push_back(interactions[i].point);
        }
        if (ris_point && ris_split == interactions.size())
            v.push_back(*ris_point);
        v.push_back(rx);
        return v;
    }

    std::size_t PropagationPath::reflection_count() const
    {
        return static_cast<std::size_t>(std::count_if(interactions.begin(), interactions.end(), [](const Interaction &i)
                                                      { return i.kind == InteractionKind::reflection; }));
    }

    PropagationPath make_path(const Vec3 &tx, const Vec3 &rx, std::vector<Interaction> interactions, PathTag tag)
    {
        PropagationPath p;
        p.tx = tx;
        p.rx = rx;
        p.interactions = std::move(interactions);
        p.tag = tag;

        const auto v = p.vertices();
        for (std::size_t i = 1; i < v.size(); ++i)
            p.length += distance(v[i - 1], v[i]);
        p.delay = p.length / speed_of_light;
        p.departure_dir = normalize(v[1] - v[0]);
        p.arrival_dir = normalize(v[v.size() - 1] - v[v.size() - 2]);
        return p;
    }

    Vec3 mirror_point(const Vec3 &p, const Surface &s)
    {
        const Vec3 n = s.normal();
        return p - 2.0 * dot(p - s.origin, n) * n;
    }

    namespace
    {
        // Per-facet quantities reused by every ray test in one trace
        struct Facet
        {
            Vec3 origin, u, v, normal;
            double uu = 0.0, vv = 0.0;

            explicit Facet(const Surface &s)
                : origin(s.origin), u(s.edge_u), v(s.edge_v), normal(s.normal()),
                  uu(dot(s.edge_u, s.edge_u)), vv(dot(s.edge_v, s.edge_v)) {}

            bool contains_projection(const Vec3 &p) const
            {
                const Vec3 d = p - origin;
                const double a = dot(d, u) / uu, b = dot(d, v) / vv;
                return a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0;
            }
            double plane_distance(const Vec3 &p) const { return dot(p - origin, normal); }
        };

        struct Hit
        {
            double distance;
            std::size_t surface;
        };

        class Tracer
        {
        public:
            Tracer(const Scene &scene, const TraceOptions &opt) : opt_(opt)
            {
                facets_.reserve(scene.surfaces().size());
                for (const auto &s : scene.surfaces())
                    facets_.emplace_back(s);
            }

            // Facets crossed by the open segment (a,b), sorted by distance from a
            void segment_hits(const Vec3 &a, const Vec3 &b, std::vector<Hit> &hits, bool stop_at_first) const
            {
                hits.clear();
                const Vec3 d = b - a;
                const double len = norm(d);
                if (!(len > 2.0 * geometry_epsilon))
                    return;
                for (std::size_t i = 0; i < facets_.size(); ++i)
                {
                    const Facet &f = facets_[i];
                    const double denom = dot(f.normal, d);
                    if (std::abs(denom) <= 1e-15 * len)
                        continue; // parallel or in-plane
                    const double t = dot(f.normal, f.origin - a) / denom;
                    const double s = t * len;
                    if (!(s > geometry_epsilon && s < len - geometry_epsilon))
                        continue;
                    if (!f.contains_projection(a + t * d))
                        continue;
                    hits.push_back({s, i});
                    if (stop_at_first)
                        return;
                }
                std::sort(hits.begin(), hits.end(), [](const Hit &x, const Hit &y)
                          { return std::tie(x.distance, x.surface) < std::tie(y.distance, y.surface); });
            }

            bool clear(const Vec3 &a, const Vec3 &b) const
            {
                std::vector<Hit> hits;
                segment_hits(a, b, hits, true);
                return hits.empty();
            }

            std::vector<PropagationPath> run(const Vec3 &tx, const Vec3 &rx)
            {
                tx_ = tx;
                rx_ = rx;
                sequence_.clear();
                images_.assign(1, tx);
                found_.clear();

                accept({});
                if (opt_.max_reflections > 0)
                    descend();

                std::sort(found_.begin(), found_.end(), [](const Candidate &x, const Candidate &y)
                          { return x.key < y.key; });

                std::vector<PropagationPath> out;
                out.reserve(found_.size());
                for (auto &c : found_)
                    out.push_back(std::move(c.path));
                return out;
            }

        private:
            struct Candidate
            {
                std::vector<std::pair<std::size_t, int>> key; // interaction count first, then (surface, kind)
                PropagationPath path;
            };

            void descend()
            {
                const std::size_t depth = sequence_.size();
                for (std::size_t s = 0; s < facets_.size(); ++s)
                {
                    if (depth > 0 && sequence_.back() == s)
                        continue;
                    const Facet &f = facets_[s];
                    const Vec3 &src = images_.back();
                    const double h = f.plane_distance(src);
                    if (std::abs(h) <= geometry_epsilon)
                        continue;
                    sequence_.push_back(s);
                    images_.push_back(src - 2.0 * h * f.normal);

                    backtrack();
                    if (sequence_.size() < opt_.max_reflections)
                        descend();

                    sequence_.pop_back();
                    images_.pop_back();
                }
            }

            // Reflection points for the current image chain, validated against the finite facets
            void backtrack()
            {
                const std::size_t n = sequence_.size();
                std::vector<Vec3> points(n);
                Vec3 target = rx_;
                for (std::size_t k = n; k-- > 0;)
                {
                    const Facet &f = facets_[sequence_[k]];
                    const Vec3 &image = images_[k + 1];
                    const double di = f.plane_distance(image);
                    const double dt = f.plane_distance(target);
                    if (std::abs(dt) <= geometry_epsilon || di * dt >= 0.0)
                        return;
                    const double t = di / (di - dt);
                    const Vec3 p = image + t * (target - image);
                    if (!f.contains_projection(p))
                        return;
                    points[k] = p;
                    target = p;
                }

                std::vector<Interaction> refl(n);
                for (std::size_t k = 0; k < n; ++k)
                    refl[k] = {InteractionKind::reflection, sequence_[k], points[k]};
                accept(std::move(refl));
            }

            void accept(std::vector<Interaction> reflections)
            {
                std::vector<Vec3> verts;
                verts.reserve(reflections.size() + 2);
                verts.push_back(tx_);
                for (const auto &r : reflections)
                    verts.push_back(r.point);
                verts.push_back(rx_);

                std::vector<Interaction> all;
                std::vector<Hit> hits;
                for (std::size_t i = 1; i < verts.size(); ++i)
                {
                    if (distance(verts[i - 1], verts[i]) <= geometry_epsilon)
                        return; // reflection point coincides with an endpoint
                    segment_hits(verts[i - 1], verts[i], hits, !opt_.allow_transmission);
                    if (!hits.empty())
                    {
                        if (!opt_.allow_transmission)
                            return;
                        const Vec3 dir = normalize(verts[i] - verts[i - 1]);
                        for (const auto &h : hits)
                            all.push_back({InteractionKind::transmission, h.surface, verts[i - 1] + h.distance * dir});
                    }
                    if (i < verts.size() - 1)
                        all.push_back(reflections[i - 1]);
                }

                Candidate c;
                c.key.reserve(all.size() + 1);
                c.key.emplace_back(all.size(), 0);
                for (const auto &it : all)
                    c.key.emplace_back(it.surface_index, it.kind == InteractionKind::reflection ? 0 : 1);
                c.path = make_path(tx_, rx_, std::move(all));
                found_.push_back(std::move(c));
            }

            TraceOptions opt_;
            std::vector<Facet> facets_;
            Vec3 tx_, rx_;
            std::vector<std::size_t> sequence_;
            std::vector<Vec3> images_;
            std::vector<Candidate> found_;
        };
    }

    bool line_of_sight(const Scene &scene, const Vec3 &a, const Vec3 &b)
    {
        return Tracer(scene, {}).clear(a, b);
    }

    std::vector<PropagationPath> trace_paths(const Scene &scene, const Vec3 &tx, const Vec3 &rx, const TraceOptions &options)
    {
        if (options.max_reflections > options.reflection_cap)
            throw simulation_error("max_reflections " + std::to_string(options.max_reflections) +
                                   " exceeds the reflection cap of " + std::to_string(options.reflection_cap));
        if (distance(tx, rx) <= geometry_epsilon)
            throw validation_error("trace_paths: tx and rx coincide");
        return Tracer(scene, options).run(tx, rx);
    }
}
