#include "cover/triangulate.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "cover/earclip.hpp"
#include "cover/errors.hpp"
#include "cover/region_ops.hpp"

namespace cover {
namespace {

// boundary cycles oriented with the region interior on the left
std::vector<std::vector<Point>> boundary_cycles(const PolygonWithHoles& region) {
    std::vector<std::vector<Point>> cycles;
    std::vector<Point> outer = region.outer.vertices;
    if (sign(signed_area(outer)) < 0) std::reverse(outer.begin(), outer.end());
    cycles.push_back(std::move(outer));
    for (const auto& h : region.holes) {
        std::vector<Point> hv = h.vertices;
        if (sign(signed_area(hv)) > 0) std::reverse(hv.begin(), hv.end());
        cycles.push_back(std::move(hv));
    }
    return cycles;
}

// first hit of the ray v + t*d (t > 0) with the boundary; returns the point
std::optional<Point> shoot_ray(const Point& v, const Point& d,
                               const std::vector<std::vector<Point>>& cycles) {
    std::optional<Rational> best_t;
    for (const auto& cyc : cycles) {
        std::size_t n = cyc.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& p = cyc[i];
            const Point& q = cyc[(i + 1) % n];
            Rational ex = q.x - p.x, ey = q.y - p.y;
            Rational denom = d.x * ey - d.y * ex;
            if (sign(denom) == 0) {
                // parallel; collinear overlap hits at the nearer endpoint
                if (sign((p.x - v.x) * d.y - (p.y - v.y) * d.x) != 0) continue;
                Rational dd = d.x * d.x + d.y * d.y;
                for (const Point* e : {&p, &q}) {
                    Rational t = ((e->x - v.x) * d.x + (e->y - v.y) * d.y) / dd;
                    if (sign(t) > 0 && (!best_t || cmp(t, *best_t) < 0)) best_t = t;
                }
                continue;
            }
            Rational t = ((p.x - v.x) * ey - (p.y - v.y) * ex) / denom;
            Rational s = ((p.x - v.x) * d.y - (p.y - v.y) * d.x) / denom;
            if (sign(t) <= 0 || sign(s) < 0 || cmp(s, Rational(1)) > 0) continue;
            if (!best_t || cmp(t, *best_t) < 0) best_t = t;
        }
    }
    if (!best_t) return std::nullopt;
    return Point{v.x + *best_t * d.x, v.y + *best_t * d.y};
}

}  // namespace

std::vector<Point> steiner_points(const PolygonWithHoles& region, SteinerLevel level) {
    std::vector<Point> out;
    if (level == SteinerLevel::None) return out;

    auto cycles = boundary_cycles(region);
    std::set<Point> verts;
    for (const auto& cyc : cycles)
        for (const Point& p : cyc) verts.insert(p);

    // maximal extension segments (reflex vertex -> far hit)
    std::vector<Segment> extensions;
    for (const auto& cyc : cycles) {
        std::size_t n = cyc.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& prev = cyc[(i + n - 1) % n];
            const Point& v = cyc[i];
            const Point& next = cyc[(i + 1) % n];
            if (sign(cross(prev, v, next)) >= 0) continue;  // not reflex
            // extend both incident edges past v
            for (const Point* from : {&prev, &next}) {
                Point d{v.x - from->x, v.y - from->y};
                if (auto hit = shoot_ray(v, d, cycles)) extensions.push_back({v, *hit});
            }
        }
    }

    std::set<Point> emit;
    for (const auto& e : extensions)
        if (!verts.count(e.b)) emit.insert(e.b);

    if (level == SteinerLevel::ExtensionIntersections) {
        for (std::size_t i = 0; i < extensions.size(); ++i) {
            for (std::size_t j = i + 1; j < extensions.size(); ++j) {
                auto x = line_intersection(extensions[i].a, extensions[i].b, extensions[j].a,
                                           extensions[j].b);
                if (!x) continue;
                if (!on_segment(*x, extensions[i].a, extensions[i].b) ||
                    !on_segment(*x, extensions[j].a, extensions[j].b))
                    continue;
                if (verts.count(*x)) continue;
                if (point_in_region(*x, region) != PointLocation::Interior) continue;
                emit.insert(*x);
            }
        }
    }
    out.assign(emit.begin(), emit.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// > 0 iff d lies strictly inside the circumcircle of CCW triangle (a, b, c)
int incircle(const Point& a, const Point& b, const Point& c, const Point& d) {
    Rational ax = a.x - d.x, ay = a.y - d.y;
    Rational bx = b.x - d.x, by = b.y - d.y;
    Rational cx = c.x - d.x, cy = c.y - d.y;
    Rational az = ax * ax + ay * ay;
    Rational bz = bx * bx + by * by;
    Rational cz = cx * cx + cy * cy;
    Rational det = ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx) + az * (bx * cy - by * cx);
    return sign(det);
}

struct MeshBuilder {
    std::vector<Point> points;
    std::map<Point, int> index_of;
    std::vector<std::array<int, 3>> tris;

    int add_point(const Point& p) {
        auto it = index_of.find(p);
        if (it != index_of.end()) return it->second;
        int id = static_cast<int>(points.size());
        points.push_back(p);
        index_of.emplace(p, id);
        return id;
    }

    // split every triangle that has point id strictly inside or on an open edge
    void insert_point(int id) {
        const Point& p = points[id];
        double px = to_double(p.x), py = to_double(p.y);
        std::size_t n = tris.size();
        for (std::size_t t = 0; t < n; ++t) {
            auto [a, b, c] = tris[t];
            if (a == id || b == id || c == id) continue;
            const Point &pa = points[a], &pb = points[b], &pc = points[c];
            // bbox prefilter
            double lo_x = std::min({to_double(pa.x), to_double(pb.x), to_double(pc.x)}) - 1e-6;
            double hi_x = std::max({to_double(pa.x), to_double(pb.x), to_double(pc.x)}) + 1e-6;
            double lo_y = std::min({to_double(pa.y), to_double(pb.y), to_double(pc.y)}) - 1e-6;
            double hi_y = std::max({to_double(pa.y), to_double(pb.y), to_double(pc.y)}) + 1e-6;
            if (px < lo_x || px > hi_x || py < lo_y || py > hi_y) continue;
            int s0 = sign(cross(pa, pb, p));
            int s1 = sign(cross(pb, pc, p));
            int s2 = sign(cross(pc, pa, p));
            if (s0 < 0 || s1 < 0 || s2 < 0) continue;  // outside
            if (s0 > 0 && s1 > 0 && s2 > 0) {
                // strictly inside: 3-split
                tris[t] = {a, b, id};
                tris.push_back({b, c, id});
                tris.push_back({c, a, id});
            } else if (s0 == 0) {
                tris[t] = {a, id, c};
                tris.push_back({id, b, c});
            } else if (s1 == 0) {
                tris[t] = {b, id, a};
                tris.push_back({id, c, a});
            } else {
                tris[t] = {c, id, b};
                tris.push_back({id, a, b});
            }
        }
    }
};

}  // namespace

TriangulationMesh triangulate(const PolygonWithHoles& region,
                              const std::vector<Point>& extra_points) {
    for (const Point& p : extra_points)
        if (point_in_region(p, region) == PointLocation::Outside)
            throw PointOutsideRegion("extra point " + p.str() + " lies outside the region");

    MeshBuilder mb;
    auto cycles = boundary_cycles(region);
    for (const auto& cyc : cycles)
        for (const Point& p : cyc) mb.add_point(p);
    for (const Point& p : extra_points) mb.add_point(p);

    for (const Triangle& t : earclip_region(region)) {
        std::array<int, 3> idx{mb.add_point(t[0]), mb.add_point(t[1]), mb.add_point(t[2])};
        mb.tris.push_back(idx);
    }
    // conform: every point becomes a vertex of every triangle it touches
    // (repairs earclip T-junctions and inserts the extra points)
    for (int id = 0; id < static_cast<int>(mb.points.size()); ++id) mb.insert_point(id);

    TriangulationMesh mesh;
    mesh.points = mb.points;
    mesh.triangles = std::move(mb.tris);

    // constrained edges: consecutive mesh points along each boundary edge
    for (const auto& cyc : cycles) {
        std::size_t n = cyc.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& a = cyc[i];
            const Point& b = cyc[(i + 1) % n];
            std::vector<std::pair<Rational, int>> on_edge;
            for (int id = 0; id < static_cast<int>(mesh.points.size()); ++id) {
                const Point& p = mesh.points[id];
                if (!on_segment(p, a, b)) continue;
                Rational t = (b.x != a.x) ? Rational((p.x - a.x) / (b.x - a.x))
                                          : Rational((p.y - a.y) / (b.y - a.y));
                on_edge.emplace_back(t, id);
            }
            std::sort(on_edge.begin(), on_edge.end(),
                      [](const auto& l, const auto& r) { return cmp(l.first, r.first) < 0; });
            for (std::size_t k = 0; k + 1 < on_edge.size(); ++k)
                mesh.constrained_edges.insert({std::min(on_edge[k].second, on_edge[k + 1].second),
                                               std::max(on_edge[k].second, on_edge[k + 1].second)});
        }
    }

    // best-effort Delaunay: Lawson flips on unconstrained interior edges
    auto edge_key = [](int a, int b) { return std::pair<int, int>{std::min(a, b), std::max(a, b)}; };
    long rounds = 40;
    bool flipped = true;
    while (flipped && rounds-- > 0) {
        flipped = false;
        std::map<std::pair<int, int>, std::vector<int>> edge_tris;
        for (int t = 0; t < static_cast<int>(mesh.triangles.size()); ++t)
            for (int e = 0; e < 3; ++e)
                edge_tris[edge_key(mesh.triangles[t][e], mesh.triangles[t][(e + 1) % 3])]
                    .push_back(t);
        std::vector<char> dirty(mesh.triangles.size(), 0);
        for (const auto& [key, ts] : edge_tris) {
            if (ts.size() != 2 || mesh.constrained_edges.count(key)) continue;
            int t1 = ts[0], t2 = ts[1];
            if (dirty[t1] || dirty[t2]) continue;  // edge map stale for these
            auto opposite = [&](int t) {
                for (int e = 0; e < 3; ++e) {
                    int v = mesh.triangles[t][e];
                    if (v != key.first && v != key.second) return v;
                }
                return -1;
            };
            int c = opposite(t1), d = opposite(t2);
            if (c < 0 || d < 0 || c == d) continue;
            const Point &pa = mesh.points[key.first], &pb = mesh.points[key.second];
            const Point &pc = mesh.points[c], &pd = mesh.points[d];
            // flip only when the quad is strictly convex (diagonals cross)
            if (!segments_cross_properly(pa, pb, pc, pd)) continue;
            // orient the shared edge so (a, b, c) is CCW
            int a = key.first, b = key.second;
            if (sign(cross(pa, pb, pc)) < 0) std::swap(a, b);
            const Point &qa = mesh.points[a], &qb = mesh.points[b];
            if (incircle(qa, qb, pc, pd) <= 0) continue;
            mesh.triangles[t1] = {a, d, c};
            mesh.triangles[t2] = {d, b, c};
            dirty[t1] = dirty[t2] = 1;
            flipped = true;
        }
    }

    // adjacency
    std::map<std::pair<int, int>, std::vector<int>> edge_tris;
    for (int t = 0; t < static_cast<int>(mesh.triangles.size()); ++t)
        for (int e = 0; e < 3; ++e)
            edge_tris[edge_key(mesh.triangles[t][e], mesh.triangles[t][(e + 1) % 3])].push_back(t);
    mesh.adjacency.assign(mesh.triangles.size(), {-1, -1, -1});
    for (int t = 0; t < static_cast<int>(mesh.triangles.size()); ++t) {
        for (int e = 0; e < 3; ++e) {
            const auto& ts = edge_tris[edge_key(mesh.triangles[t][e], mesh.triangles[t][(e + 1) % 3])];
            for (int other : ts)
                if (other != t) mesh.adjacency[t][e] = other;
        }
    }
    return mesh;
}

}  // namespace cover
