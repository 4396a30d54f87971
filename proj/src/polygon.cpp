#include "cover/polygon.hpp"

#include <algorithm>
#include <cmath>

#include "cover/errors.hpp"

namespace cover {

Rational signed_area(const std::vector<Point>& vertices) {
    Rational twice = 0;
    std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = vertices[i];
        const Point& b = vertices[(i + 1) % n];
        twice += a.x * b.y - b.x * a.y;
    }
    return twice / 2;
}

Rational area(const PolygonWithHoles& region) {
    Rational total = abs(signed_area(region.outer));
    for (const auto& h : region.holes) total -= abs(signed_area(h));
    return total;
}

bool is_convex(const std::vector<Point>& poly) {
    std::size_t n = poly.size();
    if (n < 3) throw InvalidPolygon("is_convex: fewer than 3 points");
    for (std::size_t i = 0; i < n; ++i) {
        if (poly[i] == poly[(i + 1) % n]) return false;
    }
    Rational a2 = signed_area(poly);
    if (sign(a2) == 0) return false;
    int want = sign(a2) > 0 ? 1 : -1;
    // all turns in one direction (or straight)...
    for (std::size_t i = 0; i < n; ++i) {
        int s = sign(cross(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]));
        if (s != 0 && s != want) return false;
    }
    // ...and exactly one full winding: edge directions sweep each half-turn
    // boundary at most once. A "spiral" with only-left turns winds twice and
    // revisits a direction; detect it by counting sign changes of dy.
    // Simpler and exact: a weakly convex single-winding cycle is simple, so
    // just check simplicity on the canonicalized (collinear-free) cycle.
    std::vector<Point> canon = canonicalize(poly);
    if (canon.size() < 3) return false;
    return is_simple_polygon(canon);
}

ConvexPolygon convex_hull(std::vector<Point> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) throw DegenerateHull("convex_hull: fewer than 3 distinct points");
    std::size_t n = points.size();
    std::vector<Point> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && sign(cross(hull[k - 2], hull[k - 1], points[i])) <= 0) --k;
        hull[k++] = points[i];
    }
    std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
        while (k >= lower && sign(cross(hull[k - 2], hull[k - 1], points[i])) <= 0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) throw DegenerateHull("convex_hull: all points collinear");
    return ConvexPolygon(std::move(hull));
}

std::vector<Point> canonicalize(const std::vector<Point>& poly) {
    // drop consecutive duplicates
    std::vector<Point> pts;
    for (const Point& p : poly) {
        if (pts.empty() || pts.back() != p) pts.push_back(p);
    }
    while (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
    // drop collinear middles (cyclically, to a fixed point)
    bool changed = true;
    while (changed && pts.size() > 2) {
        changed = false;
        for (std::size_t i = 0; i < pts.size() && pts.size() > 2; ++i) {
            std::size_t n = pts.size();
            const Point& a = pts[(i + n - 1) % n];
            const Point& c = pts[(i + 1) % n];
            if (orientation(a, pts[i], c) == Orientation::Collinear) {
                pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (pts.empty()) return pts;
    auto lo = std::min_element(pts.begin(), pts.end());
    std::rotate(pts.begin(), lo, pts.end());
    return pts;
}

bool is_simple_polygon(const std::vector<Point>& v) {
    std::size_t n = v.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == v[(i + 1) % n]) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        Point a = v[i], b = v[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            Point c = v[j], d = v[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // may only touch at the shared endpoint
                const Point& shared = (j == i + 1) ? b : a;
                const Point& far1 = (j == i + 1) ? a : b;
                const Point& far2 = (j == i + 1) ? d : c;
                if (on_segment(far1, c, d) && far1 != shared) return false;
                if (on_segment(far2, a, b) && far2 != shared) return false;
                if (orientation(far1, shared, far2) == Orientation::Collinear &&
                    sign(dot(shared, far1, far2)) > 0)
                    return false;  // edges fold back over each other
            } else {
                if (segments_intersect(a, b, c, d)) return false;
            }
        }
    }
    return true;
}

PointLocation locate_point(const Point& p, const std::vector<Point>& polygon) {
    std::size_t n = polygon.size();
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = polygon[i];
        const Point& b = polygon[(i + 1) % n];
        if (on_segment(p, a, b)) return PointLocation::Boundary;
        // crossing-number ray cast toward +x, half-open in y to dodge vertex hits
        bool a_below = cmp(a.y, p.y) <= 0;
        bool b_below = cmp(b.y, p.y) <= 0;
        if (a_below != b_below) {
            int side = sign(cross(a, b, p));
            if (b_below) side = -side;  // normalize edge direction to upward
            if (side > 0) inside = !inside;
        }
    }
    return inside ? PointLocation::Interior : PointLocation::Outside;
}

BBox bbox_of(const std::vector<Point>& pts) {
    BBox b{1e300, 1e300, -1e300, -1e300};
    for (const Point& p : pts) {
        double x = to_double(p.x), y = to_double(p.y);
        b.min_x = std::min(b.min_x, x);
        b.min_y = std::min(b.min_y, y);
        b.max_x = std::max(b.max_x, x);
        b.max_y = std::max(b.max_y, y);
    }
    // widen so rational points rounded either way stay covered
    b.min_x -= 1e-6;
    b.min_y -= 1e-6;
    b.max_x += 1e-6;
    b.max_y += 1e-6;
    return b;
}

PolygonWithHoles validate_region(PolygonWithHoles region) {
    if (region.outer.size() < 3) throw InvalidInstance("outer boundary has fewer than 3 vertices");
    if (!is_simple_polygon(region.outer.vertices))
        throw InvalidInstance("outer boundary is not a simple polygon");
    if (sign(signed_area(region.outer)) < 0)
        std::reverse(region.outer.vertices.begin(), region.outer.vertices.end());
    for (auto& hole : region.holes) {
        if (hole.size() < 3) throw InvalidInstance("hole has fewer than 3 vertices");
        if (!is_simple_polygon(hole.vertices)) throw InvalidInstance("hole is not a simple polygon");
        if (sign(signed_area(hole)) > 0) std::reverse(hole.vertices.begin(), hole.vertices.end());
        for (const Point& p : hole.vertices) {
            if (locate_point(p, region.outer.vertices) != PointLocation::Interior)
                throw InvalidInstance("hole vertex not strictly inside outer boundary at " + p.str());
        }
        // vertices inside is not enough: an outer vertex inside the hole or a
        // crossing edge would still slip through
        for (std::size_t i = 0; i < hole.size(); ++i) {
            for (std::size_t j = 0; j < region.outer.size(); ++j) {
                if (segments_intersect(hole[i], hole[(i + 1) % hole.size()], region.outer[j],
                                       region.outer[(j + 1) % region.outer.size()]))
                    throw InvalidInstance("hole intersects outer boundary");
            }
        }
    }
    for (std::size_t a = 0; a < region.holes.size(); ++a) {
        for (std::size_t b = a + 1; b < region.holes.size(); ++b) {
            const auto& ha = region.holes[a].vertices;
            const auto& hb = region.holes[b].vertices;
            for (std::size_t i = 0; i < ha.size(); ++i) {
                for (std::size_t j = 0; j < hb.size(); ++j) {
                    if (segments_intersect(ha[i], ha[(i + 1) % ha.size()], hb[j],
                                           hb[(j + 1) % hb.size()]))
                        throw InvalidInstance("holes intersect");
                }
            }
            if (locate_point(ha[0], hb) != PointLocation::Outside ||
                locate_point(hb[0], ha) != PointLocation::Outside)
                throw InvalidInstance("hole nested inside another hole");
        }
    }
    return region;
}

}  // namespace cover
