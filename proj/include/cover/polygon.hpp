#pragma once

#include <vector>

#include "cover/geometry.hpp"

namespace cover {

// Simple polygon given by its vertex cycle. Orientation is whatever the
// vertex order says; signed_area tells you which way it goes.
struct SimplePolygon {
    std::vector<Point> vertices;

    SimplePolygon() = default;
    explicit SimplePolygon(std::vector<Point> vs) : vertices(std::move(vs)) {}

    std::size_t size() const { return vertices.size(); }
    const Point& operator[](std::size_t i) const { return vertices[i]; }
};

// Region to cover: CCW outer boundary minus CW holes. Holes lie strictly
// inside the outer boundary and are pairwise disjoint.
struct PolygonWithHoles {
    SimplePolygon outer;
    std::vector<SimplePolygon> holes;
};

// Weakly convex CCW polygon with positive area; collinear consecutive
// vertices are allowed (lenient verification semantics).
struct ConvexPolygon {
    std::vector<Point> vertices;

    ConvexPolygon() = default;
    explicit ConvexPolygon(std::vector<Point> vs) : vertices(std::move(vs)) {}

    std::size_t size() const { return vertices.size(); }
    const Point& operator[](std::size_t i) const { return vertices[i]; }
};

Rational signed_area(const std::vector<Point>& vertices);
inline Rational signed_area(const SimplePolygon& poly) { return signed_area(poly.vertices); }
inline Rational area(const ConvexPolygon& poly) { return signed_area(poly.vertices); }
Rational area(const PolygonWithHoles& region);

// Weak convexity: after orienting CCW, every cyclic triple turns left or is
// straight, and the boundary winds exactly once. Throws InvalidPolygon on
// fewer than 3 points.
bool is_convex(const std::vector<Point>& poly);
inline bool is_convex(const ConvexPolygon& poly) { return is_convex(poly.vertices); }

// Strict CCW hull of the point set; collinear boundary points dropped.
// Throws DegenerateHull when all points are collinear.
ConvexPolygon convex_hull(std::vector<Point> points);

// Drop collinear and duplicate vertices, rotate so the lexicographically
// smallest vertex comes first. Used before hashing/equality of pieces.
std::vector<Point> canonicalize(const std::vector<Point>& poly);

// Exhaustive simplicity check: consecutive vertices distinct, non-adjacent
// edges disjoint, adjacent edges meet only at the shared endpoint.
bool is_simple_polygon(const std::vector<Point>& vertices);

// Point vs. simple polygon boundary-inclusive classification.
enum class PointLocation { Interior, Boundary, Outside };
PointLocation locate_point(const Point& p, const std::vector<Point>& polygon);

// Validates region invariants (simple boundaries, orientation irrelevant on
// input, holes strictly inside outer and pairwise disjoint). Throws
// InvalidInstance with a description on failure. Returns the region with
// orientations normalized (outer CCW, holes CW).
PolygonWithHoles validate_region(PolygonWithHoles region);

// Bounding box helper used by the double-precision prefilters.
struct BBox {
    double min_x, min_y, max_x, max_y;
    bool overlaps(const BBox& o) const {
        return min_x <= o.max_x && o.min_x <= max_x && min_y <= o.max_y && o.min_y <= max_y;
    }
};
BBox bbox_of(const std::vector<Point>& pts);

}  // namespace cover
