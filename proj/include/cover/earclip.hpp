#pragma once

#include <array>
#include <vector>

#include "cover/polygon.hpp"

namespace cover {

// CCW triangle, the unit every region decomposition bottoms out in.
using Triangle = std::array<Point, 3>;

inline Rational triangle_area(const Triangle& t) {
    return cross(t[0], t[1], t[2]) / 2;
}

inline Point triangle_centroid(const Triangle& t) {
    return Point{(t[0].x + t[1].x + t[2].x) / 3, (t[0].y + t[1].y + t[2].y) / 3};
}

// Ear-clipping triangulation of a polygon with holes. Holes are spliced into
// the outer boundary through bridge diagonals, then the resulting weakly
// simple cycle is clipped. All predicates are exact; the triangles tile the
// region with pairwise disjoint interiors and their areas sum to area(region).
std::vector<Triangle> earclip_region(const PolygonWithHoles& region);

// Same, for a hole-free cycle given directly (any orientation).
std::vector<Triangle> earclip_simple(std::vector<Point> cycle);

}  // namespace cover
