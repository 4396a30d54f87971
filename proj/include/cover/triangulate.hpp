#pragma once

#include <array>
#include <set>
#include <utility>
#include <vector>

#include "cover/earclip.hpp"
#include "cover/polygon.hpp"

namespace cover {

enum class SteinerLevel { None, EdgeExtensions, ExtensionIntersections };

// Steiner candidates for a region: for every boundary edge incident to a
// reflex vertex, the far endpoint of its maximal extension past that vertex
// (first hit with the boundary). ExtensionIntersections additionally emits
// pairwise intersections of the extension segments that fall in the region
// interior. Deduplicated against the region vertices, sorted by (x, y).
std::vector<Point> steiner_points(const PolygonWithHoles& region, SteinerLevel level);

struct TriangulationMesh {
    std::vector<Point> points;
    std::vector<std::array<int, 3>> triangles;  // CCW index triples
    // adjacency[t][e]: triangle sharing edge (triangles[t][e], triangles[t][(e+1)%3]), or -1
    std::vector<std::array<int, 3>> adjacency;
    std::set<std::pair<int, int>> constrained_edges;  // normalized (lo, hi) index pairs

    const Point& corner(int t, int e) const { return points[triangles[t][e]]; }
    Triangle triangle_points(int t) const {
        return Triangle{points[triangles[t][0]], points[triangles[t][1]], points[triangles[t][2]]};
    }
};

// Conforming triangulation of the region over its vertices plus extra_points
// (merged by exact equality; points on a boundary edge split that edge).
// Boundary edges are honored as constraints; Delaunay quality is best-effort.
// Throws PointOutsideRegion if an extra point is outside the closed region.
TriangulationMesh triangulate(const PolygonWithHoles& region, const std::vector<Point>& extra_points);

}  // namespace cover
