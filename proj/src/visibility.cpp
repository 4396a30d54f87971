#include "cover/visibility.hpp"

#include <algorithm>

#include "cover/earclip.hpp"

namespace cover {

BitGraph build_visibility_graph(const TriangulationMesh& mesh, const PolygonWithHoles& region,
                                const RegionCells& cells) {
    (void)region;
    int n = static_cast<int>(mesh.triangles.size());
    BitGraph g(n);
    std::vector<Point> centroids(n);
    for (int t = 0; t < n; ++t) centroids[t] = triangle_centroid(mesh.triangle_points(t));

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // cheap exact reject: if the centroid segment properly crosses the
            // boundary, no convex superset of both triangles is contained
            if (cells.segment_crosses_boundary(centroids[i], centroids[j])) continue;
            std::vector<Point> pts;
            pts.reserve(6);
            for (int e = 0; e < 3; ++e) {
                pts.push_back(mesh.corner(i, e));
                pts.push_back(mesh.corner(j, e));
            }
            ConvexPolygon hull = convex_hull(pts);
            if (cells.contains_piece(hull.vertices)) g.add_edge(i, j);
        }
    }
    return g;
}

ConvexPolygon clique_to_piece(const std::vector<int>& clique, const TriangulationMesh& mesh) {
    std::vector<Point> pts;
    pts.reserve(clique.size() * 3);
    for (int t : clique)
        for (int e = 0; e < 3; ++e) pts.push_back(mesh.corner(t, e));
    return convex_hull(pts);
}

}  // namespace cover
