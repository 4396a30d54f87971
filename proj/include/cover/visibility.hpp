#pragma once

#include "cover/graph.hpp"
#include "cover/region_ops.hpp"
#include "cover/triangulate.hpp"

namespace cover {

// Visibility graph over triangles: edge (t1, t2) iff the convex hull of the
// two triangles' vertices is contained in the region. Deterministic.
BitGraph build_visibility_graph(const TriangulationMesh& mesh, const PolygonWithHoles& region,
                                const RegionCells& cells);

// hull of all vertices of the clique's triangles
ConvexPolygon clique_to_piece(const std::vector<int>& clique, const TriangulationMesh& mesh);

}  // namespace cover
