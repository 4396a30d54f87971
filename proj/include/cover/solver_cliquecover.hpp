#pragma once

#include <cstdint>

#include "cover/cliques.hpp"
#include "cover/instance.hpp"
#include "cover/triangulate.hpp"
#include "cover/visibility.hpp"

namespace cover {

// One contained piece set per clique: a clique whose full hull is contained
// maps to that hull; otherwise the clique splits greedily into sub-cliques
// whose hulls are contained (singletons always pass). Output covers every
// triangle of every input clique.
std::vector<ConvexPolygon> repair_pieces(const std::vector<std::vector<int>>& cliques,
                                         const TriangulationMesh& mesh, const BitGraph& g,
                                         const RegionCells& cells);

// Drop pieces (largest first) whose region part is covered by the remaining
// set; result is minimal by inclusion. Throws NotACover if the input pieces
// do not cover the region.
std::vector<ConvexPolygon> prune_redundant(std::vector<ConvexPolygon> pieces,
                                           const PolygonWithHoles& region);

// triangulation -> visibility graph -> clique cover -> repair -> prune
Solution solve_cliquecover(const Instance& inst, SteinerLevel policy, std::uint64_t seed);

}  // namespace cover
