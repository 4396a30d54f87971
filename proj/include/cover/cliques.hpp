#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cover/graph.hpp"

namespace cover {

// Heuristic vertex clique cover: greedy clique growth seeded at uncovered
// vertices of minimum remaining degree, then one dissolve pass that deletes a
// clique when all of its privately covered vertices fit into other cliques.
// Deterministic (ties by vertex/clique id); `seed` is reserved for future
// randomized tie-breaking and does not change the result today.
std::vector<std::vector<int>> clique_cover(const BitGraph& g, std::uint64_t seed);

// Bron-Kerbosch with pivoting. Calls emit for every maximal clique (vertices
// ascending); enumeration stops when emit returns false.
void maximal_cliques(const BitGraph& g, const std::function<bool(const std::vector<int>&)>& emit);

}  // namespace cover
