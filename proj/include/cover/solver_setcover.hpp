#pragma once

#include <cstdint>
#include <vector>

#include "cover/instance.hpp"
#include "cover/setcover.hpp"
#include "cover/triangulate.hpp"

namespace cover {

// Candidate pieces for witness-based covering: convex, contained in the
// region, deduplicated by canonical vertex list. Every collection ends with
// one piece per base-mesh triangle, so any witness inside the region is
// coverable.
struct Collection {
    std::vector<ConvexPolygon> pieces;
};

// Pieces from maximal cliques of the triangle visibility graph (repaired to
// contained hulls), capped at `cap` clique-derived pieces. Deterministic.
Collection gen_collection_cliques(const Instance& inst, SteinerLevel policy, std::size_t cap);

// `count` randomized pieces: seed at an uncovered-biased random triangle and
// grow the hull with candidate points (region vertices, edge-extension
// Steiner points, random boundary points), keeping only contained hulls;
// a growth attempt stops after 30 consecutive rejections.
Collection gen_collection_bloat(const Instance& inst, std::size_t count, std::uint64_t seed);

// Witnesses: centroids of the plain (no Steiner) triangulation.
std::vector<Point> place_witnesses(const Instance& inst);

// Fix-up witnesses: centroids of a triangulation of every residual component.
// An empty residual yields no witnesses.
std::vector<Point> place_witnesses(const Instance& inst,
                                   const std::vector<PolygonWithHoles>& residual);

// covers[p] = witnesses inside the closed piece p, indices ascending.
SetCoverInstance build_setcover(const Collection& col, const std::vector<Point>& witnesses);

enum class CollectionGen { Cliques, Bloat, Both };

struct SetCoverConfig {
    CollectionGen gen = CollectionGen::Both;
    std::size_t cap = 4000;         // clique-derived piece cap
    std::size_t bloat_count = 150;  // bloat growth attempts
    SteinerLevel policy = SteinerLevel::None;
    AnnealSchedule schedule;
    std::uint64_t seed = 0;
};

// Collection -> witnesses -> greedy -> anneal, then an exact fix-up loop:
// while the selected pieces leave residual area, add witnesses at residual
// cell centroids and re-cover. Ends with redundancy pruning.
Solution solve_setcover(const Instance& inst, const SetCoverConfig& cfg);

}  // namespace cover
