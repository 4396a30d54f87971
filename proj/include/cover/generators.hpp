#pragma once

#include <cstdint>

#include "cover/instance.hpp"
#include "cover/rng.hpp"

namespace cover {

struct CheeseParams {
    long target_holes = 10;
    long field_width = 100;
    long field_height = 100;
    int hole_vertex_min = 3;
    int hole_vertex_max = 6;
    long hole_radius = 3;
    std::uint64_t seed = 0;
};

struct MazeParams {
    int grid_cols = 4;
    int grid_rows = 4;
    long cell_size = 10;
    Rational removal_fraction = rat(1, 4);
    Rational perturbation_fraction = rat(1, 2);
    long perturbation_magnitude = 2;
    std::uint64_t seed = 0;
};

// Simple polygon on k integer points sampled from the square of half-width
// `radius` around `center`, untangled by 2-opt until no edges cross.
// Degenerate samples are redrawn; throws GeneratorStall after 1000 retries.
SimplePolygon gen_hole(const Point& center, int k, long radius, Rng& rng);

// Random holes in a field, outer boundary from the inflated hull of the hole
// centers. Deterministic in params.seed.
Instance gen_cheese(const CheeseParams& params);

// Same pipeline with every hole replaced by the convex hull of its points.
Instance gen_ccheese(const CheeseParams& params);

// Grid of square obstacles inside a rectangle, some removed, some perturbed
// outward, corridors of width cell_size in between.
Instance gen_maze(const MazeParams& params);

}  // namespace cover
