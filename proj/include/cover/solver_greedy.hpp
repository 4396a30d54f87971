#pragma once

#include <cstdint>

#include "cover/instance.hpp"

namespace cover {

// Baseline: triangulate, then repeatedly merge random adjacent faces whose
// union is convex, until no adjacent pair merges. One run, one seed.
Solution solve_greedy_merge(const Instance& inst, std::uint64_t seed);

// Best of `restarts` independent runs (seed streams derived from seed);
// ties broken by the earliest restart.
Solution solve_greedy_merge_best(const Instance& inst, std::uint64_t seed, int restarts);

}  // namespace cover
