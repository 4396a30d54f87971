#pragma once

#include <cstdint>
#include <vector>

namespace cover {

// Witness-discretized covering: covers[p] lists the witness indices piece p
// contains (sorted ascending).
struct SetCoverInstance {
    std::size_t witness_count = 0;
    std::vector<std::vector<int>> covers;
};

// Classic greedy: repeatedly take the piece covering the most uncovered
// witnesses, ties by lowest piece index. Throws InfeasibleSetCover when some
// witness is uncoverable. Returns sorted piece indices.
std::vector<int> greedy_set_cover(const SetCoverInstance& sc);

// Greedy completion of a partial selection (same rule, keeps init).
std::vector<int> greedy_complete(const SetCoverInstance& sc, std::vector<int> init);

struct AnnealSchedule {
    double t_start = 2.0;
    double t_end = 0.01;
    long steps = -1;  // -1: 50 * |collection|
};

// Remove-one / greedy-recover neighborhood under Metropolis acceptance with
// geometric temperature decay; returns the best (smallest) feasible selection
// seen. init must cover all witnesses. Deterministic under seed.
std::vector<int> anneal_set_cover(const SetCoverInstance& sc, std::vector<int> init,
                                  const AnnealSchedule& schedule, std::uint64_t seed);

}  // namespace cover
