#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cover/rational.hpp"

namespace cover {

// Contest rule: a team scoring T pieces against the best-known B earns
// (B/T)^2; no (valid) submission earns 0. Throws InconsistentBest when T < B.
Rational score_instance(long long best, std::optional<long long> team);

struct TeamScore {
    std::string name;
    std::map<std::string, long long> counts;  // only instances with a valid submission
    std::map<std::string, Rational> scores;   // every instance, 0 when absent
    Rational total = 0;
};

struct ScoreTable {
    std::vector<std::string> instances;        // sorted by name
    std::map<std::string, long long> best;     // instances with >= 1 valid submission
    std::vector<TeamScore> teams;              // descending total, ties by name
    std::vector<std::string> warnings;         // invalid submissions (treated as absent)
};

// instance_dir: *.json instances. solutions_root: one subdirectory per team
// holding *.json solutions, matched to instances by their instance_name.
// Verification runs on a worker pool bounded by COVER_THREADS; the table is
// deterministic regardless of pool size. Throws MissingInstance when a
// solution names an unknown instance.
ScoreTable build_leaderboard(const std::string& instance_dir, const std::string& solutions_root);

std::string leaderboard_table(const ScoreTable& table);

// {"teams":[{"name":..., "total":"B²/T² sums as rational string",
//  "per_instance":{name: score-string}}], "best":{name: count}}
std::string leaderboard_json(const ScoreTable& table);

// COVER_THREADS (default: hardware concurrency, min 1)
unsigned worker_pool_size();

// Run job(i) for i in [0, n) on `threads` workers; results land by index, so
// output is independent of scheduling.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& job);

}  // namespace cover
