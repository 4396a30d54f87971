#include "cover/setcover.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cover/errors.hpp"
#include "cover/rng.hpp"

namespace cover {
namespace {

// pieces covering each witness
std::vector<std::vector<int>> invert(const SetCoverInstance& sc) {
    std::vector<std::vector<int>> by_witness(sc.witness_count);
    for (std::size_t p = 0; p < sc.covers.size(); ++p)
        for (int w : sc.covers[p]) by_witness[w].push_back(static_cast<int>(p));
    return by_witness;
}

// greedy completion over an uncovered set; extends `sel` and `cover_count`
void complete(const SetCoverInstance& sc, const std::vector<std::vector<int>>& by_witness,
              std::vector<char>& sel, std::vector<int>& cover_count) {
    std::vector<int> uncovered;
    for (std::size_t w = 0; w < sc.witness_count; ++w)
        if (cover_count[w] == 0) uncovered.push_back(static_cast<int>(w));
    while (!uncovered.empty()) {
        // candidates: pieces touching any uncovered witness
        std::set<int> cands;
        for (int w : uncovered) {
            if (by_witness[w].empty())
                throw InfeasibleSetCover("witness " + std::to_string(w) + " is uncoverable");
            for (int p : by_witness[w]) cands.insert(p);
        }
        int best = -1, best_gain = 0;
        for (int p : cands) {
            if (sel[p]) continue;
            int gain = 0;
            for (int w : sc.covers[p])
                if (cover_count[w] == 0) ++gain;
            if (gain > best_gain) {  // ties by lowest index via ascending scan
                best_gain = gain;
                best = p;
            }
        }
        if (best < 0)
            throw InfeasibleSetCover("no piece adds coverage but witnesses remain uncovered");
        sel[best] = 1;
        for (int w : sc.covers[best]) ++cover_count[w];
        std::vector<int> still;
        for (int w : uncovered)
            if (cover_count[w] == 0) still.push_back(w);
        uncovered = std::move(still);
    }
}

std::vector<int> selection_to_indices(const std::vector<char>& sel) {
    std::vector<int> out;
    for (std::size_t p = 0; p < sel.size(); ++p)
        if (sel[p]) out.push_back(static_cast<int>(p));
    return out;
}

}  // namespace

std::vector<int> greedy_set_cover(const SetCoverInstance& sc) {
    return greedy_complete(sc, {});
}

std::vector<int> greedy_complete(const SetCoverInstance& sc, std::vector<int> init) {
    auto by_witness = invert(sc);
    std::vector<char> sel(sc.covers.size(), 0);
    std::vector<int> cover_count(sc.witness_count, 0);
    for (int p : init) {
        if (sel[p]) continue;
        sel[p] = 1;
        for (int w : sc.covers[p]) ++cover_count[w];
    }
    complete(sc, by_witness, sel, cover_count);
    return selection_to_indices(sel);
}

std::vector<int> anneal_set_cover(const SetCoverInstance& sc, std::vector<int> init,
                                  const AnnealSchedule& schedule, std::uint64_t seed) {
    auto by_witness = invert(sc);
    std::vector<char> sel(sc.covers.size(), 0);
    std::vector<int> cover_count(sc.witness_count, 0);
    for (int p : init) {
        if (sel[p]) continue;
        sel[p] = 1;
        for (int w : sc.covers[p]) ++cover_count[w];
    }
    for (std::size_t w = 0; w < sc.witness_count; ++w)
        if (cover_count[w] == 0) throw InfeasibleSetCover("anneal init does not cover witness");

    std::vector<int> cur = selection_to_indices(sel);
    std::vector<int> best = cur;
    long steps = schedule.steps >= 0 ? schedule.steps
                                     : 50 * static_cast<long>(sc.covers.size());
    if (steps == 0 || cur.empty()) return best;
    Rng rng = make_rng(seed);
    double ratio = schedule.t_end / schedule.t_start;

    for (long step = 0; step < steps; ++step) {
        double t = schedule.t_start *
                   std::pow(ratio, steps > 1 ? static_cast<double>(step) / (steps - 1) : 1.0);
        // propose: drop one random selected piece, greedily re-cover
        int victim = cur[rng_below(rng, cur.size())];
        std::vector<char> nsel = sel;
        std::vector<int> ncount = cover_count;
        nsel[victim] = 0;
        for (int w : sc.covers[victim]) --ncount[w];
        complete(sc, by_witness, nsel, ncount);
        std::vector<int> next = selection_to_indices(nsel);
        long delta = static_cast<long>(next.size()) - static_cast<long>(cur.size());
        bool accept = delta <= 0 || rng_unit(rng) < std::exp(-static_cast<double>(delta) / t);
        if (!accept) continue;
        sel = std::move(nsel);
        cover_count = std::move(ncount);
        cur = std::move(next);
        if (cur.size() < best.size()) best = cur;
    }
    return best;
}

}  // namespace cover
