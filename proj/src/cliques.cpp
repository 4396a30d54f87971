#include "cover/cliques.hpp"

#include <algorithm>

namespace cover {

std::vector<std::vector<int>> clique_cover(const BitGraph& g, std::uint64_t seed) {
    (void)seed;
    int n = g.size();
    std::vector<std::vector<int>> cliques;
    if (n == 0) return cliques;
    std::vector<char> covered(n, 0);
    int uncovered = n;

    VertexSet uncov = VertexSet::all(n);
    while (uncovered > 0) {
        // seed: uncovered vertex with minimum remaining degree (ties by id)
        int best = -1, best_deg = n + 1;
        for (int v = 0; v < n; ++v) {
            if (covered[v]) continue;
            int d = uncov.count_and(g.row(v));
            if (d < best_deg) {
                best_deg = d;
                best = v;
            }
        }
        std::vector<int> clique{best};
        VertexSet cand = VertexSet::all(n);
        cand = cand.intersect(g.row(best));
        cand.erase(best);
        while (!cand.empty()) {
            // candidate keeping the most future candidates (ties by id)
            int pick = -1, pick_common = -1;
            cand.for_each([&](int v) {
                int common = cand.count_and(g.row(v));
                if (common > pick_common) {
                    pick_common = common;
                    pick = v;
                }
            });
            clique.push_back(pick);
            cand = cand.intersect(g.row(pick));
            cand.erase(pick);
        }
        std::sort(clique.begin(), clique.end());
        for (int v : clique)
            if (!covered[v]) {
                covered[v] = 1;
                uncov.erase(v);
                --uncovered;
            }
        cliques.push_back(std::move(clique));
    }

    // dissolve pass: drop a clique when every vertex it covers privately fits
    // into some other clique; process small cliques first (most dissolvable)
    std::vector<int> order(cliques.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return cliques[a].size() < cliques[b].size(); });
    std::vector<int> cover_count(n, 0);
    for (const auto& c : cliques)
        for (int v : c) ++cover_count[v];
    std::vector<char> dead(cliques.size(), 0);

    for (int ci : order) {
        std::vector<std::pair<int, int>> moves;  // (vertex, target clique)
        bool ok = true;
        for (int v : cliques[ci]) {
            if (cover_count[v] > 1) continue;  // covered elsewhere already
            int target = -1;
            for (std::size_t cj = 0; cj < cliques.size() && target < 0; ++cj) {
                if (dead[cj] || cj == static_cast<std::size_t>(ci)) continue;
                bool fits = true;
                for (int u : cliques[cj])
                    if (!g.edge(u, v)) {
                        fits = false;
                        break;
                    }
                if (fits) target = static_cast<int>(cj);
            }
            if (target < 0) {
                ok = false;
                break;
            }
            moves.emplace_back(v, target);
        }
        if (!ok) continue;
        for (auto [v, cj] : moves) {
            cliques[cj].push_back(v);
            std::sort(cliques[cj].begin(), cliques[cj].end());
            ++cover_count[v];
        }
        for (int v : cliques[ci]) --cover_count[v];
        dead[ci] = 1;
    }

    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < cliques.size(); ++i)
        if (!dead[i]) out.push_back(std::move(cliques[i]));
    return out;
}

namespace {

void bron_kerbosch(const BitGraph& g, std::vector<int>& r, VertexSet p, VertexSet x, bool& go,
                   const std::function<bool(const std::vector<int>&)>& emit) {
    if (!go) return;
    if (p.empty() && x.empty()) {
        std::vector<int> clique = r;
        std::sort(clique.begin(), clique.end());
        if (!emit(clique)) go = false;
        return;
    }
    // pivot: vertex of P ∪ X maximizing |P ∩ N(u)|
    int pivot = -1, best = -1;
    for (const VertexSet* s : {&p, &x}) {
        s->for_each([&](int u) {
            int c = p.count_and(g.row(u));
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
    }
    VertexSet ext = p;
    if (pivot >= 0) {
        VertexSet masked(static_cast<int>(ext.w.size()));
        const std::uint64_t* row = g.row(pivot);
        for (std::size_t i = 0; i < ext.w.size(); ++i) masked.w[i] = ext.w[i] & ~row[i];
        ext = masked;
    }
    std::vector<int> order;
    ext.for_each([&](int v) { order.push_back(v); });
    for (int v : order) {
        if (!go) return;
        r.push_back(v);
        bron_kerbosch(g, r, p.intersect(g.row(v)), x.intersect(g.row(v)), go, emit);
        r.pop_back();
        p.erase(v);
        x.insert(v);
    }
}

}  // namespace

void maximal_cliques(const BitGraph& g, const std::function<bool(const std::vector<int>&)>& emit) {
    if (g.size() == 0) return;
    std::vector<int> r;
    bool go = true;
    bron_kerbosch(g, r, VertexSet::all(g.size()), VertexSet((g.size() + 63) / 64), go, emit);
}

}  // namespace cover
