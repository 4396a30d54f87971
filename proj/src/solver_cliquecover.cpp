#include "cover/solver_cliquecover.hpp"

#include <algorithm>

#include "cover/errors.hpp"

namespace cover {

std::vector<ConvexPolygon> repair_pieces(const std::vector<std::vector<int>>& cliques,
                                         const TriangulationMesh& mesh, const BitGraph& g,
                                         const RegionCells& cells) {
    std::vector<ConvexPolygon> out;
    for (const auto& clique : cliques) {
        std::vector<int> rest = clique;
        while (!rest.empty()) {
            ConvexPolygon hull = clique_to_piece(rest, mesh);
            if (cells.contains_piece(hull.vertices)) {
                out.push_back(std::move(hull));
                break;
            }
            // grow a contained sub-clique greedily from the first triangle
            std::vector<int> sub{rest.front()};
            ConvexPolygon sub_hull = clique_to_piece(sub, mesh);
            for (std::size_t i = 1; i < rest.size(); ++i) {
                int cand = rest[i];
                bool adjacent = true;
                for (int t : sub)
                    if (!g.edge(t, cand)) {
                        adjacent = false;
                        break;
                    }
                if (!adjacent) continue;
                std::vector<int> trial = sub;
                trial.push_back(cand);
                ConvexPolygon trial_hull = clique_to_piece(trial, mesh);
                if (!cells.contains_piece(trial_hull.vertices)) continue;
                sub = std::move(trial);
                sub_hull = std::move(trial_hull);
            }
            out.push_back(std::move(sub_hull));
            std::vector<int> next;
            for (int t : rest)
                if (std::find(sub.begin(), sub.end(), t) == sub.end()) next.push_back(t);
            rest = std::move(next);
        }
    }
    return out;
}

std::vector<ConvexPolygon> prune_redundant(std::vector<ConvexPolygon> pieces,
                                           const PolygonWithHoles& region) {
    {
        Residual check(region);
        for (const auto& p : pieces) check.subtract(p.vertices);
        if (!check.empty()) throw NotACover("prune_redundant: input pieces do not cover the region");
    }
    std::vector<std::size_t> order(pieces.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return cmp(area(pieces[a]), area(pieces[b])) > 0;
    });
    std::vector<char> kept(pieces.size(), 1);
    for (std::size_t idx : order) {
        // pieces are contained, so dropping idx uncovers exactly
        // piece \ union(other kept pieces) — a local check
        Residual local(std::vector<ConvexCell>{pieces[idx].vertices});
        for (std::size_t j = 0; j < pieces.size() && !local.empty(); ++j)
            if (j != idx && kept[j]) local.subtract(pieces[j].vertices);
        if (local.empty()) kept[idx] = 0;
    }
    std::vector<ConvexPolygon> out;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (kept[i]) out.push_back(std::move(pieces[i]));
    return out;
}

Solution solve_cliquecover(const Instance& inst, SteinerLevel policy, std::uint64_t seed) {
    TriangulationMesh mesh = triangulate(inst.region, steiner_points(inst.region, policy));
    RegionCells cells(inst.region);
    BitGraph g = build_visibility_graph(mesh, inst.region, cells);
    std::vector<std::vector<int>> cover = clique_cover(g, seed);
    std::vector<ConvexPolygon> pieces = repair_pieces(cover, mesh, g, cells);
    pieces = prune_redundant(std::move(pieces), inst.region);
    Solution sol;
    sol.instance_name = inst.name;
    for (auto& p : pieces) sol.pieces.push_back(std::move(p));
    return sol;
}

}  // namespace cover
