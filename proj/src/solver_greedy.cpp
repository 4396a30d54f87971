#include "cover/solver_greedy.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cover/errors.hpp"
#include "cover/rng.hpp"
#include "cover/triangulate.hpp"

namespace cover {
namespace {

struct Subdivision {
    const TriangulationMesh* mesh;
    std::vector<std::vector<int>> faces;  // CCW vertex-index cycles
    std::vector<char> alive;

    const Point& pt(int id) const { return mesh->points[id]; }
};

// Union of two faces sharing one collinear chain of edges; empty on failure
// (not adjacent, multiple chains, or non-convex union).
std::vector<int> try_merge(const Subdivision& sub, int f, int g) {
    const auto& cf = sub.faces[f];
    const auto& cg = sub.faces[g];
    std::set<std::pair<int, int>> gedges;
    for (std::size_t i = 0; i < cg.size(); ++i)
        gedges.insert({cg[i], cg[(i + 1) % cg.size()]});

    // shared chain: edges of f whose reverse is an edge of g
    std::set<std::pair<int, int>> shared;
    for (std::size_t i = 0; i < cf.size(); ++i) {
        int u = cf[i], v = cf[(i + 1) % cf.size()];
        if (gedges.count({v, u})) shared.insert({u, v});
    }
    if (shared.empty()) return {};  // not edge-adjacent

    // directed edges of the union: each face's edges minus the shared ones
    std::map<int, int> succ;
    std::size_t kept = 0;
    for (std::size_t i = 0; i < cf.size(); ++i) {
        int u = cf[i], v = cf[(i + 1) % cf.size()];
        if (shared.count({u, v})) continue;
        if (succ.count(u)) return {};  // branching vertex: not a simple union
        succ[u] = v;
        ++kept;
    }
    for (std::size_t i = 0; i < cg.size(); ++i) {
        int u = cg[i], v = cg[(i + 1) % cg.size()];
        if (shared.count({v, u})) continue;
        if (succ.count(u)) return {};
        succ[u] = v;
        ++kept;
    }

    // stitch into a single cycle
    std::vector<int> cyc;
    cyc.reserve(kept);
    int start = succ.begin()->first;
    int cur = start;
    do {
        cyc.push_back(cur);
        auto it = succ.find(cur);
        if (it == succ.end()) return {};  // open chain: corrupt input
        cur = it->second;
    } while (cur != start && cyc.size() <= kept);
    if (cyc.size() != kept) return {};  // several cycles: union would have a hole

    // convex iff no right turn anywhere (straight vertices stay for
    // bookkeeping; the union of CCW faces is CCW and simple)
    std::size_t n = cyc.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = sub.pt(cyc[i]);
        const Point& b = sub.pt(cyc[(i + 1) % n]);
        const Point& c = sub.pt(cyc[(i + 2) % n]);
        if (sign(cross(a, b, c)) < 0) return {};
    }
    return cyc;
}

Solution faces_to_solution(const Subdivision& sub, const std::string& name) {
    Solution sol;
    sol.instance_name = name;
    for (std::size_t f = 0; f < sub.faces.size(); ++f) {
        if (!sub.alive[f]) continue;
        std::vector<Point> pts;
        pts.reserve(sub.faces[f].size());
        for (int id : sub.faces[f]) pts.push_back(sub.pt(id));
        sol.pieces.emplace_back(canonicalize(pts));
    }
    return sol;
}

}  // namespace

Solution solve_greedy_merge(const Instance& inst, std::uint64_t seed) {
    // a globally convex region merges to itself; skip the dance
    if (inst.region.holes.empty() && is_convex(inst.region.outer.vertices)) {
        Solution sol;
        sol.instance_name = inst.name;
        std::vector<Point> outer = inst.region.outer.vertices;
        if (sign(signed_area(outer)) < 0) std::reverse(outer.begin(), outer.end());
        sol.pieces.emplace_back(canonicalize(outer));
        return sol;
    }

    TriangulationMesh mesh = triangulate(inst.region, {});
    Subdivision sub;
    sub.mesh = &mesh;
    for (const auto& t : mesh.triangles) {
        sub.faces.push_back({t[0], t[1], t[2]});
        sub.alive.push_back(1);
    }

    Rng rng = make_rng(seed);
    // a failed pair stays failed until one face changes, and merged faces get
    // fresh ids, so the cache never blocks a viable merge
    std::set<std::pair<int, int>> failed;
    bool merged_any = true;
    while (merged_any) {
        merged_any = false;
        // adjacent alive pairs via shared undirected edges
        std::map<std::pair<int, int>, std::vector<int>> edge_faces;
        for (std::size_t f = 0; f < sub.faces.size(); ++f) {
            if (!sub.alive[f]) continue;
            const auto& cyc = sub.faces[f];
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
                edge_faces[{std::min(u, v), std::max(u, v)}].push_back(static_cast<int>(f));
            }
        }
        std::set<std::pair<int, int>> cand_set;
        for (const auto& [e, fs] : edge_faces)
            if (fs.size() == 2 && fs[0] != fs[1])
                cand_set.insert({std::min(fs[0], fs[1]), std::max(fs[0], fs[1])});
        std::vector<std::pair<int, int>> cands;
        for (const auto& c : cand_set)
            if (!failed.count(c)) cands.push_back(c);
        // Fisher-Yates under our portable rng
        for (std::size_t i = cands.size(); i > 1; --i)
            std::swap(cands[i - 1], cands[rng_below(rng, i)]);

        for (const auto& [f, g] : cands) {
            std::vector<int> cyc = try_merge(sub, f, g);
            if (cyc.empty()) {
                failed.insert({f, g});
                continue;
            }
            sub.alive[f] = sub.alive[g] = 0;
            sub.faces.push_back(std::move(cyc));
            sub.alive.push_back(1);
            merged_any = true;
            break;  // refresh candidate order after each successful merge
        }
    }
    return faces_to_solution(sub, inst.name);
}

Solution solve_greedy_merge_best(const Instance& inst, std::uint64_t seed, int restarts) {
    if (restarts < 1) throw InvalidParams("restarts must be >= 1");
    Solution best;
    for (int r = 0; r < restarts; ++r) {
        Solution sol = solve_greedy_merge(inst, mix64(seed + 0x9e3779b97f4a7c15ULL * (r + 1)));
        if (best.pieces.empty() || sol.pieces.size() < best.pieces.size()) best = std::move(sol);
    }
    return best;
}

}  // namespace cover
