#include "cover/solver_setcover.hpp"

#include <algorithm>
#include <set>

#include "cover/cliques.hpp"
#include "cover/errors.hpp"
#include "cover/region_ops.hpp"
#include "cover/rng.hpp"
#include "cover/solver_cliquecover.hpp"
#include "cover/visibility.hpp"

namespace cover {
namespace {

// dedupe by canonical vertex list, preserving first-seen order
struct PieceSet {
    std::set<std::vector<Point>> seen;
    std::vector<ConvexPolygon> pieces;

    void add(const std::vector<Point>& vertices) {
        std::vector<Point> canon = canonicalize(vertices);
        if (seen.insert(canon).second) pieces.emplace_back(std::move(canon));
    }
};

void add_triangle_pieces(PieceSet& ps, const TriangulationMesh& mesh) {
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        Triangle tri = mesh.triangle_points(static_cast<int>(t));
        ps.add({tri[0], tri[1], tri[2]});
    }
}

bool piece_covers(const ConvexPolygon& piece, const BBox& box, const Point& w, double wx,
                  double wy) {
    if (wx < box.min_x || wx > box.max_x || wy < box.min_y || wy > box.max_y) return false;
    return locate_point(w, piece.vertices) != PointLocation::Outside;
}

// Collection invariant: the pieces cover the region (the per-triangle pieces
// tile it, so this only guards against logic regressions).
void certify_covers(const std::vector<ConvexPolygon>& pieces, const PolygonWithHoles& region) {
    Residual res(region);
    for (const auto& p : pieces) {
        res.subtract(p.vertices);
        if (res.empty()) return;
    }
    if (!res.empty()) throw NotACover("collection does not cover the region");
}

}  // namespace

Collection gen_collection_cliques(const Instance& inst, SteinerLevel policy, std::size_t cap) {
    TriangulationMesh mesh = triangulate(inst.region, steiner_points(inst.region, policy));
    RegionCells cells(inst.region);
    BitGraph g = build_visibility_graph(mesh, inst.region, cells);
    PieceSet ps;
    maximal_cliques(g, [&](const std::vector<int>& clique) {
        for (const ConvexPolygon& p : repair_pieces({clique}, mesh, g, cells)) ps.add(p.vertices);
        return ps.pieces.size() < cap;
    });
    add_triangle_pieces(ps, mesh);
    certify_covers(ps.pieces, inst.region);
    return Collection{std::move(ps.pieces)};
}

Collection gen_collection_bloat(const Instance& inst, std::size_t count, std::uint64_t seed) {
    TriangulationMesh mesh = triangulate(inst.region, {});
    RegionCells cells(inst.region);
    Rng rng = make_rng(seed);

    // candidate pool: region vertices, edge-extension Steiner points, and a
    // handful of random rational points on boundary edges
    std::vector<Point> pool = mesh.points;
    for (const Point& p : steiner_points(inst.region, SteinerLevel::EdgeExtensions))
        pool.push_back(p);
    std::vector<std::pair<Point, Point>> boundary;
    auto collect = [&](const std::vector<Point>& cycle) {
        for (std::size_t i = 0; i < cycle.size(); ++i)
            boundary.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    };
    collect(inst.region.outer.vertices);
    for (const auto& h : inst.region.holes) collect(h.vertices);
    for (std::size_t i = 0; i < 2 * boundary.size(); ++i) {
        const auto& [a, b] = boundary[rng_below(rng, boundary.size())];
        long den = 2 + static_cast<long>(rng_below(rng, 7));
        long num = 1 + static_cast<long>(rng_below(rng, static_cast<std::uint64_t>(den - 1)));
        Rational t = Rational(num) / Rational(den);
        pool.push_back(Point{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t});
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    std::vector<char> covered(mesh.triangles.size(), 0);
    PieceSet ps;
    for (std::size_t it = 0; it < count; ++it) {
        // uncovered-biased seed triangle
        std::vector<int> uncov;
        for (std::size_t t = 0; t < covered.size(); ++t)
            if (!covered[t]) uncov.push_back(static_cast<int>(t));
        int seed_tri = uncov.empty()
                           ? static_cast<int>(rng_below(rng, mesh.triangles.size()))
                           : uncov[rng_below(rng, uncov.size())];
        Triangle tri = mesh.triangle_points(seed_tri);
        std::vector<Point> hull_pts{tri[0], tri[1], tri[2]};
        int fails = 0;
        while (fails < 30) {
            const Point& cand = pool[rng_below(rng, pool.size())];
            std::vector<Point> trial = hull_pts;
            trial.push_back(cand);
            ConvexPolygon trial_hull = convex_hull(trial);
            if (trial_hull.vertices.size() == canonicalize(hull_pts).size() &&
                canonicalize(hull_pts) == trial_hull.vertices) {
                ++fails;  // candidate already inside, no growth
                continue;
            }
            if (!cells.contains_piece(trial_hull.vertices)) {
                ++fails;
                continue;
            }
            hull_pts = std::move(trial_hull.vertices);
            fails = 0;
        }
        ConvexPolygon piece = convex_hull(hull_pts);
        ps.add(piece.vertices);
        BBox box = bbox_of(piece.vertices);
        for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
            if (covered[t]) continue;
            Point c = triangle_centroid(mesh.triangle_points(static_cast<int>(t)));
            if (piece_covers(piece, box, c, to_double(c.x), to_double(c.y))) covered[t] = 1;
        }
    }
    add_triangle_pieces(ps, mesh);
    certify_covers(ps.pieces, inst.region);
    return Collection{std::move(ps.pieces)};
}

std::vector<Point> place_witnesses(const Instance& inst) {
    TriangulationMesh mesh = triangulate(inst.region, {});
    std::vector<Point> out;
    out.reserve(mesh.triangles.size());
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t)
        out.push_back(triangle_centroid(mesh.triangle_points(static_cast<int>(t))));
    return out;
}

std::vector<Point> place_witnesses(const Instance& inst,
                                   const std::vector<PolygonWithHoles>& residual) {
    std::vector<Point> out;
    for (const PolygonWithHoles& component : residual) {
        TriangulationMesh mesh = triangulate(component, {});
        for (std::size_t t = 0; t < mesh.triangles.size(); ++t)
            out.push_back(triangle_centroid(mesh.triangle_points(static_cast<int>(t))));
    }
    return out;
}

SetCoverInstance build_setcover(const Collection& col, const std::vector<Point>& witnesses) {
    SetCoverInstance sc;
    sc.witness_count = witnesses.size();
    sc.covers.resize(col.pieces.size());
    std::vector<double> wx(witnesses.size()), wy(witnesses.size());
    for (std::size_t w = 0; w < witnesses.size(); ++w) {
        wx[w] = to_double(witnesses[w].x);
        wy[w] = to_double(witnesses[w].y);
    }
    for (std::size_t p = 0; p < col.pieces.size(); ++p) {
        BBox box = bbox_of(col.pieces[p].vertices);
        for (std::size_t w = 0; w < witnesses.size(); ++w)
            if (piece_covers(col.pieces[p], box, witnesses[w], wx[w], wy[w]))
                sc.covers[p].push_back(static_cast<int>(w));
    }
    return sc;
}

Solution solve_setcover(const Instance& inst, const SetCoverConfig& cfg) {
    Collection col;
    if (cfg.gen == CollectionGen::Cliques || cfg.gen == CollectionGen::Both)
        col = gen_collection_cliques(inst, cfg.policy, cfg.cap);
    if (cfg.gen == CollectionGen::Bloat || cfg.gen == CollectionGen::Both) {
        Collection bloat = gen_collection_bloat(inst, cfg.bloat_count, mix64(cfg.seed));
        PieceSet ps;
        for (const auto& p : col.pieces) ps.add(p.vertices);
        for (const auto& p : bloat.pieces) ps.add(p.vertices);
        col.pieces = std::move(ps.pieces);
    }

    std::vector<Point> witnesses = place_witnesses(inst);
    SetCoverInstance sc = build_setcover(col, witnesses);
    std::vector<int> sel = greedy_set_cover(sc);
    sel = anneal_set_cover(sc, std::move(sel), cfg.schedule, cfg.seed);

    // exact fix-up: witnesses are a discretization, so the selected pieces may
    // leave slivers; add witnesses where area is actually missing and re-cover
    AnnealSchedule short_schedule = cfg.schedule;
    short_schedule.steps = static_cast<long>(col.pieces.size());
    for (int round = 0; round < 64; ++round) {
        Residual res(inst.region);
        for (int p : sel) res.subtract(col.pieces[p].vertices);
        if (res.empty()) break;
        std::size_t first_new = witnesses.size();
        std::vector<PolygonWithHoles> components;
        for (const ConvexCell& cell : res.cells()) {
            PolygonWithHoles component;
            component.outer = SimplePolygon(cell);
            components.push_back(std::move(component));
        }
        for (Point& w : place_witnesses(inst, components)) witnesses.push_back(std::move(w));
        sc.witness_count = witnesses.size();
        for (std::size_t p = 0; p < col.pieces.size(); ++p) {
            BBox box = bbox_of(col.pieces[p].vertices);
            for (std::size_t w = first_new; w < witnesses.size(); ++w)
                if (piece_covers(col.pieces[p], box, witnesses[w], to_double(witnesses[w].x),
                                 to_double(witnesses[w].y)))
                    sc.covers[p].push_back(static_cast<int>(w));
        }
        sel = greedy_complete(sc, std::move(sel));
        sel = anneal_set_cover(sc, std::move(sel), short_schedule, mix64(cfg.seed + round + 1));
    }
    {
        // last-resort guarantee: triangles tile the region, so selecting every
        // piece whose interior meets the residual always terminates the loop
        Residual res(inst.region);
        for (int p : sel) res.subtract(col.pieces[p].vertices);
        if (!res.empty()) {
            std::vector<char> in_sel(col.pieces.size(), 0);
            for (int p : sel) in_sel[p] = 1;
            for (std::size_t p = 0; p < col.pieces.size() && !res.empty(); ++p) {
                if (in_sel[p]) continue;
                Rational before = res.area();
                res.subtract(col.pieces[p].vertices);
                if (cmp(res.area(), before) < 0) sel.push_back(static_cast<int>(p));
            }
            if (!res.empty()) throw NotACover("set cover fix-up failed to cover the region");
        }
    }

    std::vector<ConvexPolygon> pieces;
    pieces.reserve(sel.size());
    for (int p : sel) pieces.push_back(col.pieces[p]);
    pieces = prune_redundant(std::move(pieces), inst.region);
    Solution sol;
    sol.instance_name = inst.name;
    sol.pieces = std::move(pieces);
    return sol;
}

}  // namespace cover
