#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "cover/earclip.hpp"
#include "cover/errors.hpp"
#include "cover/generators.hpp"
#include "cover/region_ops.hpp"
#include "cover/triangulate.hpp"

using namespace cover;

namespace {

PolygonWithHoles l_shape() {
    PolygonWithHoles r;
    r.outer = SimplePolygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
    return r;
}

void check_mesh_invariants(const TriangulationMesh& mesh, const PolygonWithHoles& region) {
    // exact tiling by area
    Rational sum = 0;
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        Rational a = triangle_area(mesh.triangle_points(t));
        REQUIRE(sign(a) > 0);
        sum += a;
    }
    REQUIRE(sum == area(region));

    // Euler relation: |T| = 2*V_int + V_bnd + 2H - 2
    long v_int = 0, v_bnd = 0;
    for (const Point& p : mesh.points) {
        PointLocation loc = point_in_region(p, region);
        REQUIRE(loc != PointLocation::Outside);
        if (loc == PointLocation::Interior)
            ++v_int;
        else
            ++v_bnd;
    }
    long h = static_cast<long>(region.holes.size());
    REQUIRE(static_cast<long>(mesh.triangles.size()) == 2 * v_int + v_bnd + 2 * h - 2);

    // adjacency symmetry; constrained edges have exactly one adjacent triangle
    std::map<std::pair<int, int>, int> edge_count;
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        for (int e = 0; e < 3; ++e) {
            int a = mesh.triangles[t][e], b = mesh.triangles[t][(e + 1) % 3];
            ++edge_count[{std::min(a, b), std::max(a, b)}];
            int nb = mesh.adjacency[t][e];
            if (nb < 0) continue;
            bool back = false;
            for (int f = 0; f < 3; ++f)
                if (mesh.adjacency[nb][f] == static_cast<int>(t)) back = true;
            REQUIRE(back);
        }
    }
    for (const auto& [key, count] : edge_count) REQUIRE(count <= 2);
    for (const auto& ce : mesh.constrained_edges) {
        REQUIRE(edge_count.count(ce));
        REQUIRE(edge_count[ce] == 1);
    }
}

}  // namespace

TEST_CASE("steiner_points: convex region has none") {
    PolygonWithHoles r;
    r.outer = SimplePolygon({{0, 0}, {5, 0}, {6, 3}, {2, 5}});
    CHECK(steiner_points(r, SteinerLevel::None).empty());
    CHECK(steiner_points(r, SteinerLevel::EdgeExtensions).empty());
    CHECK(steiner_points(r, SteinerLevel::ExtensionIntersections).empty());
}

TEST_CASE("steiner_points: L-shape extensions hit (1,0) and (0,1)") {
    // hand-computed: reflex vertex (1,1); extending edge (2,1)-(1,1) hits x=0
    // at (0,1); extending edge (1,2)-(1,1) hits y=0 at (1,0)
    auto pts = steiner_points(l_shape(), SteinerLevel::EdgeExtensions);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == Point{0, 1});
    CHECK(pts[1] == Point{1, 0});
    // the two extensions meet only at (1,1), an existing vertex: same set
    CHECK(steiner_points(l_shape(), SteinerLevel::ExtensionIntersections) == pts);
}

TEST_CASE("steiner_points: square hole yields extension intersections") {
    PolygonWithHoles r;
    r.outer = SimplePolygon({{0, 0}, {10, 0}, {10, 10}, {0, 10}});
    r.holes.push_back(SimplePolygon({{4, 4}, {4, 6}, {6, 6}, {6, 4}}));
    auto ext = steiner_points(r, SteinerLevel::EdgeExtensions);
    // each of the 4 hole edges extends past both endpoints to the outer wall:
    // 8 hit points (4,0),(6,0),(10,4),(10,6),(6,10),(4,10),(0,6),(0,4)
    CHECK(ext.size() == 8);
    for (const Point& p : ext) CHECK(point_in_region(p, r) == PointLocation::Boundary);
    auto extx = steiner_points(r, SteinerLevel::ExtensionIntersections);
    // extension lines x=4, x=6, y=4, y=6 cross at the 4 hole corners (already
    // vertices) — no interior intersections beyond them
    CHECK(extx == ext);

    // shift the hole so extensions genuinely cross in the interior
    PolygonWithHoles r2;
    r2.outer = SimplePolygon({{0, 0}, {10, 0}, {10, 10}, {0, 10}});
    r2.holes.push_back(SimplePolygon({{4, 4}, {4, 6}, {6, 7}, {6, 3}}));
    auto ext2 = steiner_points(r2, SteinerLevel::EdgeExtensions);
    auto extx2 = steiner_points(r2, SteinerLevel::ExtensionIntersections);
    CHECK(extx2.size() > ext2.size());
    for (const Point& p : extx2) CHECK(point_in_region(p, r2) != PointLocation::Outside);
}

TEST_CASE("triangulate: convex polygon gives n-2 triangles") {
    PolygonWithHoles r;
    r.outer = SimplePolygon({{0, 0}, {4, 0}, {6, 2}, {5, 5}, {1, 5}, {-1, 2}});
    TriangulationMesh mesh = triangulate(r, {});
    CHECK(mesh.triangles.size() == 4);
    check_mesh_invariants(mesh, r);
}

TEST_CASE("triangulate: square with square hole gives 8 triangles") {
    PolygonWithHoles r;
    r.outer = SimplePolygon({{0, 0}, {8, 0}, {8, 8}, {0, 8}});
    r.holes.push_back(SimplePolygon({{2, 2}, {2, 4}, {4, 4}, {4, 2}}));
    TriangulationMesh mesh = triangulate(r, {});
    CHECK(mesh.triangles.size() == 8);
    check_mesh_invariants(mesh, r);
}

TEST_CASE("triangulate: L-shape conforms even when earclip leaves a T-junction") {
    TriangulationMesh mesh = triangulate(l_shape(), {});
    CHECK(mesh.triangles.size() == 4);  // V_bnd = 6, H = 0
    check_mesh_invariants(mesh, l_shape());
}

TEST_CASE("triangulate: extra points split edges and interiors") {
    PolygonWithHoles r;
    r.outer = SimplePolygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    // one interior, one on a boundary edge, one duplicate of a vertex
    TriangulationMesh mesh = triangulate(r, {{2, 2}, {2, 0}, {0, 0}});
    CHECK(mesh.points.size() == 6);
    // V_int = 1, V_bnd = 5 -> 2 + 5 - 2 = 5 triangles
    CHECK(mesh.triangles.size() == 5);
    check_mesh_invariants(mesh, r);
    // the boundary point split the bottom edge into two constrained edges
    int bottom_edges = 0;
    for (const auto& ce : mesh.constrained_edges) {
        if (sign(mesh.points[ce.first].y) == 0 && sign(mesh.points[ce.second].y) == 0)
            ++bottom_edges;
    }
    CHECK(bottom_edges == 2);
}

TEST_CASE("triangulate: outside extra point rejected") {
    PolygonWithHoles r;
    r.outer = SimplePolygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    CHECK_THROWS_AS(triangulate(r, {{5, 5}}), PointOutsideRegion);
    r.holes.push_back(SimplePolygon({{1, 1}, {1, 3}, {3, 3}, {3, 1}}));
    CHECK_THROWS_AS(triangulate(r, {{2, 2}}), PointOutsideRegion);
}

TEST_CASE("triangulate: 30 generated instances satisfy mesh invariants") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        CheeseParams c;
        c.target_holes = 6;
        c.field_width = c.field_height = 60;
        c.seed = seed;
        Instance inst = gen_cheese(c);
        check_mesh_invariants(triangulate(inst.region, {}), inst.region);

        MazeParams m;
        m.grid_cols = m.grid_rows = 3;
        m.cell_size = 6;
        m.seed = seed;
        Instance maze = gen_maze(m);
        check_mesh_invariants(triangulate(maze.region, {}), maze.region);
    }
}

TEST_CASE("triangulate: steiner points feed back as extra points") {
    MazeParams m;
    m.grid_cols = m.grid_rows = 3;
    m.cell_size = 6;
    m.seed = 4;
    Instance inst = gen_maze(m);
    auto pts = steiner_points(inst.region, SteinerLevel::EdgeExtensions);
    CHECK(!pts.empty());
    for (const Point& p : pts)
        CHECK(point_in_region(p, inst.region) != PointLocation::Outside);
    TriangulationMesh mesh = triangulate(inst.region, pts);
    check_mesh_invariants(mesh, inst.region);

    auto ptsx = steiner_points(inst.region, SteinerLevel::ExtensionIntersections);
    CHECK(ptsx.size() >= pts.size());
    check_mesh_invariants(triangulate(inst.region, ptsx), inst.region);
}

TEST_CASE("triangulate: every triangle contained in region") {
    CheeseParams c;
    c.target_holes = 5;
    c.field_width = c.field_height = 50;
    c.seed = 11;
    Instance inst = gen_cheese(c);
    TriangulationMesh mesh = triangulate(inst.region, {});
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        Triangle tri = mesh.triangle_points(t);
        CHECK(piece_contained(ConvexPolygon({tri[0], tri[1], tri[2]}), inst.region));
    }
}

TEST_CASE("triangulate: determinism") {
    MazeParams m;
    m.seed = 3;
    Instance inst = gen_maze(m);
    TriangulationMesh a = triangulate(inst.region, {});
    TriangulationMesh b = triangulate(inst.region, {});
    CHECK(a.points == b.points);
    CHECK(a.triangles == b.triangles);
    CHECK(a.constrained_edges == b.constrained_edges);
}
