#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cover/earclip.hpp"
#include "cover/errors.hpp"
#include "cover/generators.hpp"
#include "cover/instance.hpp"
#include "cover/region_ops.hpp"

using namespace cover;

namespace {

// brute-force instance validity: holes pairwise disjoint and strictly inside
void check_instance_valid(const Instance& inst) {
    const auto& outer = inst.region.outer.vertices;
    for (const auto& h : inst.region.holes) {
        for (const Point& p : h.vertices)
            REQUIRE(locate_point(p, outer) == PointLocation::Interior);
        for (std::size_t i = 0; i < h.size(); ++i)
            for (std::size_t j = 0; j < outer.size(); ++j)
                REQUIRE_FALSE(segments_intersect(h[i], h[(i + 1) % h.size()], outer[j],
                                                 outer[(j + 1) % outer.size()]));
    }
    for (std::size_t a = 0; a < inst.region.holes.size(); ++a) {
        for (std::size_t b = a + 1; b < inst.region.holes.size(); ++b) {
            const auto& ha = inst.region.holes[a].vertices;
            const auto& hb = inst.region.holes[b].vertices;
            for (std::size_t i = 0; i < ha.size(); ++i)
                for (std::size_t j = 0; j < hb.size(); ++j)
                    REQUIRE_FALSE(segments_intersect(ha[i], ha[(i + 1) % ha.size()], hb[j],
                                                     hb[(j + 1) % hb.size()]));
        }
    }
    // all coordinates integer
    for (const Point& p : outer) REQUIRE(is_integer(p.x));
}

Solution trivial_cover(const Instance& inst) {
    Solution sol;
    sol.instance_name = inst.name;
    for (const Triangle& t : earclip_region(inst.region))
        sol.pieces.emplace_back(std::vector<Point>{t[0], t[1], t[2]});
    return sol;
}

}  // namespace

TEST_CASE("gen_hole produces valid simple polygons") {
    Rng rng = make_rng(3);
    for (int seed_it = 0; seed_it < 100; ++seed_it) {
        SimplePolygon h = gen_hole({50, 50}, 6, 4, rng);
        REQUIRE(h.size() == 6);
        REQUIRE(is_simple_polygon(h.vertices));
        // brute-force all-pairs proper intersection check
        for (std::size_t i = 0; i < h.size(); ++i)
            for (std::size_t j = i + 1; j < h.size(); ++j)
                REQUIRE_FALSE(segments_cross_properly(h[i], h[(i + 1) % h.size()], h[j],
                                                      h[(j + 1) % h.size()]));
    }
}

TEST_CASE("gen_hole triangle needs no untangling") {
    Rng rng = make_rng(5);
    SimplePolygon h = gen_hole({10, 10}, 3, 3, rng);
    CHECK(h.size() == 3);
    CHECK(sign(signed_area(h)) != 0);
}

TEST_CASE("gen_cheese basic shapes") {
    CheeseParams p;
    p.field_width = p.field_height = 60;
    p.hole_radius = 3;
    p.seed = 42;

    p.target_holes = 0;
    Instance empty = gen_cheese(p);
    CHECK(empty.region.holes.empty());
    CHECK(empty.region.outer.size() >= 3);

    p.target_holes = 1;
    Instance one = gen_cheese(p);
    CHECK(one.region.holes.size() == 1);
    check_instance_valid(one);
}

TEST_CASE("gen_cheese 20 seeds valid") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CheeseParams p;
        p.target_holes = 12;
        p.field_width = p.field_height = 80;
        p.hole_radius = 3;
        p.seed = seed;
        Instance inst = gen_cheese(p);
        CHECK(inst.region.holes.size() == 12);
        check_instance_valid(inst);
    }
}

TEST_CASE("gen_ccheese holes convex, valid across seeds") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CheeseParams p;
        p.target_holes = 10;
        p.field_width = p.field_height = 80;
        p.hole_radius = 3;
        p.seed = seed;
        Instance inst = gen_ccheese(p);
        check_instance_valid(inst);
        for (const auto& h : inst.region.holes) CHECK(is_convex(h.vertices));
    }
}

TEST_CASE("gen_maze shapes") {
    MazeParams p;
    p.grid_cols = p.grid_rows = 3;
    p.cell_size = 6;
    p.perturbation_magnitude = 2;
    p.seed = 9;

    SUBCASE("removal_fraction 1 empties the maze") {
        p.removal_fraction = 1;
        Instance inst = gen_maze(p);
        CHECK(inst.region.holes.empty());
        CHECK(inst.region.outer.size() == 4);
    }
    SUBCASE("perturbation 0 keeps axis-aligned squares") {
        p.perturbation_fraction = 0;
        p.removal_fraction = 0;
        Instance inst = gen_maze(p);
        CHECK(inst.region.holes.size() == 9);
        for (const auto& h : inst.region.holes) {
            REQUIRE(h.size() == 4);
            for (std::size_t i = 0; i < 4; ++i) {
                const Point& a = h[i];
                const Point& b = h[(i + 1) % 4];
                CHECK((a.x == b.x || a.y == b.y));
            }
        }
    }
    SUBCASE("20 seeds valid") {
        p.removal_fraction = rat(1, 3);
        p.perturbation_fraction = rat(1, 2);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            p.seed = seed;
            check_instance_valid(gen_maze(p));
        }
    }
    SUBCASE("invalid params rejected") {
        p.perturbation_magnitude = p.cell_size;
        CHECK_THROWS_AS(gen_maze(p), InvalidParams);
    }
}

TEST_CASE("determinism: same seed, byte-identical serialization") {
    CheeseParams p;
    p.target_holes = 8;
    p.field_width = p.field_height = 60;
    p.seed = 77;
    CHECK(serialize_instance(gen_cheese(p)) == serialize_instance(gen_cheese(p)));
    MazeParams m;
    m.seed = 77;
    CHECK(serialize_instance(gen_maze(m)) == serialize_instance(gen_maze(m)));
}

TEST_CASE("generated instances round-trip byte-identically") {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        CheeseParams p;
        p.target_holes = 5;
        p.field_width = p.field_height = 50;
        p.seed = seed;
        std::string ser = serialize_instance(gen_cheese(p));
        CHECK(serialize_instance(parse_instance(ser)) == ser);
    }
}

TEST_CASE("trivial triangulation cover verifies Valid") {
    CheeseParams p;
    p.target_holes = 6;
    p.field_width = p.field_height = 60;
    p.seed = 5;
    Instance inst = gen_cheese(p);
    CHECK(verify_solution(inst, trivial_cover(inst)).valid);

    MazeParams m;
    m.grid_cols = m.grid_rows = 3;
    m.cell_size = 5;
    m.perturbation_magnitude = 1;
    m.seed = 5;
    Instance maze = gen_maze(m);
    CHECK(verify_solution(maze, trivial_cover(maze)).valid);
}
