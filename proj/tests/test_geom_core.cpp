#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cover/earclip.hpp"
#include "cover/errors.hpp"
#include "cover/polygon.hpp"
#include "cover/region_ops.hpp"
#include "cover/rng.hpp"
#include "oracles.hpp"

using namespace cover;

namespace {

PolygonWithHoles unit_square_region() {
    PolygonWithHoles r;
    r.outer = SimplePolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    return r;
}

std::vector<Point> square(long x0, long y0, long x1, long y1) {
    return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

// L-shape [0,2]^2 minus the open square (1,2)^2
PolygonWithHoles l_shape() {
    PolygonWithHoles r;
    r.outer = SimplePolygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
    return r;
}

std::vector<Point> random_points(Rng& rng, int n, long lo, long hi) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i)
        pts.push_back({static_cast<long>(rng_range(rng, lo, hi)),
                       static_cast<long>(rng_range(rng, lo, hi))});
    return pts;
}

}  // namespace

TEST_CASE("orientation basic cases") {
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == Orientation::CCW);
    CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == Orientation::Collinear);
    CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == Orientation::CW);
}

TEST_CASE("orientation antisymmetry and scale invariance") {
    Rng rng = make_rng(7);
    for (int it = 0; it < 300; ++it) {
        Point p{static_cast<long>(rng_range(rng, -20, 20)), static_cast<long>(rng_range(rng, -20, 20))};
        Point q{static_cast<long>(rng_range(rng, -20, 20)), static_cast<long>(rng_range(rng, -20, 20))};
        Point r{static_cast<long>(rng_range(rng, -20, 20)), static_cast<long>(rng_range(rng, -20, 20))};
        CHECK(static_cast<int>(orientation(p, q, r)) == -static_cast<int>(orientation(p, r, q)));
        Rational s = rat(static_cast<long>(rng_range(rng, 1, 9)), static_cast<long>(rng_range(rng, 1, 9)));
        Point ps{p.x * s, p.y * s}, qs{q.x * s, q.y * s}, rs{r.x * s, r.y * s};
        CHECK(orientation(p, q, r) == orientation(ps, qs, rs));
    }
}

TEST_CASE("is_convex") {
    CHECK(is_convex(square(0, 0, 1, 1)));
    CHECK_FALSE(is_convex(l_shape().outer.vertices));
    // extra collinear midpoint vertex is still (weakly) convex
    CHECK(is_convex({{0, 0}, {2, 0}, {1, 1}, {Rational(1), Rational(1, 2)}}) == false);
    CHECK(is_convex({{0, 0}, {1, 0}, {2, 0}, {1, 2}}));
    CHECK_THROWS_AS(is_convex(std::vector<Point>{{0, 0}, {1, 1}}), InvalidPolygon);
    // doubly-wound "spiral" of left turns is rejected
    std::vector<Point> sq = square(0, 0, 3, 3);
    std::vector<Point> spiral;
    for (int rep = 0; rep < 2; ++rep)
        for (const auto& p : sq) spiral.push_back(p);
    CHECK_FALSE(is_convex(spiral));
}

TEST_CASE("signed_area basics and independent shoelace") {
    CHECK(signed_area(square(0, 0, 1, 1)) == 1);
    std::vector<Point> cw = square(0, 0, 1, 1);
    std::reverse(cw.begin(), cw.end());
    CHECK(signed_area(cw) == -1);

    Rng rng = make_rng(11);
    for (int it = 0; it < 20; ++it) {
        // random star-shaped 10-gon around origin
        std::vector<Point> poly;
        for (int k = 0; k < 10; ++k) {
            long r = rng_range(rng, 1, 50);
            double ang = (k + 0.3) * 0.628318;
            poly.push_back({static_cast<long>(r * std::cos(ang) * 8),
                            static_cast<long>(r * std::sin(ang) * 8)});
        }
        // independent shoelace over integers
        Integer twice = 0;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Point& a = poly[i];
            const Point& b = poly[(i + 1) % poly.size()];
            twice += a.x.get_num() * b.y.get_num() - b.x.get_num() * a.y.get_num();
        }
        CHECK(signed_area(poly) == rat(twice, Integer(2)));
    }
}

TEST_CASE("convex_hull small cases") {
    std::vector<Point> pts = square(0, 0, 2, 2);
    pts.push_back({1, 1});
    ConvexPolygon h = convex_hull(pts);
    CHECK(h.size() == 4);
    CHECK(is_convex(h));

    ConvexPolygon tri = convex_hull({{0, 0}, {3, 0}, {0, 4}});
    CHECK(tri.size() == 3);

    CHECK_THROWS_AS(convex_hull({{0, 0}, {1, 1}, {2, 2}, {3, 3}}), DegenerateHull);
}

TEST_CASE("convex_hull matches brute force on random points") {
    Rng rng = make_rng(101);
    for (int it = 0; it < 10; ++it) {
        std::vector<Point> pts = random_points(rng, 50, -40, 40);
        ConvexPolygon h;
        std::vector<Point> expect;
        try {
            h = convex_hull(pts);
            expect = oracle::brute_force_hull(pts);
        } catch (const DegenerateHull&) {
            continue;
        }
        REQUIRE(h.size() == expect.size());
        // same cyclic order
        auto start = std::find(h.vertices.begin(), h.vertices.end(), expect[0]);
        REQUIRE(start != h.vertices.end());
        for (std::size_t i = 0; i < expect.size(); ++i)
            CHECK(h.vertices[(std::distance(h.vertices.begin(), start) + i) % h.size()] ==
                  expect[i]);
        // hull contains every input point
        PolygonWithHoles hull_region;
        hull_region.outer = SimplePolygon(h.vertices);
        for (const Point& p : pts) CHECK(point_in_region(p, hull_region) != PointLocation::Outside);
        CHECK(is_convex(h));
    }
}

TEST_CASE("point_in_region") {
    PolygonWithHoles sq = unit_square_region();
    CHECK(point_in_region({rat(1, 2), rat(1, 2)}, sq) == PointLocation::Interior);
    CHECK(point_in_region({rat(0), rat(1, 2)}, sq) == PointLocation::Boundary);
    CHECK(point_in_region({rat(2), rat(1, 2)}, sq) == PointLocation::Outside);

    PolygonWithHoles holed = unit_square_region();
    holed.holes.push_back(SimplePolygon({{rat(1, 4), rat(1, 4)},
                                         {rat(1, 4), rat(3, 4)},
                                         {rat(3, 4), rat(3, 4)},
                                         {rat(3, 4), rat(1, 4)}}));
    CHECK(point_in_region({rat(1, 2), rat(1, 2)}, holed) == PointLocation::Outside);
    CHECK(point_in_region({rat(1, 4), rat(1, 2)}, holed) == PointLocation::Boundary);
    CHECK(point_in_region({rat(1, 8), rat(1, 2)}, holed) == PointLocation::Interior);
}

TEST_CASE("piece_contained basics") {
    PolygonWithHoles sq = unit_square_region();
    CHECK(piece_contained(ConvexPolygon(square(0, 0, 1, 1)), sq));

    PolygonWithHoles holed = unit_square_region();
    holed.holes.push_back(SimplePolygon({{rat(1, 4), rat(1, 4)},
                                         {rat(1, 4), rat(3, 4)},
                                         {rat(3, 4), rat(3, 4)},
                                         {rat(3, 4), rat(1, 4)}}));
    // spans across the hole
    CHECK_FALSE(piece_contained(ConvexPolygon(square(0, 0, 1, 1)), holed));
    // shares an edge with the outer boundary: closed containment counts
    ConvexPolygon strip({{0, 0}, {1, 0}, {1, rat(1, 4)}, {0, rat(1, 4)}});
    CHECK(piece_contained(strip, holed));
    // piece poking outside
    CHECK_FALSE(piece_contained(ConvexPolygon(square(0, 0, 2, 1)), sq));
}

TEST_CASE("region_difference basics") {
    PolygonWithHoles sq = unit_square_region();
    CHECK(region_difference(sq, ConvexPolygon(square(0, 0, 1, 1))).empty());

    auto rest = region_difference(sq, ConvexPolygon({{0, 0}, {rat(1, 2), rat(0)}, {rat(1, 2), rat(1)}, {0, 1}}));
    Rational total = 0;
    for (const auto& comp : rest) {
        total += area(comp);
        for (const auto& v : comp.outer.vertices) CHECK(cmp(v.x, rat(1, 2)) >= 0);
    }
    CHECK(total == rat(1, 2));
}

TEST_CASE("earclip tiles region exactly") {
    Rng rng = make_rng(23);
    PolygonWithHoles l = l_shape();
    auto tris = earclip_region(l);
    Rational sum = 0;
    for (const auto& t : tris) sum += triangle_area(t);
    CHECK(sum == area(l));
    // a hexagon tiles into at most 4 triangles; fewer when an ear's diagonal
    // passes through the reflex vertex
    CHECK(tris.size() >= 3);
    CHECK(tris.size() <= 4);
    for (const auto& t : tris) CHECK(piece_contained(ConvexPolygon({t[0], t[1], t[2]}), l));

    PolygonWithHoles holed;
    holed.outer = SimplePolygon({{0, 0}, {8, 0}, {8, 8}, {0, 8}});
    holed.holes.push_back(SimplePolygon({{2, 2}, {2, 4}, {4, 4}, {4, 2}}));
    holed.holes.push_back(SimplePolygon({{5, 5}, {5, 7}, {7, 6}}));
    auto tris2 = earclip_region(holed);
    Rational sum2 = 0;
    for (const auto& t : tris2) {
        CHECK(sign(triangle_area(t)) > 0);
        sum2 += triangle_area(t);
    }
    CHECK(sum2 == area(holed));
    // every triangle is contained in the region
    for (const auto& t : tris2)
        CHECK(piece_contained(ConvexPolygon({t[0], t[1], t[2]}), holed));
}

TEST_CASE("area partition identity: difference plus intersection") {
    Rng rng = make_rng(31);
    PolygonWithHoles region;
    region.outer = SimplePolygon({{0, 0}, {10, 0}, {10, 10}, {0, 10}});
    region.holes.push_back(SimplePolygon({{4, 4}, {4, 6}, {6, 6}, {6, 4}}));
    for (int it = 0; it < 30; ++it) {
        // random convex piece from a handful of points
        std::vector<Point> pts = random_points(rng, 6, -2, 12);
        ConvexPolygon piece;
        try {
            piece = convex_hull(pts);
        } catch (const DegenerateHull&) {
            continue;
        }
        auto rest = region_difference(region, piece);
        Rational rest_area = 0;
        for (const auto& comp : rest) rest_area += area(comp);
        // intersection area from differencing twice
        Rational inter = area(region) - rest_area;
        CHECK(cmp(inter, Rational(0)) >= 0);
        CHECK(cmp(rest_area, area(region)) <= 0);
        // subtracting again removes nothing new
        Residual r(region);
        r.subtract(piece.vertices);
        r.subtract(piece.vertices);
        CHECK(r.area() == rest_area);
    }
}

TEST_CASE("region_difference agrees with rasterization oracle") {
    Rng rng = make_rng(47);
    int grid = 128;  // unit test scale; acceptance runs the full 1024 version
    for (int it = 0; it < 15; ++it) {
        PolygonWithHoles region;
        region.outer = SimplePolygon({{0, 0}, {16, 0}, {16, 16}, {0, 16}});
        region.holes.push_back(
            SimplePolygon({{static_cast<long>(rng_range(rng, 2, 5)), 3}, {7, static_cast<long>(rng_range(rng, 5, 7))}, {4, 9}}));
        ConvexPolygon piece;
        try {
            piece = convex_hull(random_points(rng, 5, 1, 15));
        } catch (const DegenerateHull&) {
            continue;
        }
        auto rest = region_difference(region, piece);

        auto outer_e = oracle::edges_of(region.outer.vertices);
        std::vector<std::vector<oracle::DEdge>> hole_e;
        for (const auto& h : region.holes) hole_e.push_back(oracle::edges_of(h.vertices));
        auto piece_e = oracle::edges_of(piece.vertices);
        std::vector<oracle::DEdge> all_edges = outer_e;
        for (const auto& h : hole_e) all_edges.insert(all_edges.end(), h.begin(), h.end());
        all_edges.insert(all_edges.end(), piece_e.begin(), piece_e.end());

        std::vector<std::vector<oracle::DEdge>> rest_edges;
        for (const auto& comp : rest) {
            rest_edges.push_back(oracle::edges_of(comp.outer.vertices));
            // component boundaries count as boundary for the exclusion zone
            all_edges.insert(all_edges.end(), rest_edges.back().begin(), rest_edges.back().end());
        }

        double cell = 16.0 / grid;
        for (int gy = 0; gy < grid; ++gy) {
            for (int gx = 0; gx < grid; ++gx) {
                double x = (gx + 0.5) * cell, y = (gy + 0.5) * cell;
                if (oracle::near_any_edge(x, y, all_edges, cell)) continue;
                bool truth = oracle::raster_in_region(x, y, outer_e, hole_e) &&
                             !oracle::raster_in_cycle(x, y, piece_e);
                bool claimed = false;
                for (const auto& ce : rest_edges)
                    if (oracle::raster_in_cycle(x, y, ce)) claimed = true;
                REQUIRE(truth == claimed);
            }
        }
    }
}

TEST_CASE("canonicalize removes collinear vertices and fixes start") {
    std::vector<Point> with_mid{{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}};
    auto canon = canonicalize(with_mid);
    CHECK(canon == std::vector<Point>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    std::vector<Point> rotated{{2, 2}, {0, 2}, {0, 0}, {2, 0}};
    CHECK(canonicalize(rotated) == canon);
}
