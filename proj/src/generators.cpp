#include "cover/generators.hpp"

#include <algorithm>
#include <string>

#include "cover/errors.hpp"
#include "cover/region_ops.hpp"

namespace cover {
namespace {

// probability draw that is exact for rational fractions
bool bernoulli(Rng& rng, const Rational& p) {
    std::uint64_t r = rng() >> 32;  // 32 random bits
    return Rational(static_cast<long>(r)) < p * Rational(1L << 32);
}

void check_cheese_params(const CheeseParams& p) {
    if (p.target_holes < 0) throw InvalidParams("target_holes must be >= 0");
    if (p.hole_vertex_min < 3 || p.hole_vertex_max > 64 || p.hole_vertex_min > p.hole_vertex_max)
        throw InvalidParams("hole vertex range must lie within [3, 64]");
    if (p.hole_radius < 1) throw InvalidParams("hole_radius must be >= 1");
    if (p.field_width < 4 * p.hole_radius || p.field_height < 4 * p.hole_radius)
        throw InvalidParams("field dimensions must be at least 4 * hole_radius");
}

bool holes_conflict(const SimplePolygon& a, const SimplePolygon& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (segments_intersect(a[i], a[(i + 1) % a.size()], b[j], b[(j + 1) % b.size()]))
                return true;
    // containment without edge contact
    if (locate_point(a[0], b.vertices) != PointLocation::Outside) return true;
    if (locate_point(b[0], a.vertices) != PointLocation::Outside) return true;
    return false;
}

// round vertex away from an interior reference point, to integers
Point round_outward(const Point& v, const Point& ref) {
    Integer x, y;
    if (cmp(v.x, ref.x) >= 0)
        mpz_cdiv_q(x.get_mpz_t(), v.x.get_num().get_mpz_t(), v.x.get_den().get_mpz_t());
    else
        mpz_fdiv_q(x.get_mpz_t(), v.x.get_num().get_mpz_t(), v.x.get_den().get_mpz_t());
    if (cmp(v.y, ref.y) >= 0)
        mpz_cdiv_q(y.get_mpz_t(), v.y.get_num().get_mpz_t(), v.y.get_den().get_mpz_t());
    else
        mpz_fdiv_q(y.get_mpz_t(), v.y.get_num().get_mpz_t(), v.y.get_den().get_mpz_t());
    return Point{Rational(x), Rational(y)};
}

// Convex integer boundary containing every listed point strictly inside:
// start from the hull of the centers and push violated edges outward by
// `radius` until the fixed point.
std::vector<Point> inflate_boundary(const std::vector<Point>& centers,
                                    const std::vector<Point>& must_contain, long radius) {
    std::vector<Point> boundary = convex_hull(centers).vertices;
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Point> offending;
        for (const Point& p : must_contain)
            if (locate_point(p, boundary) != PointLocation::Interior) offending.push_back(p);
        if (offending.empty()) return boundary;

        // half-plane per edge, offset outward where violated
        Point centroid = cell_centroid(boundary);
        ConvexCell cell;
        {
            // generous bounding box as the clipping seed
            Rational lo_x = boundary[0].x, hi_x = lo_x, lo_y = boundary[0].y, hi_y = lo_y;
            for (const Point& p : boundary) {
                lo_x = std::min(lo_x, p.x);
                hi_x = std::max(hi_x, p.x);
                lo_y = std::min(lo_y, p.y);
                hi_y = std::max(hi_y, p.y);
            }
            Rational pad = Rational(radius * 8 + 8);
            lo_x -= pad;
            hi_x += pad;
            lo_y -= pad;
            hi_y += pad;
            cell = {{lo_x, lo_y}, {hi_x, lo_y}, {hi_x, hi_y}, {lo_x, hi_y}};
        }
        std::size_t n = boundary.size();
        for (std::size_t i = 0; i < n; ++i) {
            Point a = boundary[i], b = boundary[(i + 1) % n];
            bool violated = false;
            for (const Point& p : offending)
                if (sign(cross(a, b, p)) <= 0) violated = true;
            if (violated) {
                // outward shift by >= radius, rational so coordinates stay exact
                Rational dx = b.x - a.x, dy = b.y - a.y;
                Rational m = std::max(abs(dx), abs(dy));
                Rational sx = Rational(radius) * dy / m;
                Rational sy = Rational(-radius) * dx / m;
                a = Point{a.x + sx, a.y + sy};
                b = Point{b.x + sx, b.y + sy};
            }
            cell = clip_halfplane(cell, a, b);
        }
        if (cell.size() < 3) throw GeneratorStall("boundary inflation degenerated");
        std::vector<Point> rounded;
        for (const Point& v : cell) rounded.push_back(round_outward(v, centroid));
        boundary = convex_hull(rounded).vertices;
    }
    throw GeneratorStall("boundary inflation did not converge");
}

Instance cheese_impl(const CheeseParams& params, bool convexify, const char* kind) {
    check_cheese_params(params);
    Rng rng = make_rng(params.seed);
    std::vector<SimplePolygon> holes;
    std::vector<Point> centers;

    long retries_left = 200 * (params.target_holes + 1) + 1000;
    while (static_cast<long>(holes.size()) < params.target_holes) {
        if (--retries_left < 0)
            throw GeneratorStall("cheese: retry budget exhausted after placing " +
                                 std::to_string(holes.size()) + " holes");
        Point center{static_cast<long>(rng_range(rng, 0, params.field_width)),
                     static_cast<long>(rng_range(rng, 0, params.field_height))};
        int k = static_cast<int>(rng_range(rng, params.hole_vertex_min, params.hole_vertex_max));
        SimplePolygon hole;
        try {
            hole = gen_hole(center, k, params.hole_radius, rng);
        } catch (const GeneratorStall&) {
            continue;
        }
        if (convexify) hole = SimplePolygon(convex_hull(hole.vertices).vertices);
        bool conflict = false;
        for (const auto& other : holes)
            if (holes_conflict(hole, other)) {
                conflict = true;
                break;
            }
        if (conflict) continue;
        holes.push_back(std::move(hole));
        centers.push_back(center);
    }

    // the hull needs at least 3 non-collinear centers; top up with extra
    // center samples that do not carry holes
    long hull_retries = 1000;
    while (true) {
        if (--hull_retries < 0) throw GeneratorStall("cheese: cannot form outer hull");
        if (centers.size() >= 3) {
            try {
                convex_hull(centers);
                break;
            } catch (const DegenerateHull&) {
            }
        }
        centers.push_back({static_cast<long>(rng_range(rng, 0, params.field_width)),
                           static_cast<long>(rng_range(rng, 0, params.field_height))});
    }

    std::vector<Point> must_contain;
    for (const auto& h : holes)
        must_contain.insert(must_contain.end(), h.vertices.begin(), h.vertices.end());

    PolygonWithHoles region;
    region.outer = SimplePolygon(inflate_boundary(centers, must_contain, params.hole_radius));
    for (auto& h : holes) region.holes.push_back(std::move(h));

    Instance inst;
    inst.name = std::string(kind) + "_" + std::to_string(params.target_holes) + "_" +
                std::to_string(params.seed);
    inst.region = validate_region(std::move(region));
    GeneratorMeta meta;
    meta.generator = kind;
    meta.seed = params.seed;
    meta.params = {{"target_holes", std::to_string(params.target_holes)},
                   {"field_width", std::to_string(params.field_width)},
                   {"field_height", std::to_string(params.field_height)},
                   {"hole_vertex_min", std::to_string(params.hole_vertex_min)},
                   {"hole_vertex_max", std::to_string(params.hole_vertex_max)},
                   {"hole_radius", std::to_string(params.hole_radius)}};
    inst.meta = std::move(meta);
    return inst;
}

}  // namespace

SimplePolygon gen_hole(const Point& center, int k, long radius, Rng& rng) {
    if (k < 3) throw InvalidParams("gen_hole: k must be >= 3");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        // sample k distinct points in the vicinity square
        std::vector<Point> pts;
        while (static_cast<int>(pts.size()) < k) {
            Point p{center.x + Rational(static_cast<long>(rng_range(rng, -radius, radius))),
                    center.y + Rational(static_cast<long>(rng_range(rng, -radius, radius)))};
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
        }
        bool collinear = true;
        for (std::size_t i = 2; i < pts.size() && collinear; ++i)
            if (orientation(pts[0], pts[1], pts[i]) != Orientation::Collinear) collinear = false;
        if (collinear) continue;

        // random initial tour
        for (std::size_t i = pts.size(); i > 1; --i)
            std::swap(pts[i - 1], pts[rng_below(rng, i)]);

        // 2-opt: first crossing pair in index order, swap, repeat; each
        // uncrossing shortens the tour, so this terminates
        std::size_t n = pts.size();
        bool stuck = false;
        for (int pass = 0;; ++pass) {
            if (pass > 2000) {
                stuck = true;
                break;
            }
            bool crossed = false;
            for (std::size_t i = 0; i < n && !crossed; ++i) {
                for (std::size_t j = i + 2; j < n && !crossed; ++j) {
                    if (i == 0 && j == n - 1) continue;
                    if (segments_cross_properly(pts[i], pts[(i + 1) % n], pts[j],
                                                pts[(j + 1) % n])) {
                        std::reverse(pts.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                     pts.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                        crossed = true;
                    }
                }
            }
            if (!crossed) break;
        }
        if (stuck) continue;
        if (!is_simple_polygon(pts)) continue;  // leftover degenerate touching
        return SimplePolygon(std::move(pts));
    }
    throw GeneratorStall("gen_hole: no simple polygon after 1000 retries");
}

Instance gen_cheese(const CheeseParams& params) { return cheese_impl(params, false, "cheese"); }

Instance gen_ccheese(const CheeseParams& params) { return cheese_impl(params, true, "ccheese"); }

Instance gen_maze(const MazeParams& params) {
    if (params.grid_cols < 2 || params.grid_rows < 2)
        throw InvalidParams("maze grid must be at least 2x2");
    if (params.cell_size < 1) throw InvalidParams("cell_size must be >= 1");
    if (params.perturbation_magnitude < 0 || params.perturbation_magnitude >= params.cell_size)
        throw InvalidParams("perturbation_magnitude must be smaller than the corridor width");
    if (sign(params.removal_fraction) < 0 || cmp(params.removal_fraction, Rational(1)) > 0 ||
        sign(params.perturbation_fraction) < 0 || cmp(params.perturbation_fraction, Rational(1)) > 0)
        throw InvalidParams("fractions must lie in [0, 1]");

    Rng rng = make_rng(params.seed);
    long c = params.cell_size;
    long width = c * (2 * params.grid_cols + 1);
    long height = c * (2 * params.grid_rows + 1);

    PolygonWithHoles region;
    region.outer = SimplePolygon({{0, 0}, {width, 0}, {width, height}, {0, height}});

    std::vector<SimplePolygon> obstacles;
    for (int row = 0; row < params.grid_rows; ++row) {
        for (int col = 0; col < params.grid_cols; ++col) {
            if (bernoulli(rng, params.removal_fraction)) continue;
            long x0 = c * (2 * col + 1), y0 = c * (2 * row + 1);
            std::vector<Point> sq{{x0, y0}, {x0 + c, y0}, {x0 + c, y0 + c}, {x0, y0 + c}};
            if (params.perturbation_magnitude > 0 && bernoulli(rng, params.perturbation_fraction)) {
                Point center{Rational(x0) + Rational(c, 2), Rational(y0) + Rational(c, 2)};
                for (int attempt = 0; attempt < 50; ++attempt) {
                    std::vector<Point> cand = sq;
                    std::uint64_t mask = rng_below(rng, 16);
                    for (int v = 0; v < 4; ++v) {
                        if (!(mask & (1u << v))) continue;
                        long dx = rng_range(rng, 0, params.perturbation_magnitude);
                        long dy = rng_range(rng, 0, params.perturbation_magnitude);
                        int sx = cmp(cand[v].x, center.x) > 0 ? 1 : -1;
                        int sy = cmp(cand[v].y, center.y) > 0 ? 1 : -1;
                        cand[v] = Point{cand[v].x + Rational(sx * dx), cand[v].y + Rational(sy * dy)};
                    }
                    if (!is_simple_polygon(cand) || sign(signed_area(cand)) == 0) continue;
                    SimplePolygon poly(cand);
                    bool bad = false;
                    for (const Point& p : cand)
                        if (locate_point(p, region.outer.vertices) != PointLocation::Interior)
                            bad = true;
                    for (const auto& other : obstacles)
                        if (!bad && holes_conflict(poly, other)) bad = true;
                    if (bad) continue;
                    sq = std::move(cand);
                    break;
                }
                // all attempts failed: obstacle stays an unperturbed square
            }
            obstacles.emplace_back(std::move(sq));
        }
    }
    for (auto& o : obstacles) region.holes.push_back(std::move(o));

    Instance inst;
    inst.name = "maze_" + std::to_string(params.grid_cols) + "x" + std::to_string(params.grid_rows) +
                "_" + std::to_string(params.seed);
    inst.region = validate_region(std::move(region));
    GeneratorMeta meta;
    meta.generator = "maze";
    meta.seed = params.seed;
    meta.params = {{"grid_cols", std::to_string(params.grid_cols)},
                   {"grid_rows", std::to_string(params.grid_rows)},
                   {"cell_size", std::to_string(params.cell_size)},
                   {"removal_fraction", rat_to_string(params.removal_fraction)},
                   {"perturbation_fraction", rat_to_string(params.perturbation_fraction)},
                   {"perturbation_magnitude", std::to_string(params.perturbation_magnitude)}};
    inst.meta = std::move(meta);
    return inst;
}

}  // namespace cover
