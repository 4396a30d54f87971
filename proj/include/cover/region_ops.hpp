#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "cover/earclip.hpp"
#include "cover/polygon.hpp"

namespace cover {

// Convex CCW cell with positive area; the internal currency of every exact
// region computation. A region is held as a set of interior-disjoint cells,
// so "piece inside region" and "region minus piece" reduce to convex-convex
// clipping, which is robust under exact arithmetic.
using ConvexCell = std::vector<Point>;

// Keep the part of `cell` on the closed left side of the directed line a->b.
// Returns an empty vector when nothing with positive area remains.
ConvexCell clip_halfplane(const ConvexCell& cell, const Point& a, const Point& b);

ConvexCell convex_intersect(const ConvexCell& c1, const ConvexCell& c2);

// closure(cell) \ interior(piece), as disjoint convex cells. `piece` is CCW convex.
std::vector<ConvexCell> subtract_convex(const ConvexCell& cell, const std::vector<Point>& piece);

PointLocation point_in_region(const Point& p, const PolygonWithHoles& region);

Point cell_centroid(const ConvexCell& cell);

// Convex decomposition of a region plus a uniform bbox grid over the cells,
// cached because containment queries come in large batches (visibility graphs,
// collection generation).
class RegionCells {
public:
    explicit RegionCells(const PolygonWithHoles& region);

    const std::vector<ConvexCell>& cells() const { return cells_; }
    Rational area() const { return area_; }

    // Closed containment: piece lies in the closure of the region.
    bool contains_piece(const std::vector<Point>& piece) const;

    // Exact sound prefilter: true when segment (a, b) properly crosses a
    // region boundary edge, which rules out containment of any convex set
    // holding both endpoints.
    bool segment_crosses_boundary(const Point& a, const Point& b) const;

    std::vector<std::size_t> cells_overlapping(const BBox& box) const;

private:
    std::vector<ConvexCell> cells_;
    std::vector<BBox> cell_boxes_;
    Rational area_;
    std::vector<Segment> boundary_edges_;
    std::vector<BBox> edge_boxes_;
    std::vector<std::array<double, 4>> edge_dbl_;  // rounded endpoints, fast-path filters
    // uniform grids over cell and edge bboxes
    BBox box_;
    double cell_w_ = 1, cell_h_ = 1;
    int nx_ = 1, ny_ = 1;
    std::vector<std::vector<std::uint32_t>> cell_bins_;
    std::vector<std::vector<std::uint32_t>> edge_bins_;

    template <typename F>
    void for_bins(const BBox& b, F&& f) const;
};

bool piece_contained(const ConvexPolygon& piece, const PolygonWithHoles& region);

// Exact closure(region) \ interior(piece); disjoint hole-free components,
// zero-area slivers dropped.
std::vector<PolygonWithHoles> region_difference(const PolygonWithHoles& region,
                                                const ConvexPolygon& piece);

// What remains of a region after subtracting pieces one by one.
class Residual {
public:
    explicit Residual(const PolygonWithHoles& region);
    explicit Residual(std::vector<ConvexCell> cells);

    void subtract(const std::vector<Point>& convex_ccw_piece);
    bool empty() const { return cells_.empty(); }
    Rational area() const;
    const std::vector<ConvexCell>& cells() const { return cells_; }

private:
    std::vector<ConvexCell> cells_;
    std::vector<BBox> boxes_;
};

}  // namespace cover
