#include "cover/region_ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "cover/errors.hpp"

namespace cover {

namespace {

// positive-area cleanup after clipping: drop consecutive duplicates,
// reject degenerate results
ConvexCell tidy_cell(ConvexCell cell) {
    ConvexCell out;
    for (const Point& p : cell) {
        if (out.empty() || out.back() != p) out.push_back(p);
    }
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    if (out.size() < 3) return {};
    if (sign(signed_area(out)) <= 0) return {};
    return out;
}

// Certified double-precision orientation: returns the sign of
// cross(a, b, c) on the rounded coordinates with *sure set when the value is
// far enough from zero that rounding cannot have flipped it; callers fall
// back to exact arithmetic otherwise.
inline int dorient(double ax, double ay, double bx, double by, double cx, double cy, bool* sure) {
    double t1 = (bx - ax) * (cy - ay);
    double t2 = (by - ay) * (cx - ax);
    double det = t1 - t2;
    double err = 1e-10 * (std::abs(t1) + std::abs(t2)) + 1e-280;
    if (det > err) {
        *sure = true;
        return 1;
    }
    if (det < -err) {
        *sure = true;
        return -1;
    }
    *sure = false;
    return 0;
}

}  // namespace

ConvexCell clip_halfplane(const ConvexCell& cell, const Point& a, const Point& b) {
    if (cell.empty()) return {};
    ConvexCell out;
    std::size_t n = cell.size();
    std::vector<int> side(n);
    for (std::size_t i = 0; i < n; ++i) side[i] = sign(cross(a, b, cell[i]));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        if (side[i] >= 0) out.push_back(cell[i]);
        if (side[i] * side[j] < 0) {
            auto ip = line_intersection(cell[i], cell[j], a, b);
            if (ip) out.push_back(*ip);
        }
    }
    return tidy_cell(std::move(out));
}

ConvexCell convex_intersect(const ConvexCell& c1, const ConvexCell& c2) {
    ConvexCell cur = c1;
    std::size_t n = c2.size();
    for (std::size_t i = 0; i < n && !cur.empty(); ++i) {
        if (c2[i] == c2[(i + 1) % n]) continue;
        cur = clip_halfplane(cur, c2[i], c2[(i + 1) % n]);
    }
    return cur;
}

std::vector<ConvexCell> subtract_convex(const ConvexCell& cell, const std::vector<Point>& piece) {
    std::vector<ConvexCell> out;
    ConvexCell remaining = cell;
    std::size_t n = piece.size();
    for (std::size_t i = 0; i < n && !remaining.empty(); ++i) {
        const Point& a = piece[i];
        const Point& b = piece[(i + 1) % n];
        if (a == b) continue;
        // part outside this edge leaves the piece for good
        ConvexCell outside = clip_halfplane(remaining, b, a);
        if (!outside.empty()) out.push_back(std::move(outside));
        remaining = clip_halfplane(remaining, a, b);
    }
    // what is left is cell ∩ piece, which the difference discards
    return out;
}

PointLocation point_in_region(const Point& p, const PolygonWithHoles& region) {
    PointLocation outer = locate_point(p, region.outer.vertices);
    if (outer != PointLocation::Interior) return outer;
    for (const auto& hole : region.holes) {
        PointLocation in_hole = locate_point(p, hole.vertices);
        if (in_hole == PointLocation::Interior) return PointLocation::Outside;
        if (in_hole == PointLocation::Boundary) return PointLocation::Boundary;
    }
    return PointLocation::Interior;
}

Point cell_centroid(const ConvexCell& cell) {
    Rational sx = 0, sy = 0;
    for (const Point& p : cell) {
        sx += p.x;
        sy += p.y;
    }
    Rational n(static_cast<long>(cell.size()));
    return Point{sx / n, sy / n};
}

template <typename F>
void RegionCells::for_bins(const BBox& b, F&& f) const {
    int x0 = std::clamp(static_cast<int>((b.min_x - box_.min_x) / cell_w_), 0, nx_ - 1);
    int x1 = std::clamp(static_cast<int>((b.max_x - box_.min_x) / cell_w_), 0, nx_ - 1);
    int y0 = std::clamp(static_cast<int>((b.min_y - box_.min_y) / cell_h_), 0, ny_ - 1);
    int y1 = std::clamp(static_cast<int>((b.max_y - box_.min_y) / cell_h_), 0, ny_ - 1);
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) f(static_cast<std::size_t>(y) * nx_ + x);
}

RegionCells::RegionCells(const PolygonWithHoles& region) : area_(0) {
    for (const Triangle& t : earclip_region(region)) {
        ConvexCell c{t[0], t[1], t[2]};
        area_ += triangle_area(t);
        cell_boxes_.push_back(bbox_of(c));
        cells_.push_back(std::move(c));
    }
    auto add_edges = [&](const std::vector<Point>& cycle) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            Segment s{cycle[i], cycle[(i + 1) % cycle.size()]};
            edge_boxes_.push_back(bbox_of({s.a, s.b}));
            edge_dbl_.push_back({to_double(s.a.x), to_double(s.a.y), to_double(s.b.x),
                                 to_double(s.b.y)});
            boundary_edges_.push_back(std::move(s));
        }
    };
    add_edges(region.outer.vertices);
    for (const auto& h : region.holes) add_edges(h.vertices);

    box_ = bbox_of(region.outer.vertices);
    std::size_t n = std::max<std::size_t>(cells_.size(), 1);
    int side = std::clamp(static_cast<int>(std::sqrt(static_cast<double>(n))), 1, 256);
    nx_ = ny_ = side;
    cell_w_ = std::max((box_.max_x - box_.min_x) / nx_, 1e-9);
    cell_h_ = std::max((box_.max_y - box_.min_y) / ny_, 1e-9);
    cell_bins_.resize(static_cast<std::size_t>(nx_) * ny_);
    edge_bins_.resize(static_cast<std::size_t>(nx_) * ny_);
    for (std::uint32_t i = 0; i < cells_.size(); ++i)
        for_bins(cell_boxes_[i], [&](std::size_t b) { cell_bins_[b].push_back(i); });
    for (std::uint32_t i = 0; i < boundary_edges_.size(); ++i)
        for_bins(edge_boxes_[i], [&](std::size_t b) { edge_bins_[b].push_back(i); });
}

std::vector<std::size_t> RegionCells::cells_overlapping(const BBox& box) const {
    std::vector<std::uint32_t> ids;
    for_bins(box, [&](std::size_t b) {
        for (std::uint32_t i : cell_bins_[b]) ids.push_back(i);
    });
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<std::size_t> out;
    for (std::uint32_t i : ids)
        if (cell_boxes_[i].overlaps(box)) out.push_back(i);
    return out;
}

namespace {

// Does segment (p, q) meet the open interior of the convex CCW cycle `piece`?
// Clip the parameter interval against every edge half-plane, then probe the
// midpoint of what survives with strict tests.
bool segment_meets_open_convex(const Point& p, const Point& q, const std::vector<Point>& piece) {
    Rational lo = 0, hi = 1;
    std::size_t n = piece.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = piece[i];
        const Point& b = piece[(i + 1) % n];
        if (a == b) continue;
        Rational fp = cross(a, b, p);
        Rational fq = cross(a, b, q);
        Rational d = fq - fp;
        if (sign(d) == 0) {
            if (sign(fp) < 0) return false;
            continue;
        }
        Rational t = -fp / d;
        if (sign(d) > 0) {
            if (cmp(t, lo) > 0) lo = t;
        } else {
            if (cmp(t, hi) < 0) hi = t;
        }
        if (cmp(lo, hi) > 0) return false;
    }
    Rational tm = (lo + hi) / 2;
    Point m{p.x + (q.x - p.x) * tm, p.y + (q.y - p.y) * tm};
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = piece[i];
        const Point& b = piece[(i + 1) % n];
        if (a == b) continue;
        if (sign(cross(a, b, m)) <= 0) return false;
    }
    return true;
}

}  // namespace

bool RegionCells::contains_piece(const std::vector<Point>& piece) const {
    if (sign(signed_area(piece)) <= 0) return false;  // caller passes CCW pieces
    // A positive-area convex piece lies in the closed region iff no boundary
    // point is strictly inside it (a boundary point interior to the piece has
    // exterior points arbitrarily close, and none can cross without one) and
    // one interior point of the piece — its centroid — is in the region.
    BBox pb = bbox_of(piece);
    std::vector<std::uint32_t> ids;
    for_bins(pb, [&](std::size_t bin) {
        for (std::uint32_t i : edge_bins_[bin]) ids.push_back(i);
    });
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<double> hx(piece.size()), hy(piece.size());
    for (std::size_t k = 0; k < piece.size(); ++k) {
        hx[k] = to_double(piece[k].x);
        hy[k] = to_double(piece[k].y);
    }
    for (std::uint32_t i : ids) {
        if (!edge_boxes_[i].overlaps(pb)) continue;
        // double fast path: an edge certainly strictly outside one of the
        // piece's half-planes cannot meet the interior
        const auto& e = edge_dbl_[i];
        bool outside = false;
        for (std::size_t k = 0; k < piece.size() && !outside; ++k) {
            std::size_t k1 = (k + 1) % piece.size();
            bool sp, sq;
            int op = dorient(hx[k], hy[k], hx[k1], hy[k1], e[0], e[1], &sp);
            int oq = dorient(hx[k], hy[k], hx[k1], hy[k1], e[2], e[3], &sq);
            if (sp && sq && op < 0 && oq < 0) outside = true;
        }
        if (outside) continue;
        if (segment_meets_open_convex(boundary_edges_[i].a, boundary_edges_[i].b, piece))
            return false;
    }
    Point c = cell_centroid(piece);
    BBox cb{to_double(c.x), to_double(c.y), to_double(c.x), to_double(c.y)};
    for (std::size_t i : cells_overlapping(cb)) {
        const ConvexCell& cell = cells_[i];
        bool inside = true;
        for (std::size_t e = 0; e < cell.size() && inside; ++e)
            if (sign(cross(cell[e], cell[(e + 1) % cell.size()], c)) < 0) inside = false;
        if (inside) return true;
    }
    return false;
}

bool RegionCells::segment_crosses_boundary(const Point& a, const Point& b) const {
    BBox sb = bbox_of({a, b});
    std::vector<std::uint32_t> ids;
    for_bins(sb, [&](std::size_t bin) {
        for (std::uint32_t i : edge_bins_[bin]) ids.push_back(i);
    });
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    double ax = to_double(a.x), ay = to_double(a.y), bx = to_double(b.x), by = to_double(b.y);
    for (std::uint32_t i : ids) {
        if (!edge_boxes_[i].overlaps(sb)) continue;
        const auto& e = edge_dbl_[i];
        bool s1, s2, s3, s4;
        int o1 = dorient(ax, ay, bx, by, e[0], e[1], &s1);
        int o2 = dorient(ax, ay, bx, by, e[2], e[3], &s2);
        int o3 = dorient(e[0], e[1], e[2], e[3], ax, ay, &s3);
        int o4 = dorient(e[0], e[1], e[2], e[3], bx, by, &s4);
        if (s1 && s2 && s3 && s4) {
            if (o1 * o2 < 0 && o3 * o4 < 0) return true;
            continue;
        }
        if (segments_cross_properly(a, b, boundary_edges_[i].a, boundary_edges_[i].b)) return true;
    }
    return false;
}

bool piece_contained(const ConvexPolygon& piece, const PolygonWithHoles& region) {
    RegionCells cells(region);
    return cells.contains_piece(piece.vertices);
}

std::vector<PolygonWithHoles> region_difference(const PolygonWithHoles& region,
                                                const ConvexPolygon& piece) {
    Residual res(region);
    res.subtract(piece.vertices);
    std::vector<PolygonWithHoles> out;
    for (const ConvexCell& c : res.cells()) {
        PolygonWithHoles component;
        component.outer = SimplePolygon(c);
        out.push_back(std::move(component));
    }
    return out;
}

Residual::Residual(const PolygonWithHoles& region) {
    for (const Triangle& t : earclip_region(region)) {
        ConvexCell c{t[0], t[1], t[2]};
        boxes_.push_back(bbox_of(c));
        cells_.push_back(std::move(c));
    }
}

Residual::Residual(std::vector<ConvexCell> cells) : cells_(std::move(cells)) {
    for (const auto& c : cells_) boxes_.push_back(bbox_of(c));
}

void Residual::subtract(const std::vector<Point>& piece) {
    BBox pb = bbox_of(piece);
    std::vector<ConvexCell> next_cells;
    std::vector<BBox> next_boxes;
    next_cells.reserve(cells_.size());
    next_boxes.reserve(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (!boxes_[i].overlaps(pb)) {
            next_cells.push_back(std::move(cells_[i]));
            next_boxes.push_back(boxes_[i]);
            continue;
        }
        for (ConvexCell& part : subtract_convex(cells_[i], piece)) {
            next_boxes.push_back(bbox_of(part));
            next_cells.push_back(std::move(part));
        }
    }
    cells_ = std::move(next_cells);
    boxes_ = std::move(next_boxes);
}

Rational Residual::area() const {
    Rational total = 0;
    for (const auto& c : cells_) total += signed_area(c);
    return total;
}

}  // namespace cover
