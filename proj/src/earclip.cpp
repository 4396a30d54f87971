#include "cover/earclip.hpp"

#include <algorithm>
#include <limits>
#include <list>
#include <optional>

#include "cover/errors.hpp"

namespace cover {
namespace {

// p strictly inside or on the closed CCW triangle (a, b, c).
bool in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
    return sign(cross(a, b, p)) >= 0 && sign(cross(b, c, p)) >= 0 && sign(cross(c, a, p)) >= 0;
}

bool in_open_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
    return sign(cross(a, b, p)) > 0 && sign(cross(b, c, p)) > 0 && sign(cross(c, a, p)) > 0;
}

// True when segment r->x passes through the open interior of CCW triangle
// (a, b, c): clip the segment to the closed triangle and probe the midpoint
// of what remains.
bool segment_enters_triangle(const Point& r, const Point& x, const Point& a, const Point& b,
                             const Point& c) {
    Rational t0 = 0, t1 = 1;
    const Point* tri[4] = {&a, &b, &c, &a};
    for (int e = 0; e < 3; ++e) {
        Rational f_r = cross(*tri[e], *tri[e + 1], r);
        Rational f_x = cross(*tri[e], *tri[e + 1], x);
        Rational d = f_x - f_r;
        if (sign(d) == 0) {
            if (sign(f_r) < 0) return false;
            continue;
        }
        Rational t = -f_r / d;
        if (sign(d) > 0)
            t0 = std::max(t0, t);
        else
            t1 = std::min(t1, t);
    }
    if (cmp(t0, t1) >= 0) return false;
    Rational tm = (t0 + t1) / 2;
    Point mid{r.x + tm * (x.x - r.x), r.y + tm * (x.y - r.y)};
    return in_open_triangle(mid, a, b, c);
}

struct Vertex {
    Point p;
    double x, y;  // lossy mirrors for prefilters
};

Vertex make_vertex(const Point& p) {
    return Vertex{p, to_double(p.x), to_double(p.y)};
}

// Bridges duplicate their target vertex, so a point can occur several times
// in the cycle with different local wedges. A new bridge toward m must attach
// to the copy whose interior cone contains the direction to m, or the wedges
// interleave and the cycle stops being weakly simple.
std::size_t pick_copy(const std::vector<Vertex>& poly, std::size_t candidate, const Point& m) {
    const Point& tp = poly[candidate].p;
    std::size_t n = poly.size();
    std::optional<std::size_t> weak;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(poly[i].p == tp)) continue;
        const Point& a = poly[(i + n - 1) % n].p;
        const Point& b = poly[(i + 1) % n].p;
        int sa = sign(cross(a, tp, m));
        int sb = sign(cross(tp, b, m));
        bool convex = sign(cross(a, tp, b)) >= 0;
        bool strict = convex ? (sa > 0 && sb > 0) : (sa > 0 || sb > 0);
        bool loose = convex ? (sa >= 0 && sb >= 0) : (sa >= 0 || sb >= 0);
        if (strict) return i;
        if (loose && !weak) weak = i;
    }
    return weak ? *weak : candidate;
}

// Splices one hole (CW cycle) into the CCW polygon via a bridge from the
// hole's rightmost vertex to a visible polygon vertex.
void splice_hole(std::vector<Vertex>& poly, const std::vector<Point>& hole_cw) {
    // rightmost hole vertex (max x, then max y)
    std::size_t mi = 0;
    for (std::size_t i = 1; i < hole_cw.size(); ++i) {
        int c = cmp(hole_cw[i].x, hole_cw[mi].x);
        if (c > 0 || (c == 0 && hole_cw[i].y > hole_cw[mi].y)) mi = i;
    }
    const Point& m = hole_cw[mi];

    // closest intersection of the ray m + t*(1,0), t > 0, with the polygon
    std::optional<Rational> best_x;
    std::size_t best_edge = 0;
    bool best_is_vertex = false;
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly[i].p;
        const Point& b = poly[(i + 1) % n].p;
        bool a_on = cmp(a.y, m.y) == 0, b_on = cmp(b.y, m.y) == 0;
        Rational ix;
        bool is_vertex = false;
        if (a_on && b_on) {
            // horizontal overlap with the ray: nearest endpoint to the right
            Rational lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
            if (cmp(hi, m.x) < 0) continue;
            ix = cmp(lo, m.x) > 0 ? lo : m.x;
            if (cmp(ix, m.x) == 0) ix = hi;  // m on the edge would mean invalid input
            is_vertex = true;
        } else if ((cmp(a.y, m.y) <= 0 && cmp(b.y, m.y) >= 0) ||
                   (cmp(b.y, m.y) <= 0 && cmp(a.y, m.y) >= 0)) {
            ix = a.x + (m.y - a.y) * (b.x - a.x) / (b.y - a.y);
            is_vertex = a_on || b_on;
        } else {
            continue;
        }
        if (cmp(ix, m.x) <= 0) continue;
        if (!best_x || cmp(ix, *best_x) < 0) {
            best_x = ix;
            best_edge = i;
            best_is_vertex = is_vertex;
        }
    }
    if (!best_x) throw Error("splice_hole: hole ray finds no boundary to the right");

    Point hit{*best_x, m.y};
    // candidate bridge target
    std::size_t target;
    if (best_is_vertex) {
        target = poly[best_edge].p == hit ? best_edge : (best_edge + 1) % n;
        if (poly[target].p != hit) throw Error("splice_hole: vertex hit bookkeeping is off");
    } else {
        // endpoint of the hit edge with larger x
        const Point& a = poly[best_edge].p;
        const Point& b = poly[(best_edge + 1) % n].p;
        target = cmp(a.x, b.x) > 0 ? best_edge : (best_edge + 1) % n;
        // a reflex vertex inside triangle (m, hit, target) would block the
        // bridge; take the blocking one with the smallest angle to the ray
        const Point& tp = poly[target].p;
        std::optional<std::size_t> blocker;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == target) continue;
            const Point& r = poly[i].p;
            if (r == m || r == tp) continue;
            std::size_t prev = (i + n - 1) % n, next = (i + 1) % n;
            bool reflex = sign(cross(poly[prev].p, r, poly[next].p)) < 0;
            if (!reflex) continue;
            if (!in_closed_triangle(r, m, hit, tp) && !in_closed_triangle(r, m, tp, hit)) continue;
            if (cmp(r.x, m.x) <= 0) continue;
            if (!blocker) {
                blocker = i;
                continue;
            }
            const Point& s = poly[*blocker].p;
            // smaller angle |dy|/dx to the +x ray wins; ties by smaller dx
            Rational lhs = abs(r.y - m.y) * (s.x - m.x);
            Rational rhs = abs(s.y - m.y) * (r.x - m.x);
            int c = cmp(lhs, rhs);
            if (c < 0 || (c == 0 && cmp(r.x, s.x) < 0)) blocker = i;
        }
        if (blocker) target = *blocker;
    }
    target = pick_copy(poly, target, m);

    // rebuild: ..., target, m, hole cycle, m, target, ...
    std::vector<Vertex> merged;
    merged.reserve(poly.size() + hole_cw.size() + 2);
    for (std::size_t i = 0; i <= target; ++i) merged.push_back(poly[i]);
    for (std::size_t k = 0; k < hole_cw.size(); ++k)
        merged.push_back(make_vertex(hole_cw[(mi + k) % hole_cw.size()]));
    merged.push_back(make_vertex(m));
    for (std::size_t i = target; i < poly.size(); ++i) merged.push_back(poly[i]);
    poly = std::move(merged);
}

std::vector<Triangle> earclip_cycle(std::vector<Vertex> verts);

// A weakly simple cycle that revisits a vertex (hole bridges do this) can
// have no vertex ear at all: the triangulation's leaf triangles may pair
// edges from different passes through the repeated point. Splitting the
// cycle there yields two weakly simple cycles that tile the same region.
std::vector<Triangle> split_at_repeat(const std::vector<Vertex>& verts) {
    std::size_t n = verts.size();
    auto area_sign = [](const std::vector<Vertex>& cyc) {
        if (cyc.size() < 3) return 0;
        std::vector<Point> pts;
        pts.reserve(cyc.size());
        for (const auto& v : cyc) pts.push_back(v.p);
        return sign(signed_area(pts));
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(verts[i].p == verts[j].p)) continue;
            std::vector<Vertex> a(verts.begin() + i, verts.begin() + j);
            std::vector<Vertex> b(verts.begin() + j, verts.end());
            b.insert(b.end(), verts.begin(), verts.begin() + i);
            int sa = area_sign(a), sb = area_sign(b);
            if (sa < 0 || sb < 0) continue;  // wedges interleave here; try another pair
            std::vector<Triangle> out =
                sa == 0 ? std::vector<Triangle>{} : earclip_cycle(std::move(a));
            std::vector<Triangle> more =
                sb == 0 ? std::vector<Triangle>{} : earclip_cycle(std::move(b));
            out.insert(out.end(), more.begin(), more.end());
            return out;
        }
    }
    std::string cycle;
    for (const auto& v : verts) cycle += v.p.str() + " ";
    throw Error("ear clipping made no progress on a repeat-free cycle: " + cycle);
}

std::vector<Triangle> earclip_cycle(std::vector<Vertex> verts) {
    std::vector<Triangle> out;
    std::size_t n = verts.size();
    if (n < 3) return out;
    std::vector<std::size_t> next(n), prev(n);
    for (std::size_t i = 0; i < n; ++i) {
        next[i] = (i + 1) % n;
        prev[i] = (i + n - 1) % n;
    }
    std::size_t remaining = n;
    auto remove_vertex = [&](std::size_t i) {
        next[prev[i]] = next[i];
        prev[next[i]] = prev[i];
        --remaining;
    };

    std::size_t cur = 0;
    std::size_t since_progress = 0;
    while (remaining > 3) {
        std::size_t p = prev[cur], q = next[cur];
        const Point &pp = verts[p].p, &cp = verts[cur].p, &qp = verts[q].p;
        bool clipped = false;
        if (pp == cp || cp == qp) {
            remove_vertex(cur);  // consecutive duplicate left behind by a spike
            clipped = true;
        } else {
            int turn = sign(cross(pp, cp, qp));
            if (turn == 0) {
                // straight vertex or spike: removable without changing the region
                remove_vertex(cur);
                clipped = true;
            } else if (turn > 0) {
                // ear test: the closed triangle (p, cur, q) must contain no
                // piece of the rest of the cycle in its interior. Bridge
                // duplicates make the cycle only weakly simple, so a vertex
                // sitting exactly on the triangle boundary is fine as long as
                // its incident edges stay out of the interior.
                double min_x = std::min({verts[p].x, verts[cur].x, verts[q].x}) - 1e-6;
                double max_x = std::max({verts[p].x, verts[cur].x, verts[q].x}) + 1e-6;
                double min_y = std::min({verts[p].y, verts[cur].y, verts[q].y}) - 1e-6;
                double max_y = std::max({verts[p].y, verts[cur].y, verts[q].y}) + 1e-6;
                bool blocked = false;
                for (std::size_t i = next[q]; i != p; i = next[i]) {
                    if (verts[i].x < min_x || verts[i].x > max_x || verts[i].y < min_y ||
                        verts[i].y > max_y)
                        continue;
                    const Point& r = verts[i].p;
                    if (in_open_triangle(r, pp, cp, qp)) {
                        blocked = true;
                        break;
                    }
                    if (in_closed_triangle(r, pp, cp, qp) &&
                        (segment_enters_triangle(r, verts[prev[i]].p, pp, cp, qp) ||
                         segment_enters_triangle(r, verts[next[i]].p, pp, cp, qp))) {
                        blocked = true;
                        break;
                    }
                }
                // a chain can also slice through via the open diagonal (p, q)
                // without leaving a vertex in the triangle
                for (std::size_t i = next[q]; !blocked && i != p; i = next[i]) {
                    std::size_t j = next[i];
                    if (j == p) break;
                    if ((verts[i].x < min_x && verts[j].x < min_x) ||
                        (verts[i].x > max_x && verts[j].x > max_x) ||
                        (verts[i].y < min_y && verts[j].y < min_y) ||
                        (verts[i].y > max_y && verts[j].y > max_y))
                        continue;
                    if (segments_cross_properly(pp, qp, verts[i].p, verts[j].p)) blocked = true;
                }
                if (!blocked) {
                    out.push_back({pp, cp, qp});
                    remove_vertex(cur);
                    clipped = true;
                }
            }
        }
        if (clipped) {
            cur = p;  // re-examine the corner the clip just reshaped
            since_progress = 0;
        } else {
            cur = next[cur];
            if (++since_progress > remaining + 1) {
                std::vector<Vertex> rest;
                rest.reserve(remaining);
                std::size_t v = cur;
                do {
                    rest.push_back(verts[v]);
                    v = next[v];
                } while (v != cur);
                std::vector<Triangle> more = split_at_repeat(rest);
                out.insert(out.end(), more.begin(), more.end());
                return out;
            }
        }
    }
    if (remaining == 3) {
        std::size_t a = cur, b = next[cur], c = next[b];
        if (sign(cross(verts[a].p, verts[b].p, verts[c].p)) > 0)
            out.push_back({verts[a].p, verts[b].p, verts[c].p});
    }
    return out;
}

}  // namespace

std::vector<Triangle> earclip_region(const PolygonWithHoles& region) {
    // normalize winding: outer CCW, holes CW
    std::vector<Point> outer = region.outer.vertices;
    if (sign(signed_area(outer)) < 0) std::reverse(outer.begin(), outer.end());
    std::vector<Vertex> poly;
    poly.reserve(outer.size());
    for (const Point& p : outer) poly.push_back(make_vertex(p));

    // splice holes right-to-left so bridges never cross previously added ones
    std::vector<std::vector<Point>> holes;
    for (const auto& h : region.holes) {
        std::vector<Point> hv = h.vertices;
        if (sign(signed_area(hv)) > 0) std::reverse(hv.begin(), hv.end());
        holes.push_back(std::move(hv));
    }
    std::sort(holes.begin(), holes.end(), [](const auto& a, const auto& b) {
        Point ma = *std::max_element(a.begin(), a.end());
        Point mb = *std::max_element(b.begin(), b.end());
        return mb < ma;
    });
    for (const auto& h : holes) splice_hole(poly, h);
    return earclip_cycle(std::move(poly));
}

std::vector<Triangle> earclip_simple(std::vector<Point> cycle) {
    if (sign(signed_area(cycle)) < 0) std::reverse(cycle.begin(), cycle.end());
    std::vector<Vertex> verts;
    verts.reserve(cycle.size());
    for (const Point& p : cycle) verts.push_back(make_vertex(p));
    return earclip_cycle(std::move(verts));
}

}  // namespace cover
