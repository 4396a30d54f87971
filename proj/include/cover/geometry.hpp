#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cover/rational.hpp"

namespace cover {

struct Point {
    Rational x;
    Rational y;

    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
    Point(long px, long py) : x(px), y(py) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    // lexicographic, used for canonical orderings
    bool operator<(const Point& o) const {
        int c = cmp(x, o.x);
        if (c != 0) return c < 0;
        return y < o.y;
    }

    std::string str() const { return "(" + rat_to_string(x) + ", " + rat_to_string(y) + ")"; }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

struct Segment {
    Point a;
    Point b;
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

// Exact cross product (q - p) x (r - p).
inline Rational cross(const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

inline Orientation orientation(const Point& p, const Point& q, const Point& r) {
    int s = sign(cross(p, q, r));
    return s > 0 ? Orientation::CCW : (s < 0 ? Orientation::CW : Orientation::Collinear);
}

inline Rational dot(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

// p on closed segment [a, b]; collinearity plus box check.
inline bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orientation(a, b, p) != Orientation::Collinear) return false;
    return cmp(std::min(a.x, b.x), p.x) <= 0 && cmp(p.x, std::max(a.x, b.x)) <= 0 &&
           cmp(std::min(a.y, b.y), p.y) <= 0 && cmp(p.y, std::max(a.y, b.y)) <= 0;
}

// Proper crossing: interiors of the two segments intersect in a single point.
inline bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = sign(cross(a, b, c));
    int o2 = sign(cross(a, b, d));
    int o3 = sign(cross(c, d, a));
    int o4 = sign(cross(c, d, b));
    return o1 * o2 < 0 && o3 * o4 < 0;
}

// Closed segments share at least one point.
inline bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (segments_cross_properly(a, b, c, d)) return true;
    return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
}

// Intersection point of lines (a,b) and (c,d); nullopt when parallel.
inline std::optional<Point> line_intersection(const Point& a, const Point& b, const Point& c,
                                              const Point& d) {
    Rational denom = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
    if (sign(denom) == 0) return std::nullopt;
    Rational t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / denom;
    return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

}  // namespace cover
