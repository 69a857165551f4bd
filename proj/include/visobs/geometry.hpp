#ifndef VISOBS_GEOMETRY_HPP
#define VISOBS_GEOMETRY_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "visobs/rational.hpp"

namespace visobs {

struct Point {
    Rat x, y;

    Point() : x(0), y(0) {}
    Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    /// Lexicographic order, used for canonicalization and point indexing.
    bool operator<(const Point& o) const {
        int c = cmp(x, o.x);
        if (c != 0) return c < 0;
        return cmp(y, o.y) < 0;
    }
};

struct Vec {
    Rat x, y;
};

inline Vec operator-(const Point& a, const Point& b) { return Vec{a.x - b.x, a.y - b.y}; }
inline Point operator+(const Point& p, const Vec& v) { return Point(p.x + v.x, p.y + v.y); }
inline Vec operator*(const Rat& s, const Vec& v) { return Vec{s * v.x, s * v.y}; }
inline Vec operator+(const Vec& a, const Vec& b) { return Vec{a.x + b.x, a.y + b.y}; }
inline Vec operator-(const Vec& v) { return Vec{-v.x, -v.y}; }
inline Rat cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }
inline Vec rot90(const Vec& v) { return Vec{-v.y, v.x}; }

/// Sign of the signed area of the triangle pqr: +1 counterclockwise, 0 collinear.
inline int orient(const Point& p, const Point& q, const Point& r) {
    return sign(cross(q - p, r - p));
}

/// Midpoint, or any rational convex combination.
inline Point lerp(const Point& a, const Point& b, const Rat& t) {
    return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
}
inline Point midpoint(const Point& a, const Point& b) { return lerp(a, b, Rat(1, 2)); }

struct Segment {
    Point a, b;

    Segment() = default;
    Segment(Point pa, Point pb) : a(std::move(pa)), b(std::move(pb)) {
        if (a == b) throw std::invalid_argument("degenerate segment");
    }
};

/// True iff q lies on the closed segment ab (a, b, q need not be distinct).
inline bool on_segment_closed(const Point& a, const Point& b, const Point& q) {
    if (orient(a, b, q) != 0) return false;
    return cmp(std::min(a.x, b.x), q.x) <= 0 && cmp(q.x, std::max(a.x, b.x)) <= 0 &&
           cmp(std::min(a.y, b.y), q.y) <= 0 && cmp(q.y, std::max(a.y, b.y)) <= 0;
}

/// True iff q lies on the open segment ab (strictly between the endpoints).
inline bool on_segment_open(const Point& a, const Point& b, const Point& q) {
    return on_segment_closed(a, b, q) && q != a && q != b;
}

enum class SegMode { open, closed };

/// Do two segments share a point? In open mode an intersection that is an
/// endpoint of either segment does not count.
inline bool segments_intersect(const Segment& s1, const Segment& s2, SegMode mode) {
    const Point &a = s1.a, &b = s1.b, &c = s2.a, &d = s2.b;
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);

    if (mode == SegMode::closed) {
        if (o1 * o2 < 0 && o3 * o4 < 0) return true;
        if (o1 == 0 && on_segment_closed(a, b, c)) return true;
        if (o2 == 0 && on_segment_closed(a, b, d)) return true;
        if (o3 == 0 && on_segment_closed(c, d, a)) return true;
        if (o4 == 0 && on_segment_closed(c, d, b)) return true;
        return false;
    }
    // open mode: interiors must meet
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    // collinear overlap or an endpoint lying in the other segment's interior
    if (o1 == 0 && on_segment_open(a, b, c)) return true;
    if (o2 == 0 && on_segment_open(a, b, d)) return true;
    if (o3 == 0 && on_segment_open(c, d, a)) return true;
    if (o4 == 0 && on_segment_open(c, d, b)) return true;
    return false;
}

/// Intersection point of two properly crossing segments (interiors cross in
/// exactly one point, segments not collinear). Returns nullopt when the
/// segments do not cross properly or only touch at shared endpoints; a shared
/// endpoint does not count as a crossing.
inline std::optional<Point> proper_crossing(const Segment& s1, const Segment& s2) {
    const Point &a = s1.a, &b = s1.b, &c = s2.a, &d = s2.b;
    Rat denom = cross(b - a, d - c);
    if (sign(denom) == 0) return std::nullopt;  // parallel or collinear
    Rat t = cross(c - a, d - c) / denom;
    Rat u = cross(c - a, b - a) / denom;
    if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
    Point p = lerp(a, b, t);
    if (p == a || p == b || p == c || p == d) return std::nullopt;
    return p;
}

/// Parameter t in [0,1] of q on segment ab, assuming q lies on the line ab.
inline Rat param_on_segment(const Point& a, const Point& b, const Point& q) {
    Vec d = b - a;
    if (sign(d.x) != 0) return (q.x - a.x) / d.x;
    return (q.y - a.y) / d.y;
}

/// True iff no three of the points are collinear (and all are distinct).
inline bool in_general_position(const std::vector<Point>& pts) {
    size_t n = pts.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (pts[i] == pts[j]) return false;
            for (size_t k = j + 1; k < n; ++k)
                if (orient(pts[i], pts[j], pts[k]) == 0) return false;
        }
    return true;
}

/// Strictly convex polygon, counterclockwise; every vertex extreme.
struct ConvexPolygon {
    std::vector<Point> v;

    size_t size() const { return v.size(); }

    /// +1 strictly inside, 0 on the boundary, -1 strictly outside.
    int side(const Point& q) const {
        bool on = false;
        for (size_t i = 0; i < v.size(); ++i) {
            int o = orient(v[i], v[(i + 1) % v.size()], q);
            if (o < 0) return -1;
            if (o == 0) {
                if (on_segment_closed(v[i], v[(i + 1) % v.size()], q)) on = true;
                else return -1;
            }
        }
        return on ? 0 : 1;
    }
    bool contains(const Point& q) const { return side(q) >= 0; }
    bool strictly_contains(const Point& q) const { return side(q) > 0; }
};

/// Strict convex hull (collinear points dropped from the boundary).
/// Requires at least 3 points not all collinear; degenerate input throws.
inline ConvexPolygon convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    size_t n = pts.size();
    if (n < 3) throw std::invalid_argument("convex hull of fewer than 3 distinct points");
    std::vector<Point> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = n - 1, lo = k + 1; i-- > 0;) {  // upper chain
        while (k >= lo && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() < 3) throw std::invalid_argument("convex hull degenerate (collinear input)");
    return ConvexPolygon{std::move(h)};
}

/// Hull of a point set that may be a single point or a segment as well.
/// Returns the extreme points in counterclockwise order (1, 2 or >=3 of them).
inline std::vector<Point> hull_points_degenerate_ok(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 1) return pts;
    bool collinear = true;
    for (size_t k = 2; k < pts.size() && collinear; ++k)
        if (orient(pts[0], pts[1], pts[k]) != 0) collinear = false;
    if (collinear) return {pts.front(), pts.back()};
    return convex_hull(pts).v;
}

struct BoundingBox {
    Rat xmin, ymin, xmax, ymax;
};

inline BoundingBox bounding_box(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("bounding box of empty set");
    BoundingBox b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
    for (const Point& p : pts) {
        b.xmin = std::min(b.xmin, p.x);
        b.ymin = std::min(b.ymin, p.y);
        b.xmax = std::max(b.xmax, p.x);
        b.ymax = std::max(b.ymax, p.y);
    }
    return b;
}

}  // namespace visobs

#endif
