#ifndef VISOBS_POLYGON_HPP
#define VISOBS_POLYGON_HPP

#include <stdexcept>
#include <vector>

#include "visobs/geometry.hpp"

namespace visobs {

/// A simple polygon whose open interior is the obstacle. Stored
/// counterclockwise with no repeated and no three consecutive collinear
/// vertices, so polygon equality is decidable on the vertex lists.
struct SimplePolygon {
    std::vector<Point> v;

    SimplePolygon() = default;
    explicit SimplePolygon(std::vector<Point> verts) : v(std::move(verts)) {}

    size_t size() const { return v.size(); }
    const Point& at(size_t i) const { return v[i % v.size()]; }
    Segment edge(size_t i) const { return Segment(v[i % v.size()], v[(i + 1) % v.size()]); }

    Rat twice_area() const {
        Rat a(0);
        for (size_t i = 0; i < v.size(); ++i) a += cross(v[i] - v[0], v[(i + 1) % v.size()] - v[0]);
        return a;
    }

    /// Drops consecutive duplicates and collinear middle vertices and makes
    /// the orientation counterclockwise. Throws on degenerate input.
    void canonicalize() {
        if (v.size() < 3) throw std::invalid_argument("polygon with fewer than 3 vertices");
        std::vector<Point> out;
        size_t n = v.size();
        for (size_t i = 0; i < n; ++i) {
            const Point& prev = v[(i + n - 1) % n];
            const Point& cur = v[i];
            const Point& next = v[(i + 1) % n];
            if (cur == prev) continue;
            if (orient(prev, cur, next) == 0 && cur != next) continue;
            out.push_back(cur);
        }
        if (out.size() < 3) throw std::invalid_argument("polygon degenerates to a segment");
        v = std::move(out);
        if (sign(twice_area()) < 0) std::reverse(v.begin(), v.end());
        if (sign(twice_area()) == 0) throw std::invalid_argument("polygon with zero area");
    }

    /// Non-self-intersecting boundary check (closed-mode test on every
    /// non-adjacent edge pair, shared endpoints allowed only between
    /// neighbours).
    bool is_simple() const {
        size_t n = v.size();
        if (n < 3) return false;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
                Segment ei = edge(i), ej = edge(j);
                if (adjacent) {
                    // neighbours may share exactly their common endpoint
                    if (segments_intersect(ei, ej, SegMode::open)) return false;
                } else {
                    if (segments_intersect(ei, ej, SegMode::closed)) return false;
                }
            }
        return true;
    }

    /// Full validation used by file readers and constructors.
    void validate() const {
        if (v.size() < 3) throw std::invalid_argument("polygon with fewer than 3 vertices");
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] == v[(i + 1) % v.size()]) throw std::invalid_argument("repeated polygon vertex");
            if (orient(v[(i + v.size() - 1) % v.size()], v[i], v[(i + 1) % v.size()]) == 0)
                throw std::invalid_argument("collinear polygon vertices (not canonical)");
        }
        if (!is_simple()) throw std::invalid_argument("self-intersecting polygon");
        if (sign(twice_area()) <= 0) throw std::invalid_argument("polygon not counterclockwise");
    }

    /// +1 strictly inside, 0 on the boundary, -1 outside. Exact winding test.
    int side(const Point& q) const {
        size_t n = v.size();
        for (size_t i = 0; i < n; ++i)
            if (on_segment_closed(v[i], v[(i + 1) % n], q)) return 0;
        long w = 0;
        for (size_t i = 0; i < n; ++i) {
            const Point& a = v[i];
            const Point& b = v[(i + 1) % n];
            if (cmp(a.y, q.y) <= 0) {
                if (cmp(b.y, q.y) > 0 && orient(a, b, q) > 0) ++w;
            } else {
                if (cmp(b.y, q.y) <= 0 && orient(a, b, q) < 0) --w;
            }
        }
        return w != 0 ? 1 : -1;
    }
    bool strictly_inside(const Point& q) const { return side(q) > 0; }

    /// A point in the open interior (for face location / classification).
    Point interior_point() const;
};

/// True iff the segment meets the open interior of the polygon. Touching or
/// running along the boundary does not count: the obstacle is open.
/// Precondition per the visibility semantics: callers ensure neither endpoint
/// is strictly interior when asking a visibility question; the test itself is
/// well defined regardless.
inline bool segment_meets_open_polygon(const Segment& s, const SimplePolygon& poly) {
    // Cut the segment at every boundary contact, then test the open pieces.
    std::vector<Rat> ts;
    ts.push_back(Rat(0));
    ts.push_back(Rat(1));
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        Segment e = poly.edge(i);
        if (auto p = proper_crossing(s, e)) ts.push_back(param_on_segment(s.a, s.b, *p));
        // endpoint of the edge lying on the segment
        if (on_segment_closed(s.a, s.b, e.a)) ts.push_back(param_on_segment(s.a, s.b, e.a));
        if (on_segment_closed(s.a, s.b, e.b)) ts.push_back(param_on_segment(s.a, s.b, e.b));
        // endpoint of the segment lying on the edge
        if (on_segment_closed(e.a, e.b, s.a)) ts.push_back(Rat(0));
        if (on_segment_closed(e.a, e.b, s.b)) ts.push_back(Rat(1));
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        Rat mid = (ts[i] + ts[i + 1]) / 2;
        if (poly.side(lerp(s.a, s.b, mid)) > 0) return true;
    }
    return false;
}

inline Point SimplePolygon::interior_point() const {
    // Classic ear argument: take the lowest-leftmost vertex v (convex corner),
    // with neighbours a and b. If no other vertex lies in triangle avb, its
    // centroid is interior; otherwise connect v to the contained vertex q
    // farthest from line ab and take a point on that diagonal.
    size_t n = v.size();
    size_t iv = 0;
    for (size_t i = 1; i < n; ++i)
        if (v[i] < v[iv]) iv = i;
    const Point& pv = v[iv];
    const Point& pa = v[(iv + n - 1) % n];
    const Point& pb = v[(iv + 1) % n];
    std::optional<size_t> best;
    Rat best_d(0);
    for (size_t i = 0; i < n; ++i) {
        if (i == iv || i == (iv + n - 1) % n || i == (iv + 1) % n) continue;
        if (orient(pa, pv, v[i]) >= 0 && orient(pv, pb, v[i]) >= 0 && orient(pb, pa, v[i]) >= 0) {
            Rat d = rat_abs(cross(pa - pb, v[i] - pb));
            if (!best || d > best_d) {
                best = i;
                best_d = d;
            }
        }
    }
    Point cand = best ? midpoint(pv, v[*best])
                      : Point((pa.x + pv.x + pb.x) / 3, (pa.y + pv.y + pb.y) / 3);
    if (strictly_inside(cand)) return cand;
    // Fall back to halving toward the convex corner; terminates because a
    // neighbourhood of v inside the corner wedge belongs to the interior.
    Point target = cand;
    for (int it = 0; it < 256; ++it) {
        target = midpoint(pv, target);
        if (strictly_inside(target)) return target;
    }
    throw std::logic_error("interior_point: no interior point found");
}

}  // namespace visobs

#endif
