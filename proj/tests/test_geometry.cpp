#include <random>

#include "doctest.h"
#include "visobs/geometry.hpp"
#include "visobs/polygon.hpp"

using namespace visobs;

namespace {

Point P(long x, long y) { return Point(Rat(x), Rat(y)); }
Point Pr(long xn, long xd, long yn, long yd) { return Point(rat(xn, xd), rat(yn, yd)); }

SimplePolygon square(long cx, long cy, long half) {
    SimplePolygon p({P(cx - half, cy - half), P(cx + half, cy - half), P(cx + half, cy + half),
                     P(cx - half, cy + half)});
    p.validate();
    return p;
}

// Brute-force membership oracle: sample rational points on the segment and
// test polygon membership directly, independent of the interval-splitting
// implementation path.
bool oracle_segment_meets_interior(const Segment& s, const SimplePolygon& poly, int grid) {
    for (int i = 1; i < grid; ++i) {
        Point q = lerp(s.a, s.b, Rat(i, grid));
        if (poly.side(q) > 0) return true;
    }
    return false;
}

// O(n^4)-style extremality oracle: p is on the hull iff it is not inside or
// on a triangle of three other points (strict interior of the hull).
bool oracle_is_extreme(const std::vector<Point>& pts, size_t idx) {
    size_t n = pts.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                if (i == idx || j == idx || k == idx) continue;
                const Point &a = pts[i], &b = pts[j], &c = pts[k];
                if (orient(a, b, c) == 0) continue;
                // strict containment in the triangle
                int o1 = orient(a, b, pts[idx]);
                int o2 = orient(b, c, pts[idx]);
                int o3 = orient(c, a, pts[idx]);
                if ((o1 > 0 && o2 > 0 && o3 > 0) || (o1 < 0 && o2 < 0 && o3 < 0)) return false;
            }
    return true;
}

}  // namespace

TEST_CASE("orient basic examples") {
    CHECK(orient(P(0, 0), P(1, 0), P(0, 1)) == 1);
    CHECK(orient(P(0, 0), P(1, 1), P(2, 2)) == 0);
    CHECK(orient(P(0, 0), P(0, 1), P(1, 0)) == -1);
}

TEST_CASE("orient antisymmetry under argument swaps") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        Point a = P((long)(rng() % 41) - 20, (long)(rng() % 41) - 20);
        Point b = P((long)(rng() % 41) - 20, (long)(rng() % 41) - 20);
        Point c = P((long)(rng() % 41) - 20, (long)(rng() % 41) - 20);
        CHECK(orient(a, b, c) == -orient(b, a, c));
        CHECK(orient(a, b, c) == -orient(a, c, b));
        CHECK(orient(a, b, c) == orient(b, c, a));
    }
}

TEST_CASE("segment intersection modes") {
    CHECK(segments_intersect(Segment(P(0, 0), P(2, 2)), Segment(P(0, 2), P(2, 0)), SegMode::closed));
    CHECK(segments_intersect(Segment(P(0, 0), P(2, 2)), Segment(P(0, 2), P(2, 0)), SegMode::open));
    CHECK_FALSE(segments_intersect(Segment(P(0, 0), P(1, 0)), Segment(P(1, 0), P(2, 0)), SegMode::open));
    CHECK(segments_intersect(Segment(P(0, 0), P(1, 0)), Segment(P(1, 0), P(2, 0)), SegMode::closed));
    CHECK_FALSE(segments_intersect(Segment(P(0, 0), P(1, 0)), Segment(P(0, 1), P(1, 1)), SegMode::closed));
    // symmetry in the two arguments
    std::mt19937_64 rng(9);
    for (int it = 0; it < 300; ++it) {
        Point a = P((long)(rng() % 9), (long)(rng() % 9));
        Point b = P((long)(rng() % 9), (long)(rng() % 9));
        Point c = P((long)(rng() % 9), (long)(rng() % 9));
        Point d = P((long)(rng() % 9), (long)(rng() % 9));
        if (a == b || c == d) continue;
        Segment s1(a, b), s2(c, d);
        for (auto mode : {SegMode::open, SegMode::closed})
            CHECK(segments_intersect(s1, s2, mode) == segments_intersect(s2, s1, mode));
    }
}

TEST_CASE("proper crossing point") {
    auto p = proper_crossing(Segment(P(0, 0), P(2, 2)), Segment(P(0, 2), P(2, 0)));
    REQUIRE(p.has_value());
    CHECK(*p == P(1, 1));
    CHECK_FALSE(proper_crossing(Segment(P(0, 0), P(1, 0)), Segment(P(1, 0), P(2, 1))).has_value());
}

TEST_CASE("segment vs open polygon: through, above, grazing") {
    SimplePolygon sq = square(0, 0, 1);
    CHECK(segment_meets_open_polygon(Segment(P(-2, 0), P(2, 0)), sq));

    // square with top side on y = 1/2
    SimplePolygon low({P(-1, -1), P(1, -1), Pr(1, 1, 1, 2), Pr(-1, 1, 1, 2)});
    low.validate();
    CHECK_FALSE(segment_meets_open_polygon(Segment(P(-2, 1), P(2, 1)), low));

    // grazing exactly along one polygon side: open-interior semantics say no.
    Segment graze(P(-2, 1), P(2, 1));
    SimplePolygon sq2 = square(0, 0, 1);  // top side on y = 1
    CHECK_FALSE(segment_meets_open_polygon(graze, sq2));
    CHECK(oracle_segment_meets_interior(graze, sq2, 64) == false);

    // randomized cross-check against the sampling oracle (oracle misses are
    // one-sided: if the oracle sees interior, the exact test must as well)
    std::mt19937_64 rng(21);
    for (int it = 0; it < 200; ++it) {
        Point a = P((long)(rng() % 9) - 4, (long)(rng() % 9) - 4);
        Point b = P((long)(rng() % 9) - 4, (long)(rng() % 9) - 4);
        if (a == b) continue;
        Segment s(a, b);
        bool exact = segment_meets_open_polygon(s, sq);
        bool sampled = oracle_segment_meets_interior(s, sq, 128);
        if (sampled) CHECK(exact);
        if (!exact) CHECK_FALSE(sampled);
    }
}

TEST_CASE("convex hull examples and oracle") {
    // 4 corners of a square plus its center -> the 4 corners
    auto h = convex_hull({P(0, 0), P(2, 0), P(2, 2), P(0, 2), P(1, 1)});
    CHECK(h.size() == 4);
    CHECK(h.strictly_contains(P(1, 1)));

    auto t = convex_hull({P(0, 0), P(3, 0), P(0, 3)});
    CHECK(t.size() == 3);

    CHECK_THROWS(convex_hull({P(0, 0), P(1, 1), P(2, 2)}));

    // 10 random rational points vs extremality oracle
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Point> pts;
        while (pts.size() < 10) {
            Point p = Pr((long)(rng() % 200) - 100, 7, (long)(rng() % 200) - 100, 11);
            bool dup = false;
            for (auto& q : pts) dup |= (q == p);
            if (!dup) pts.push_back(p);
        }
        bool degenerate = false;
        try {
            auto hull = convex_hull(pts);
            for (size_t i = 0; i < pts.size(); ++i) {
                bool on_hull = false;
                for (auto& v : hull.v) on_hull |= (v == pts[i]);
                CHECK(on_hull == oracle_is_extreme(pts, i));
            }
            // invariance under permutation and under adding interior points
            auto shuffled = pts;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            CHECK(convex_hull(shuffled).v == hull.v);
            auto extra = pts;
            extra.push_back(hull.v.size() >= 3
                                ? Point((hull.v[0].x + hull.v[1].x + hull.v[2].x) / 3,
                                        (hull.v[0].y + hull.v[1].y + hull.v[2].y) / 3)
                                : pts[0]);
            CHECK(convex_hull(extra).v == hull.v);
        } catch (const std::invalid_argument&) {
            degenerate = true;
        }
        CHECK_FALSE(degenerate);
    }
}

TEST_CASE("general position") {
    CHECK(in_general_position({P(0, 0), P(1, 0), P(1, 1), P(0, 1)}));
    CHECK_FALSE(in_general_position({P(0, 0), P(1, 1), P(2, 2), P(5, 1)}));
    // rational approximation of a regular pentagon; oracle is the all-triples
    // orient scan, which here is the definition itself, so assert via a
    // hand-computed independent pass.
    std::vector<Point> pent = {P(0, 1000), P(951, 309), P(588, -809), P(-588, -809), P(-951, 309)};
    bool oracle = true;
    for (size_t i = 0; i < pent.size(); ++i)
        for (size_t j = i + 1; j < pent.size(); ++j)
            for (size_t k = j + 1; k < pent.size(); ++k)
                if (sign(cross(pent[j] - pent[i], pent[k] - pent[i])) == 0) oracle = false;
    CHECK(oracle);
    CHECK(in_general_position(pent));
}

TEST_CASE("simple polygon validation and membership") {
    SimplePolygon sq = square(0, 0, 2);
    CHECK(sq.side(P(0, 0)) == 1);
    CHECK(sq.side(P(2, 0)) == 0);
    CHECK(sq.side(P(3, 0)) == -1);

    SimplePolygon bow({P(0, 0), P(2, 2), P(2, 0), P(0, 2)});
    CHECK_FALSE(bow.is_simple());

    // canonicalization drops collinear vertices and fixes orientation
    SimplePolygon messy({P(0, 2), P(0, 0), P(1, 0), P(2, 0), P(2, 2)});
    messy.canonicalize();
    CHECK(messy.size() == 4);
    messy.validate();

    // validator guarantees no two non-adjacent edges intersect (closed mode)
    for (size_t i = 0; i < messy.size(); ++i)
        for (size_t j = i + 2; j < messy.size(); ++j) {
            if (i == 0 && j == messy.size() - 1) continue;
            CHECK_FALSE(segments_intersect(messy.edge(i), messy.edge(j), SegMode::closed));
        }
}

TEST_CASE("interior point of assorted polygons") {
    SimplePolygon sq = square(3, 3, 1);
    CHECK(sq.strictly_inside(sq.interior_point()));
    // a non-convex polygon
    SimplePolygon l({P(0, 0), P(4, 0), P(4, 1), P(1, 1), P(1, 4), P(0, 4)});
    l.validate();
    CHECK(l.strictly_inside(l.interior_point()));
    // thin sliver
    SimplePolygon sliver({P(0, 0), P(100, 1), P(100, 2), P(0, 1)});
    sliver.validate();
    CHECK(sliver.strictly_inside(sliver.interior_point()));
}
