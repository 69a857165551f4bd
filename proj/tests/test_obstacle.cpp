#include <random>

#include "doctest.h"
#include "visobs/synth.hpp"

using namespace visobs;

namespace {
Point P(long x, long y) { return Point(Rat(x), Rat(y)); }

SimplePolygon square_poly(long cx, long cy, long num, long den) {
    Rat h = rat(num, den);
    SimplePolygon p({Point(Rat(cx) - h, Rat(cy) - h), Point(Rat(cx) + h, Rat(cy) - h),
                     Point(Rat(cx) + h, Rat(cy) + h), Point(Rat(cx) - h, Rat(cy) + h)});
    p.validate();
    return p;
}
}  // namespace

TEST_CASE("visibility graph: obstacle far away gives complete graph") {
    std::vector<Point> pts = {P(0, 0), P(4, 0), P(1, 3)};
    Graph g = visibility_graph(pts, square_poly(100, 100, 1, 1));
    CHECK(g == named::complete(3));
}

TEST_CASE("visibility graph: square corners with small center obstacle give C4") {
    std::vector<Point> pts = {P(0, 0), P(10, 1), P(11, 11), P(1, 10)};
    SimplePolygon obs = square_poly(5, 5, 1, 1);
    // oracle: explicit segment/interior checks for both diagonals
    CHECK(segment_meets_open_polygon(Segment(pts[0], pts[2]), obs));
    CHECK(segment_meets_open_polygon(Segment(pts[1], pts[3]), obs));
    for (int i = 0; i < 4; ++i)
        CHECK_FALSE(segment_meets_open_polygon(Segment(pts[i], pts[(i + 1) % 4]), obs));
    Graph g = visibility_graph(pts, obs);
    Graph c4(4);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 0);
    CHECK(g == c4);
}

TEST_CASE("visibility monotone under obstacle shrinking") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 20; ++it) {
        std::vector<Point> pts;
        while (pts.size() < 5) {
            Point p = P((long)(rng() % 19), (long)(rng() % 19));
            pts.push_back(p);
            if (!in_general_position(pts)) pts.pop_back();
        }
        SimplePolygon big = square_poly(9, 9, 3, 1);
        SimplePolygon small = square_poly(9, 9, 3, 2);  // interior subset of big
        bool skip = false;
        for (const Point& p : pts)
            if (big.side(p) >= 0 || small.side(p) >= 0) skip = true;
        if (skip) continue;
        Graph gb = visibility_graph(pts, big);
        Graph gs = visibility_graph(pts, small);
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v)
                if (gb.has_edge(u, v)) CHECK(gs.has_edge(u, v));
    }
}

TEST_CASE("classify obstacle: inside vs outside") {
    Drawing d;
    d.graph = named::complete(3);
    d.placement = {P(0, 0), P(12, 0), P(1, 12)};
    SimplePolygon inner = square_poly(3, 3, 1, 1);
    CHECK(classify_obstacle(d, inner) == ObstacleKind::inside);
    SimplePolygon outer = square_poly(40, 40, 1, 1);
    CHECK(classify_obstacle(d, outer) == ObstacleKind::outside);
    SimplePolygon bad = square_poly(6, 0, 1, 1);  // crosses an edge
    CHECK_THROWS(classify_obstacle(d, bad));
}

TEST_CASE("build_arrangement face counts") {
    Drawing tri;
    tri.graph = named::complete(3);
    tri.placement = {P(0, 0), P(6, 0), P(0, 6)};
    CHECK(build_arrangement(tri).face_count() == 2);

    Drawing c4;  // convex C4
    c4.graph = named::cycle(4);
    c4.placement = {P(0, 0), P(8, 1), P(9, 9), P(1, 8)};
    CHECK(build_arrangement(c4).face_count() == 2);

    Drawing k4;
    k4.graph = named::complete(4);
    k4.placement = {P(0, 0), P(8, 1), P(9, 9), P(1, 8)};
    Arrangement a4 = build_arrangement(k4);
    CHECK(a4.face_count() == 5);
    CHECK(a4.euler_characteristic() == 2);
}

TEST_CASE("decide:crossing-order C4 drawing admits an outside obstacle") {
    // 4 points in convex position with the cycle drawn self-crossing, so both
    // cycle diagonals become hull edges reachable from outside
    Drawing d;
    d.graph = named::cycle(4);
    d.placement = {P(0, 0), P(10, 1), P(1, 10), P(11, 11)};
    auto res = decide_fixed_drawing(d, Want::outside);
    REQUIRE(res.has_value());
    CHECK(res->rep.kind == ObstacleKind::outside);
    CHECK(verify_representation(res->rep).ok);
}

TEST_CASE("decide: convex C5 completes inside via the star core, not outside") {
    Drawing d;
    d.graph = named::cycle(5);
    d.placement = {P(0, 1000), P(951, 309), P(588, -809), P(-588, -809), P(-951, 309)};
    auto inside = decide_fixed_drawing(d, Want::inside);
    REQUIRE(inside.has_value());
    CHECK(inside->rep.kind == ObstacleKind::inside);
    CHECK(verify_representation(inside->rep).ok);
    CHECK_FALSE(decide_fixed_drawing(d, Want::outside).has_value());
}

TEST_CASE("decide: complete graph is a trivial yes with a degenerate obstacle") {
    Drawing d;
    d.graph = named::complete(4);
    d.placement = {P(0, 0), P(8, 1), P(9, 9), P(1, 8)};
    auto res = decide_fixed_drawing(d, Want::any);
    REQUIRE(res.has_value());
    CHECK(res->face == 0);
    CHECK(verify_representation(res->rep).ok);
}

TEST_CASE("decide round-trip: every yes witness verifies") {
    std::mt19937_64 rng(17);
    int yes = 0;
    for (int it = 0; it < 50; ++it) {
        int n = 4 + (int)(rng() % 3);
        std::vector<Point> pts;
        while ((int)pts.size() < n) {
            pts.push_back(P((long)(rng() % 64), (long)(rng() % 64)));
            if (!in_general_position(pts)) pts.pop_back();
        }
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        Drawing d{g, pts};
        auto res = decide_fixed_drawing(d, Want::any);
        if (res) {
            ++yes;
            CHECK(verify_representation(res->rep).ok);
        }
    }
    CHECK(yes > 0);
}

TEST_CASE("faces met by a non-edge are stable under rational rotation") {
    auto rot = [](const Point& p) {  // Pythagorean rotation (3/5, 4/5)
        return Point(rat(3, 5) * p.x - rat(4, 5) * p.y, rat(4, 5) * p.x + rat(3, 5) * p.y);
    };
    std::mt19937_64 rng(23);
    for (int it = 0; it < 10; ++it) {
        int n = 5;
        std::vector<Point> pts;
        while ((int)pts.size() < n) {
            pts.push_back(P((long)(rng() % 40), (long)(rng() % 40)));
            if (!in_general_position(pts)) pts.pop_back();
        }
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        Drawing d{g, pts};
        Drawing dr{g, {}};
        for (const Point& p : pts) dr.placement.push_back(rot(p));
        Arrangement a1 = build_arrangement(d);
        Arrangement a2 = build_arrangement(dr);
        for (auto [u, v] : g.non_edges()) {
            auto f1 = a1.segment_faces(d.segment(u, v));
            auto f2 = a2.segment_faces(dr.segment(u, v));
            CHECK(f1.size() == f2.size());
            CHECK(f1.count(0) == f2.count(0));
        }
        CHECK(a1.face_count() == a2.face_count());
    }
}

TEST_CASE("synthesize: single target crossing a triangular face") {
    Drawing d;
    d.graph = named::complete(3);
    d.placement = {P(0, 0), P(12, 0), P(1, 12)};
    Arrangement arr = build_arrangement(d);
    Segment t(P(2, 1), P(4, 5));
    SimplePolygon obs = synthesize_obstacle_in_face(d, arr, 1, {t});
    obs.validate();
    CHECK(segment_meets_open_polygon(t, obs));
    for (auto [u, v] : d.graph.edges())
        CHECK_FALSE(segment_meets_open_polygon(d.segment(u, v), obs));
    CHECK(classify_obstacle(d, obs) == ObstacleKind::inside);
}

TEST_CASE("synthesize: two targets on opposite sides through the unbounded face") {
    Drawing d;
    d.graph = named::complete(3);
    d.placement = {P(0, 0), P(12, 0), P(1, 12)};
    Arrangement arr = build_arrangement(d);
    std::vector<Point> extra = {P(-3, -3), P(14, 14), P(16, -2), P(-4, 12)};
    std::vector<Segment> targets = {Segment(extra[0], extra[1]), Segment(extra[2], extra[3])};
    SimplePolygon obs = synthesize_obstacle_in_face(d, arr, 0, targets);
    obs.validate();
    for (const Segment& t : targets) CHECK(segment_meets_open_polygon(t, obs));
    for (auto [u, v] : d.graph.edges())
        CHECK_FALSE(segment_meets_open_polygon(d.segment(u, v), obs));
    CHECK(classify_obstacle(d, obs) == ObstacleKind::outside);
}

TEST_CASE("verify diagnostics name the offending pairs") {
    Drawing d;
    d.graph = named::cycle(4);
    d.placement = {P(0, 0), P(10, 1), P(1, 10), P(11, 11)};
    auto res = decide_fixed_drawing(d, Want::outside);
    REQUIRE(res.has_value());
    // claim one extra edge that the obstacle actually blocks
    Representation broken = res->rep;
    broken.drawing.graph.add_edge(0, 2);
    VerifyReport vr = verify_representation(broken);
    CHECK_FALSE(vr.ok);
    CHECK(vr.blocked_required == std::vector<std::pair<int, int>>{{0, 2}});
    // claim one required edge as a non-edge: it stays visible
    Representation broken2 = res->rep;
    broken2.drawing.graph.remove_edge(0, 1);
    VerifyReport vr2 = verify_representation(broken2);
    CHECK_FALSE(vr2.ok);
    CHECK(vr2.visible_forbidden == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("exposed representation bookkeeping") {
    Drawing d;
    d.graph = named::cycle(4);
    d.placement = {P(0, 0), P(10, 1), P(1, 10), P(11, 11)};
    auto res = decide_fixed_drawing(d, Want::outside);
    REQUIRE(res.has_value());
    ExposedRepresentation er = make_exposed(res->rep);
    CHECK(er.all_exposed());
    CHECK(er.hull.size() == 4);
}
