#include <random>

#include "doctest.h"
#include "visobs/petals.hpp"
#include "visobs/synth.hpp"

using namespace visobs;

namespace {
Point P(long x, long y) { return Point(Rat(x), Rat(y)); }

// Independent oracle for the number of difference components: overlay the two
// hull boundaries as an arrangement and count faces inside CH(Z) but outside
// CH(Z'), using only point-in-convex-polygon tests.
int oracle_difference_regions(const std::vector<Point>& zpts, const std::vector<Point>& ppts) {
    ConvexPolygon hz = convex_hull(zpts), hp = convex_hull(ppts);
    std::vector<Segment> segs;
    for (size_t i = 0; i < hz.size(); ++i) segs.emplace_back(hz.v[i], hz.v[(i + 1) % hz.size()]);
    for (size_t i = 0; i < hp.size(); ++i) segs.emplace_back(hp.v[i], hp.v[(i + 1) % hp.size()]);
    Arrangement arr(segs);
    int count = 0;
    for (int f = 1; f < arr.face_count(); ++f) {
        Point s = arr.face_sample(f);
        if (hz.strictly_contains(s) && !hp.strictly_contains(s)) ++count;
    }
    return count;
}

Drawing two_clique_drawing(const std::vector<Point>& zpts, const std::vector<Point>& ppts) {
    Drawing d;
    int nz = (int)zpts.size(), np = (int)ppts.size();
    d.graph = Graph(nz + np);
    for (int i = 0; i < nz; ++i)
        for (int j = i + 1; j < nz; ++j) d.graph.add_edge(i, j);
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j) d.graph.add_edge(nz + i, nz + j);
    d.placement = zpts;
    d.placement.insert(d.placement.end(), ppts.begin(), ppts.end());
    return d;
}

std::vector<int> iota_vec(int from, int count) {
    std::vector<int> v(count);
    std::iota(v.begin(), v.end(), from);
    return v;
}
}  // namespace

TEST_CASE("petal relation: disjoint triangles") {
    std::vector<Point> z = {P(0, 0), P(4, 0), P(0, 4)};
    std::vector<Point> p = {P(10, 0), P(14, 0), P(10, 4)};
    Drawing d = two_clique_drawing(z, p);
    auto pd = petal_decomposition(d, iota_vec(0, 3), iota_vec(3, 3));
    CHECK(pd.relation == HullRelation::disjoint);
    CHECK(oracle_difference_regions(z, p) == 1);
}

TEST_CASE("petal relation: star-of-david is 2-crossing") {
    std::vector<Point> z = {P(0, 9), P(-8, -5), P(8, -5)};
    std::vector<Point> p = {P(0, -9), P(-8, 5), P(8, 5)};
    Drawing d = two_clique_drawing(z, p);
    auto pd = petal_decomposition(d, iota_vec(0, 3), iota_vec(3, 3));
    REQUIRE(pd.relation == HullRelation::crossing);
    CHECK(pd.t == 2);
    CHECK(pd.petalsZ.size() == 3);
    CHECK(pd.petalsZp.size() == 3);
    CHECK(oracle_difference_regions(z, p) == 3);
    for (int k = 0; k < 3; ++k) {
        CHECK(pd.memberZ[k] >= 0);
        CHECK(pd.memberZp[k] >= 0);
    }
    CHECK(std::set<int>(pd.memberZ.begin(), pd.memberZ.end()).size() == 3);
}

TEST_CASE("petal relation: crossing rectangles give 1-crossing") {
    std::vector<Point> z = {P(-10, -2), P(10, -3), P(10, 3), P(-10, 2)};  // wide
    std::vector<Point> p = {P(-2, -10), P(3, -10), P(2, 10), P(-3, 10)};  // tall
    Drawing d = two_clique_drawing(z, p);
    auto pd = petal_decomposition(d, iota_vec(0, 4), iota_vec(4, 4));
    REQUIRE(pd.relation == HullRelation::crossing);
    CHECK(pd.t == 1);
    CHECK(oracle_difference_regions(z, p) == 2);
}

TEST_CASE("petal relation symmetric; containment detected") {
    std::vector<Point> z = {P(-20, -20), P(20, -21), P(21, 20), P(-21, 21)};
    std::vector<Point> p = {P(-1, 0), P(1, -1), P(0, 1)};
    Drawing d = two_clique_drawing(z, p);
    CHECK(petal_decomposition(d, iota_vec(0, 4), iota_vec(4, 3)).relation ==
          HullRelation::zp_inside_z);
    CHECK(petal_decomposition(two_clique_drawing(p, z), iota_vec(0, 3), iota_vec(3, 4)).relation ==
          HullRelation::z_inside_zp);

    std::mt19937_64 rng(5);
    for (int it = 0; it < 25; ++it) {
        std::vector<Point> a, b;
        while (a.size() < 4) a.push_back(P((long)(rng() % 21) - 10, (long)(rng() % 21) - 10));
        while (b.size() < 4) b.push_back(P((long)(rng() % 21) - 10, (long)(rng() % 21) - 10));
        std::vector<Point> all = a;
        all.insert(all.end(), b.begin(), b.end());
        if (!in_general_position(all)) continue;
        auto p1 = petal_decomposition(two_clique_drawing(a, b), iota_vec(0, 4), iota_vec(4, 4));
        auto p2 = petal_decomposition(two_clique_drawing(b, a), iota_vec(0, 4), iota_vec(4, 4));
        if (p1.relation == HullRelation::crossing) {
            CHECK(p2.relation == HullRelation::crossing);
            CHECK(p1.t == p2.t);
            CHECK(p1.petalsZ.size() == p1.petalsZp.size());
            CHECK((int)p1.petalsZ.size() == p1.t + 1);
            CHECK(oracle_difference_regions(a, b) == p1.t + 1);
        }
    }
}

TEST_CASE("lemma 4a checker") {
    std::vector<Point> z = {P(0, 9), P(-8, -5), P(8, -5)};
    std::vector<Point> p = {P(0, -9), P(-8, 5), P(8, 5)};
    Drawing d = two_clique_drawing(z, p);  // no cross edges at all
    auto pd = petal_decomposition(d, iota_vec(0, 3), iota_vec(3, 3));
    REQUIRE(pd.relation == HullRelation::crossing);
    REQUIRE(pd.t == 2);
    auto cert = check_lemma4a(pd, d.graph, iota_vec(0, 3), iota_vec(3, 3));
    REQUIRE(cert.has_value());
    CHECK(cert->clause == Clause::Lemma4a);
    CHECK(replay_certificate(*cert, d, iota_vec(0, 3), iota_vec(3, 3)));

    std::vector<Point> z2 = {P(-10, -2), P(10, -3), P(10, 3), P(-10, 2)};
    std::vector<Point> p2 = {P(-2, -10), P(3, -10), P(2, 10), P(-3, 10)};
    Drawing d2 = two_clique_drawing(z2, p2);
    auto pd2 = petal_decomposition(d2, iota_vec(0, 4), iota_vec(4, 4));
    CHECK_FALSE(check_lemma4a(pd2, d2.graph, iota_vec(0, 4), iota_vec(4, 4)).has_value());
}

TEST_CASE("lemma 4b checker on the alternating hexagon") {
    Graph k = named::k6star();
    Drawing d;
    d.graph = k;
    d.placement.resize(6);
    d.placement[0] = P(4, 0);    // z1
    d.placement[3] = P(2, 4);    // z1'
    d.placement[1] = P(-2, 4);   // z2
    d.placement[4] = P(-4, 0);   // z2'
    d.placement[2] = P(-2, -4);  // z3
    d.placement[5] = P(2, -4);   // z3'
    auto embs = find_induced_k6star(k, {0, 1, 2}, {3, 4, 5});
    REQUIRE(embs.size() == 1);
    CHECK_FALSE(check_lemma4b(d, {0, 1, 2}, {3, 4, 5}, embs[0]).has_value());

    Drawing bad = d;
    bad.placement[0] = P(40, 1);
    bad.placement[1] = P(44, 0);
    bad.placement[2] = P(42, 5);
    auto cert = check_lemma4b(bad, {0, 1, 2}, {3, 4, 5}, embs[0]);
    REQUIRE(cert.has_value());
    CHECK(cert->clause == Clause::Lemma4bTriples);
    CHECK(replay_certificate(*cert, bad, {0, 1, 2}, {3, 4, 5}));
}

TEST_CASE("lemma 4c checker") {
    std::vector<Point> z = {P(-10, -2), P(10, -3), P(10, 3), P(-10, 2)};
    std::vector<Point> p = {P(-2, -10), P(3, -10), P(2, 10), P(-3, 10)};
    Drawing d = two_clique_drawing(z, p);
    auto Z = iota_vec(0, 4), Zp = iota_vec(4, 4);
    REQUIRE(petal_decomposition(d, Z, Zp).t == 1);

    Drawing d1 = d;  // partners split top/bottom: clause satisfied
    d1.graph.add_edge(0, 4);
    d1.graph.add_edge(3, 7);
    {
        auto cyc = find_induced_4cycles_across(d1.graph, Z, Zp);
        REQUIRE(cyc.size() == 1);
        Arrangement arr = build_arrangement(d1);
        CHECK_FALSE(
            check_lemma4c(d1, arr, petal_decomposition(d1, Z, Zp), Z, Zp, cyc[0]).has_value());
    }
    Drawing d2 = d;  // both partners on the bottom: petal condition violated
    d2.graph.add_edge(0, 4);
    d2.graph.add_edge(3, 5);
    {
        auto cyc = find_induced_4cycles_across(d2.graph, Z, Zp);
        REQUIRE(cyc.size() == 1);
        Arrangement arr = build_arrangement(d2);
        auto cert = check_lemma4c(d2, arr, petal_decomposition(d2, Z, Zp), Z, Zp, cyc[0]);
        bool completable = decide_fixed_drawing(d2, Want::outside).has_value();
        // the certificate appears exactly when the drawing is not completable
        CHECK(cert.has_value() == !completable);
        if (cert) {
            CHECK(cert->clause == Clause::Lemma4c);
            CHECK(replay_certificate(*cert, d2, Z, Zp));
        }
    }
}

TEST_CASE("inside observations: hull cycle violation") {
    Drawing d;
    d.graph = Graph(4);
    d.graph.add_edge(0, 1);
    d.graph.add_edge(1, 2);
    d.graph.add_edge(2, 3);  // 3-0 missing
    d.placement = {P(0, 0), P(10, 1), P(9, 9), P(1, 10)};
    auto certs = check_inside_observations(d);
    bool hullcycle = false;
    for (auto& c : certs) {
        if (c.clause == Clause::ObsHullCycle) hullcycle = true;
        CHECK(replay_certificate(c, d, {}, {}));
    }
    CHECK(hullcycle);
}

TEST_CASE("B_8 random drawings always refuted, decide always says no") {
    Graph b8 = named::b8();
    auto Z = named::b8_cliqueZ(), Zp = named::b8_cliqueZp();
    std::mt19937_64 rng(99);
    for (int it = 0; it < 50; ++it) {
        std::vector<Point> pts;
        while ((int)pts.size() < 8) {
            pts.push_back(P((long)(rng() % 128), (long)(rng() % 128)));
            if (!in_general_position(pts)) pts.pop_back();
        }
        Drawing d{b8, pts};
        CHECK_FALSE(decide_fixed_drawing(d, Want::any).has_value());
        auto co = refute_drawing(d, Z, Zp, Want::outside);
        REQUIRE(co.has_value());
        CHECK(replay_certificate(*co, d, Z, Zp));
        auto ci = refute_drawing(d, Z, Zp, Want::inside);
        REQUIRE(ci.has_value());
        CHECK(replay_certificate(*ci, d, Z, Zp));
        CHECK(refute_drawing(d, Z, Zp, Want::any).has_value());
    }
}

TEST_CASE("B_11 random drawings refuted for outside") {
    Graph b11 = named::b11();
    auto Z = named::b11_cliqueZ(), Zp = named::b11_cliqueZp();
    std::mt19937_64 rng(7);
    for (int it = 0; it < 30; ++it) {
        std::vector<Point> pts;
        while ((int)pts.size() < 11) {
            pts.push_back(P((long)(rng() % 128), (long)(rng() % 128)));
            if (!in_general_position(pts)) pts.pop_back();
        }
        Drawing d{b11, pts};
        CHECK_FALSE(decide_fixed_drawing(d, Want::outside).has_value());
        auto cert = refute_drawing(d, Z, Zp, Want::outside);
        REQUIRE(cert.has_value());
        CHECK((cert->clause == Clause::Lemma4a || cert->clause == Clause::Lemma4bTriples ||
               cert->clause == Clause::Lemma4bHulls || cert->clause == Clause::Lemma4c ||
               cert->clause == Clause::ObsCliqueDisjoint));
        CHECK(replay_certificate(*cert, d, Z, Zp));
    }
}

TEST_CASE("soundness: valid outside drawings pass all outside checks") {
    std::mt19937_64 rng(123);
    int verified = 0;
    for (int it = 0; it < 60 && verified < 12; ++it) {
        std::vector<Point> pts;
        while ((int)pts.size() < 6) {
            pts.push_back(P((long)(rng() % 64), (long)(rng() % 64)));
            if (!in_general_position(pts)) pts.pop_back();
        }
        Drawing d = two_clique_drawing({pts[0], pts[1], pts[2]}, {pts[3], pts[4], pts[5]});
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < 6; ++j)
                if (rng() % 2) d.graph.add_edge(i, j);
        if (!decide_fixed_drawing(d, Want::outside).has_value()) continue;
        ++verified;
        CHECK(refute_outside_all(d, {0, 1, 2}, {3, 4, 5}).empty());
    }
    CHECK(verified > 0);
}

TEST_CASE("clique hull clearance") {
    Drawing d;
    d.graph = named::complete(3);
    d.placement = {P(0, 0), P(12, 0), P(1, 12)};
    Representation rep{d, SimplePolygon({P(30, 30), P(34, 30), P(32, 34)}), ObstacleKind::outside};
    CHECK(clique_hull_clearance(rep, {0, 1, 2}));
    Representation bad{d, SimplePolygon({P(2, 1), P(5, 1), P(3, 4)}), ObstacleKind::inside};
    CHECK_FALSE(clique_hull_clearance(bad, {0, 1, 2}));
    Representation bad2{d, SimplePolygon({P(5, -1), P(7, -1), P(6, 1)}), ObstacleKind::outside};
    CHECK_FALSE(clique_hull_clearance(bad2, {0, 1}));
}
