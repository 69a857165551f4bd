#ifndef VISOBS_PETALS_HPP
#define VISOBS_PETALS_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "visobs/drawing.hpp"

namespace visobs {

// ---------------------------------------------------------------------------
// petal decomposition of two clique hulls

enum class HullRelation { degenerate, disjoint, z_inside_zp, zp_inside_z, crossing };

struct Petal {
    SimplePolygon region;       // closed petal region
    std::vector<int> members;   // clique vertices contained in this petal
};

/// Decomposition of CH(Z) and CH(Z') into their crossing structure. For
/// t-crossing hulls each difference consists of t+1 petals, cyclically
/// alternating around the intersection: petalsZ[i] lies between petalsZp[i]
/// and petalsZp[i+1].
struct PetalDecomposition {
    HullRelation relation = HullRelation::degenerate;
    int t = -1;  // crossing number, valid when relation == crossing
    ConvexPolygon hullZ, hullZp;
    std::vector<Petal> petalsZ, petalsZp;
    std::vector<int> memberZ, memberZp;  // vertex -> petal index, -1 = in intersection

    int petal_of(bool zp_side, int vertex_position) const {
        return zp_side ? memberZp[vertex_position] : memberZ[vertex_position];
    }
    /// Q^Z_i is adjacent to Q^{Z'}_i and Q^{Z'}_{i+1} (indices mod t+1).
    bool adjacent_z_to_zp(int zi, int zpj) const {
        int c = t + 1;
        return zpj == zi || zpj == (zi + 1) % c;
    }
};

namespace petal_detail {

struct BoundaryPoint {
    Point p;
    bool is_crossing;
};

/// Hull boundary augmented with the crossing points, cyclic order.
inline std::vector<BoundaryPoint> augmented_boundary(const ConvexPolygon& hull,
                                                     const ConvexPolygon& other) {
    std::vector<BoundaryPoint> out;
    size_t n = hull.size();
    for (size_t i = 0; i < n; ++i) {
        Segment e(hull.v[i], hull.v[(i + 1) % n]);
        out.push_back({hull.v[i], false});
        std::vector<std::pair<Rat, Point>> cr;
        for (size_t j = 0; j < other.size(); ++j) {
            Segment f(other.v[j], other.v[(j + 1) % other.size()]);
            if (auto p = proper_crossing(e, f)) cr.emplace_back(param_on_segment(e.a, e.b, *p), *p);
        }
        std::sort(cr.begin(), cr.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [t, p] : cr) out.push_back({p, true});
    }
    return out;
}

struct HullArc {
    Point from, to;               // crossing endpoints
    std::vector<Point> interior;  // hull vertices strictly between them
    bool outside;                 // does the arc run outside the other hull?
};

inline std::vector<HullArc> boundary_arcs(const ConvexPolygon& hull, const ConvexPolygon& other) {
    auto bd = augmented_boundary(hull, other);
    size_t n = bd.size();
    std::vector<size_t> crossings;
    for (size_t i = 0; i < n; ++i)
        if (bd[i].is_crossing) crossings.push_back(i);
    std::vector<HullArc> arcs;
    for (size_t k = 0; k < crossings.size(); ++k) {
        size_t a = crossings[k], b = crossings[(k + 1) % crossings.size()];
        HullArc arc;
        arc.from = bd[a].p;
        arc.to = bd[b].p;
        for (size_t i = (a + 1) % n; i != b; i = (i + 1) % n) arc.interior.push_back(bd[i].p);
        Point sample = midpoint(bd[a].p, bd[(a + 1) % n].p);
        arc.outside = !other.strictly_contains(sample);
        arcs.push_back(std::move(arc));
    }
    return arcs;
}

inline SimplePolygon petal_polygon(const HullArc& outer, const std::vector<HullArc>& closing_arcs) {
    // the closing chain is the other hull's arc with the same endpoints that
    // runs on the inside
    const HullArc* close = nullptr;
    for (const HullArc& c : closing_arcs) {
        bool same = (c.from == outer.from && c.to == outer.to) ||
                    (c.from == outer.to && c.to == outer.from);
        if (same && !c.outside) close = &c;
    }
    if (!close) throw std::logic_error("petal closing arc not found");
    std::vector<Point> pts;
    pts.push_back(outer.from);
    for (const Point& p : outer.interior) pts.push_back(p);
    pts.push_back(outer.to);
    std::vector<Point> inner = close->interior;
    if (close->from == outer.to) {
        // already oriented to -> from
    } else {
        std::reverse(inner.begin(), inner.end());
    }
    for (const Point& p : inner) pts.push_back(p);
    SimplePolygon poly(pts);
    poly.canonicalize();
    return poly;
}

}  // namespace petal_detail

/// Petal decomposition of two cliques' hulls in a drawing. Cliques must be
/// vertex-disjoint; hulls with fewer than 3 points are reported degenerate.
inline PetalDecomposition petal_decomposition(const Drawing& d, const std::vector<int>& Z,
                                              const std::vector<int>& Zp) {
    if (!d.graph.is_clique(Z) || !d.graph.is_clique(Zp))
        throw std::invalid_argument("petal_decomposition: inputs must be cliques");
    for (int z : Z)
        for (int zp : Zp)
            if (z == zp) throw std::invalid_argument("petal_decomposition: cliques must be disjoint");

    PetalDecomposition pd;
    if (Z.size() < 3 || Zp.size() < 3) return pd;  // degenerate

    std::vector<Point> zpts, ppts;
    for (int v : Z) zpts.push_back(d.placement[v]);
    for (int v : Zp) ppts.push_back(d.placement[v]);
    pd.hullZ = convex_hull(zpts);
    pd.hullZp = convex_hull(ppts);

    using namespace petal_detail;
    auto arcsZ = boundary_arcs(pd.hullZ, pd.hullZp);
    auto arcsZp = boundary_arcs(pd.hullZp, pd.hullZ);

    if (arcsZ.empty()) {
        if (pd.hullZp.strictly_contains(pd.hullZ.v[0])) pd.relation = HullRelation::z_inside_zp;
        else if (pd.hullZ.strictly_contains(pd.hullZp.v[0])) pd.relation = HullRelation::zp_inside_z;
        else pd.relation = HullRelation::disjoint;
        return pd;
    }
    pd.relation = HullRelation::crossing;
    int c = (int)arcsZ.size() / 2;
    pd.t = c - 1;

    // rotate so that arcsZ[0] is an outside arc; petals then sit at even
    // positions and the closing arcs of the other side's petals at odd ones
    if (!arcsZ[0].outside) std::rotate(arcsZ.begin(), arcsZ.begin() + 1, arcsZ.end());

    for (int i = 0; i < c; ++i) {
        Petal p;
        p.region = petal_detail::petal_polygon(arcsZ[2 * i], arcsZp);
        pd.petalsZ.push_back(std::move(p));
    }
    // Q^{Z'}_i closes against the inside arc of CH(Z) immediately before
    // Q^Z_i; that inside arc is arcsZ[2i - 1].
    for (int i = 0; i < c; ++i) {
        const auto& inner = arcsZ[(2 * i - 1 + 2 * c) % (2 * c)];
        const petal_detail::HullArc* outer = nullptr;
        for (const auto& a : arcsZp) {
            bool same = (a.from == inner.from && a.to == inner.to) ||
                        (a.from == inner.to && a.to == inner.from);
            if (same && a.outside) outer = &a;
        }
        if (!outer) throw std::logic_error("petal pairing failed");
        Petal p;
        p.region = petal_detail::petal_polygon(*outer, arcsZ);
        pd.petalsZp.push_back(std::move(p));
    }

    auto assign = [&](const std::vector<int>& clique, const ConvexPolygon& other,
                      std::vector<Petal>& petals, std::vector<int>& member) {
        member.assign(clique.size(), -1);
        for (size_t k = 0; k < clique.size(); ++k) {
            const Point& q = d.placement[clique[k]];
            if (other.strictly_contains(q)) {
                member[k] = -1;  // in the intersection
                continue;
            }
            int found = -1;
            for (size_t pi = 0; pi < petals.size(); ++pi)
                if (petals[pi].region.side(q) >= 0) {
                    if (found >= 0) throw std::logic_error("vertex in two petals");
                    found = (int)pi;
                }
            if (found < 0) throw std::logic_error("clique vertex in no petal");
            member[k] = found;
            petals[found].members.push_back(clique[k]);
        }
    };
    assign(Z, pd.hullZp, pd.petalsZ, pd.memberZ);
    assign(Zp, pd.hullZ, pd.petalsZp, pd.memberZp);
    return pd;
}

// ---------------------------------------------------------------------------
// certificates

enum class Clause {
    Lemma4a,
    Lemma4bTriples,
    Lemma4bHulls,
    Lemma4c,
    ObsCliqueDisjoint,
    ObsHullCycle,
    Obs4PathConvex,
    ObsTwo4Paths,
    ObsConsecutive,
};

inline const char* to_string(Clause c) {
    switch (c) {
        case Clause::Lemma4a: return "Lemma4a";
        case Clause::Lemma4bTriples: return "Lemma4b-triples";
        case Clause::Lemma4bHulls: return "Lemma4b-hulls";
        case Clause::Lemma4c: return "Lemma4c";
        case Clause::ObsCliqueDisjoint: return "ObsCliqueDisjoint";
        case Clause::ObsHullCycle: return "ObsHullCycle";
        case Clause::Obs4PathConvex: return "Obs4PathConvex";
        case Clause::ObsTwo4Paths: return "ObsTwo4Paths";
        case Clause::ObsConsecutive: return "ObsConsecutive";
    }
    return "?";
}

inline std::optional<Clause> clause_from_string(const std::string& s) {
    for (Clause c : {Clause::Lemma4a, Clause::Lemma4bTriples, Clause::Lemma4bHulls, Clause::Lemma4c,
                     Clause::ObsCliqueDisjoint, Clause::ObsHullCycle, Clause::Obs4PathConvex,
                     Clause::ObsTwo4Paths, Clause::ObsConsecutive})
        if (s == to_string(c)) return c;
    return std::nullopt;
}

/// A named violated necessary condition with enough witnesses to replay the
/// violation bit for bit.
struct Certificate {
    Clause clause;
    int variant = 0;  // disambiguates sub-checks within one clause family
    std::vector<int> witnesses;
    std::string narrative;
};

// ---------------------------------------------------------------------------
// outside-obstacle checks (two-clique machinery)

inline bool hull_boundaries_touch(const ConvexPolygon& hull, const SimplePolygon& poly) {
    for (size_t i = 0; i < hull.size(); ++i)
        for (size_t j = 0; j < poly.size(); ++j)
            if (segments_intersect(Segment(hull.v[i], hull.v[(i + 1) % hull.size()]), poly.edge(j),
                                   SegMode::closed))
                return true;
    return false;
}

/// Does the obstacle's open interior stay clear of the clique's hull?
/// A false answer is a hard violation in any outside representation.
inline bool clique_hull_clearance(const Representation& rep, const std::vector<int>& clique) {
    if (!rep.drawing.graph.is_clique(clique))
        throw std::invalid_argument("clique_hull_clearance: not a clique");
    std::vector<Point> pts;
    for (int v : clique) pts.push_back(rep.drawing.placement[v]);
    if (pts.size() == 1) return rep.obstacle.side(pts[0]) < 0;
    if (pts.size() == 2) return !segment_meets_open_polygon(Segment(pts[0], pts[1]), rep.obstacle);
    ConvexPolygon hull = convex_hull(pts);
    // boundary of the hull meets the obstacle interior?
    for (size_t i = 0; i < hull.size(); ++i)
        if (segment_meets_open_polygon(Segment(hull.v[i], hull.v[(i + 1) % hull.size()]),
                                       rep.obstacle))
            return false;
    // hull swallowed by the obstacle or obstacle inside the hull?
    if (rep.obstacle.side(hull.v[0]) > 0) return false;
    if (hull.strictly_contains(rep.obstacle.interior_point()) &&
        !hull_boundaries_touch(hull, rep.obstacle))
        return false;
    return true;
}

/// Is the segment between two drawn vertices contained in CH(Z) union CH(Z')?
/// Such a segment can never be blocked by an outside obstacle (the obstacle is
/// disjoint from both hulls), so a contained non-edge refutes the drawing.
inline bool segment_inside_hull_union(const Drawing& d, int u, int v, const ConvexPolygon& hz,
                                      const ConvexPolygon& hp) {
    Segment s = d.segment(u, v);
    std::vector<Rat> ts{Rat(0), Rat(1)};
    for (const ConvexPolygon* h : {&hz, &hp})
        for (size_t i = 0; i < h->size(); ++i) {
            Segment e(h->v[i], h->v[(i + 1) % h->size()]);
            if (auto p = proper_crossing(s, e)) ts.push_back(param_on_segment(s.a, s.b, *p));
            if (on_segment_closed(s.a, s.b, e.a)) ts.push_back(param_on_segment(s.a, s.b, e.a));
            if (on_segment_closed(s.a, s.b, e.b)) ts.push_back(param_on_segment(s.a, s.b, e.b));
        }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        Point mid = lerp(s.a, s.b, (ts[i] + ts[i + 1]) / 2);
        if (hz.side(mid) < 0 && hp.side(mid) < 0) return false;
    }
    return true;
}

/// Every vertex of Z needs at least t-1 neighbors in Z' when the hulls are
/// t-crossing (and vice versa).
inline std::optional<Certificate> check_lemma4a(const PetalDecomposition& pd, const Graph& g,
                                                const std::vector<int>& Z,
                                                const std::vector<int>& Zp) {
    if (pd.relation != HullRelation::crossing) return std::nullopt;
    int need = pd.t - 1;
    if (need <= 0) return std::nullopt;  // vacuous
    auto scan = [&](const std::vector<int>& A, const std::vector<int>& B,
                    int side) -> std::optional<Certificate> {
        for (int v : A) {
            int cnt = 0;
            for (int u : B)
                if (g.has_edge(u, v)) ++cnt;
            if (cnt < need) {
                Certificate c;
                c.clause = Clause::Lemma4a;
                c.witnesses = {v, cnt, pd.t, side};
                std::ostringstream os;
                os << "hulls are " << pd.t << "-crossing but vertex " << v << " has only " << cnt
                   << " neighbors across (needs at least " << need << ")";
                c.narrative = os.str();
                return c;
            }
        }
        return std::nullopt;
    };
    if (auto c = scan(Z, Zp, 0)) return c;
    return scan(Zp, Z, 1);
}

/// Relation of two point triples' hulls: at least 1-crossing?
inline bool triangles_at_least_1_crossing(const Drawing& d, const std::vector<int>& a,
                                          const std::vector<int>& b) {
    std::vector<Point> pa, pb;
    for (int v : a) pa.push_back(d.placement[v]);
    for (int v : b) pb.push_back(d.placement[v]);
    ConvexPolygon ha = convex_hull(pa), hb = convex_hull(pb);
    int crossings = 0;
    for (size_t i = 0; i < ha.size(); ++i)
        for (size_t j = 0; j < hb.size(); ++j)
            if (proper_crossing(Segment(ha.v[i], ha.v[(i + 1) % ha.size()]),
                                Segment(hb.v[j], hb.v[(j + 1) % hb.size()])))
                ++crossings;
    return crossings >= 4;  // 2(t+1) boundary crossings, t >= 1
}

/// Lemma 4(b): a K*_6 split across the cliques forces both the matched
/// triples' hulls and the big hulls to be at least 1-crossing.
inline std::optional<Certificate> check_lemma4b(const Drawing& d, const std::vector<int>& Z,
                                                const std::vector<int>& Zp,
                                                const K6StarEmbedding& emb) {
    std::vector<int> x = {emb.z[0], emb.z[1], emb.z[2]};
    std::vector<int> y = {emb.zp[0], emb.zp[1], emb.zp[2]};
    if (!triangles_at_least_1_crossing(d, x, y)) {
        Certificate c;
        c.clause = Clause::Lemma4bTriples;
        c.witnesses = {x[0], x[1], x[2], y[0], y[1], y[2]};
        c.narrative = "matched triples of an induced 6-clique-minus-matching have hulls that are "
                      "not 1-crossing";
        return c;
    }
    if (Z.size() >= 3 && Zp.size() >= 3 && !triangles_at_least_1_crossing(d, Z, Zp)) {
        Certificate c;
        c.clause = Clause::Lemma4bHulls;
        c.witnesses = {x[0], x[1], x[2], y[0], y[1], y[2]};
        c.narrative = "clique hulls are not 1-crossing despite an induced 6-clique-minus-matching";
        return c;
    }
    return std::nullopt;
}

/// A non-edge is accessible from the outside iff its open segment meets the
/// unbounded face of the arrangement of the drawn edges. A blocked non-edge
/// refutes any outside completion of the drawing.
inline bool non_edge_outside_accessible(const Arrangement& arr, const Drawing& d, int u, int v) {
    return arr.segment_faces(d.segment(u, v)).count(0) > 0;
}

/// Lemma 4(c): induced 4-cycle z1 z1' z2' z2 with z1,z2 in one petal of Z
/// forces z1',z2' into different petals of Z', both adjacent to that petal.
/// The certificate is only issued when the petal condition fails AND one of
/// the cycle's non-edges is indeed inaccessible from the outside: at
/// 0-crossing the bare petal condition is not refuting (the matched edges can
/// leave the hull union, and drawings violating it can still be completed).
inline std::optional<Certificate> check_lemma4c(const Drawing& d, const Arrangement& arr,
                                                const PetalDecomposition& pd,
                                                const std::vector<int>& Z,
                                                const std::vector<int>& Zp, const Cross4Cycle& cyc) {
    if (pd.relation != HullRelation::crossing) return std::nullopt;
    auto pos = [](const std::vector<int>& vs, int v) {
        for (size_t i = 0; i < vs.size(); ++i)
            if (vs[i] == v) return (int)i;
        throw std::invalid_argument("vertex not in clique");
    };
    if (!d.graph.has_edge(cyc.z1, cyc.z1p) || !d.graph.has_edge(cyc.z2, cyc.z2p) ||
        d.graph.has_edge(cyc.z1, cyc.z2p) || d.graph.has_edge(cyc.z2, cyc.z1p))
        throw std::invalid_argument("check_lemma4c: cycle not induced");
    int p1 = pd.memberZ[pos(Z, cyc.z1)], p2 = pd.memberZ[pos(Z, cyc.z2)];
    if (p1 < 0 || p2 < 0 || p1 != p2)
        throw std::invalid_argument("check_lemma4c: z1,z2 not in one petal");
    int q1 = pd.memberZp[pos(Zp, cyc.z1p)], q2 = pd.memberZp[pos(Zp, cyc.z2p)];
    bool ok = q1 >= 0 && q2 >= 0 && q1 != q2 && pd.adjacent_z_to_zp(p1, q1) &&
              pd.adjacent_z_to_zp(p1, q2);
    if (ok) return std::nullopt;
    if (non_edge_outside_accessible(arr, d, cyc.z1, cyc.z2p) &&
        non_edge_outside_accessible(arr, d, cyc.z2, cyc.z1p))
        return std::nullopt;
    Certificate c;
    c.clause = Clause::Lemma4c;
    c.witnesses = {cyc.z1, cyc.z2, cyc.z1p, cyc.z2p, p1, q1, q2};
    std::ostringstream os;
    os << "induced 4-cycle " << cyc.z1 << "-" << cyc.z1p << "-" << cyc.z2p << "-" << cyc.z2
       << " with both ends of one side in petal " << p1
       << ": a non-edge of the cycle is not accessible from the outside";
    c.narrative = os.str();
    return c;
}

// ---------------------------------------------------------------------------
// inside-obstacle observations

namespace inside_detail {

/// Hull vertex indices in counterclockwise hull order.
inline std::vector<int> hull_order(const Drawing& d) {
    ConvexPolygon h = convex_hull(d.placement);
    std::vector<int> order;
    for (const Point& p : h.v)
        for (int v = 0; v < d.graph.n; ++v)
            if (d.placement[v] == p) order.push_back(v);
    return order;
}

struct InducedPath3 {  // induced path u - x - y - v
    int u, x, y, v;
};

inline std::vector<InducedPath3> induced_3paths_hull_interior(const Drawing& d,
                                                              const std::vector<int>& hull) {
    std::vector<bool> on_hull(d.graph.n, false);
    for (int v : hull) on_hull[v] = true;
    std::vector<InducedPath3> out;
    const Graph& g = d.graph;
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) {
            if (x == y || !g.has_edge(x, y) || on_hull[x] || on_hull[y]) continue;
            for (int u : hull)
                for (int v : hull) {
                    if (u == v) continue;
                    if (!g.has_edge(u, x) || !g.has_edge(y, v)) continue;
                    if (g.has_edge(u, y) || g.has_edge(x, v) || g.has_edge(u, v)) continue;
                    if (x < y || u < v) out.push_back({u, x, y, v});
                }
        }
    // dedupe symmetric listings (u,x,y,v) vs (v,y,x,u)
    std::vector<InducedPath3> uniq;
    for (auto& p : out) {
        bool dup = false;
        for (auto& q : uniq)
            if (q.u == p.v && q.x == p.y && q.y == p.x && q.v == p.u) dup = true;
        if (!dup) uniq.push_back(p);
    }
    return uniq;
}

inline bool quadrilateral_convex(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orient(a, b, c), o2 = orient(b, c, d), o3 = orient(c, d, a), o4 = orient(d, a, b);
    return (o1 > 0 && o2 > 0 && o3 > 0 && o4 > 0) || (o1 < 0 && o2 < 0 && o3 < 0 && o4 < 0);
}

}  // namespace inside_detail

/// Evaluates the inside-obstacle observations against a drawing and returns
/// every violation found. An empty result does not certify representability.
inline std::vector<Certificate> check_inside_observations(const Drawing& d) {
    std::vector<Certificate> out;
    const Graph& g = d.graph;
    std::vector<int> hull = inside_detail::hull_order(d);
    std::vector<bool> on_hull(g.n, false);
    for (int v : hull) on_hull[v] = true;

    // hull vertices must form a cycle in the graph
    for (size_t i = 0; i < hull.size(); ++i) {
        int u = hull[i], v = hull[(i + 1) % hull.size()];
        if (!g.has_edge(u, v)) {
            Certificate c;
            c.clause = Clause::ObsHullCycle;
            c.witnesses = {u, v};
            std::ostringstream os;
            os << "consecutive hull vertices " << u << " and " << v
               << " are non-adjacent: the hull is not a cycle of the graph";
            c.narrative = os.str();
            out.push_back(c);
        }
    }

    // induced 3-edge paths u-x-y-v with u,v on the hull and x,y interior must
    // be drawn as non-crossing convex quadrilaterals
    auto paths = inside_detail::induced_3paths_hull_interior(d, hull);
    for (const auto& p : paths) {
        bool crossing = segments_intersect(d.segment(p.u, p.x), d.segment(p.y, p.v), SegMode::open);
        bool convex = inside_detail::quadrilateral_convex(d.placement[p.u], d.placement[p.x],
                                                          d.placement[p.y], d.placement[p.v]);
        if (crossing || !convex) {
            Certificate c;
            c.clause = Clause::Obs4PathConvex;
            c.variant = crossing ? 0 : 1;
            c.witnesses = {p.u, p.x, p.y, p.v};
            std::ostringstream os;
            os << "induced path " << p.u << "-" << p.x << "-" << p.y << "-" << p.v
               << (crossing ? ": opposite segments cross" : ": quadrilateral is not convex");
            c.narrative = os.str();
            out.push_back(c);
        }
    }

    // two induced paths sharing their middle edge
    auto hull_pos = [&](int v) {
        for (size_t i = 0; i < hull.size(); ++i)
            if (hull[i] == v) return (int)i;
        return -1;
    };
    auto consecutive = [&](int a, int b) {
        int pa = hull_pos(a), pb = hull_pos(b);
        if (pa < 0 || pb < 0) return false;
        int n = (int)hull.size();
        return (pa + 1) % n == pb || (pb + 1) % n == pa;
    };
    for (size_t i = 0; i < paths.size(); ++i)
        for (size_t j = i + 1; j < paths.size(); ++j) {
            const auto &p = paths[i], &q = paths[j];
            if (!((p.x == q.x && p.y == q.y) || (p.x == q.y && p.y == q.x))) continue;
            std::set<int> outer = {p.u, p.v, q.u, q.v};
            if (outer.size() != 4) continue;
            if (!segments_intersect(d.segment(p.u, p.v), d.segment(q.u, q.v), SegMode::closed))
                continue;
            bool bad1 = consecutive(p.u, q.v) && consecutive(p.v, q.u);
            if (bad1) {
                Certificate c;
                c.clause = Clause::ObsTwo4Paths;
                c.variant = 0;
                c.witnesses = {p.u, p.x, p.y, p.v, q.u, q.v};
                c.narrative = "two induced paths share a middle edge, their end chords cross, and "
                              "both end pairs are consecutive on the hull";
                out.push_back(c);
            }
            // if the four ends are consecutive, the middle vertices may not
            // lie inside their quadrilateral
            std::vector<int> pos;
            for (int v : outer) pos.push_back(hull_pos(v));
            if (std::count(pos.begin(), pos.end(), -1) == 0) {
                std::sort(pos.begin(), pos.end());
                int n = (int)hull.size();
                // cyclic contiguity of the four sorted hull positions
                bool contiguous = (pos[3] - pos[0] == 3) ||
                             (pos[0] == 0 && pos[1] == 1 && pos[2] == 2 && pos[3] == n - 1) ||
                             (pos[0] == 0 && pos[1] == 1 && pos[2] == n - 2 && pos[3] == n - 1) ||
                             (pos[0] == 0 && pos[1] == n - 3 && pos[2] == n - 2 && pos[3] == n - 1);
                if (contiguous) {
                    std::vector<Point> quad;
                    for (int s = 0; s < 4; ++s) quad.push_back(d.placement[hull[pos[s] % n]]);
                    // quad in hull order is convex (subsequence of the hull)
                    ConvexPolygon qp{quad};
                    for (int mid : {p.x, p.y})
                        if (qp.strictly_contains(d.placement[mid])) {
                            Certificate c;
                            c.clause = Clause::ObsTwo4Paths;
                            c.variant = 1;
                            c.witnesses = {p.u, p.x, p.y, p.v, q.u, q.v, mid};
                            c.narrative =
                                "four consecutive hull ends of two paths sharing a middle edge "
                                "contain a middle vertex in their quadrilateral";
                            out.push_back(c);
                        }
                }
            }
        }

    // consecutiveness of hull non-neighbors: two hull vertices both
    // non-adjacent to a vertex w must be consecutive whenever both hull
    // chains between them carry a neighbor of w (their two non-edges at w
    // would otherwise end up in disjoint bounded regions)
    for (int w = 0; w < g.n; ++w) {
        std::vector<int> b;
        for (int v : hull)
            if (v != w && !g.has_edge(v, w)) b.push_back(v);
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j) {
                int a = b[i], bb = b[j];
                if (consecutive(a, bb)) continue;
                int pa = hull_pos(a), pb = hull_pos(bb), n = (int)hull.size();
                bool ok1 = false, ok2 = false;  // a neighbor of w on each chain
                for (int k = (pa + 1) % n; k != pb; k = (k + 1) % n)
                    if (hull[k] == w || g.has_edge(hull[k], w)) ok1 = true;
                for (int k = (pb + 1) % n; k != pa; k = (k + 1) % n)
                    if (hull[k] == w || g.has_edge(hull[k], w)) ok2 = true;
                if (ok1 && ok2) {
                    Certificate c;
                    c.clause = Clause::ObsConsecutive;
                    c.witnesses = {w, a, bb};
                    std::ostringstream os;
                    os << "hull vertices " << a << " and " << bb << " are non-neighbors of " << w
                       << " but not consecutive: the non-edges " << w << "-" << a << " and " << w
                       << "-" << bb << " fall in disjoint bounded regions";
                    c.narrative = os.str();
                    out.push_back(c);
                }
            }
    }

    // exact face separation: some set of required non-edges shares no bounded
    // face, so a single inside obstacle cannot block them all
    Arrangement arr = build_arrangement(d);
    auto ne = d.graph.non_edges();
    if (!ne.empty()) {
        std::vector<std::set<int>> fs;
        for (auto [u, v] : ne) {
            auto f = arr.segment_faces(d.segment(u, v));
            f.erase(0);
            fs.push_back(f);
        }
        std::set<int> common;
        for (int f = 1; f < arr.face_count(); ++f) common.insert(f);
        std::vector<int> used;
        for (size_t i = 0; i < ne.size() && !common.empty(); ++i) {
            std::set<int> inter;
            for (int f : common)
                if (fs[i].count(f)) inter.insert(f);
            if (inter.size() < common.size()) used.push_back((int)i);
            common = inter;
        }
        if (common.empty()) {
            Certificate c;
            c.clause = Clause::ObsTwo4Paths;
            c.variant = 2;
            for (int i : used) {
                c.witnesses.push_back(ne[i].first);
                c.witnesses.push_back(ne[i].second);
            }
            c.narrative = "the listed non-edges meet no common bounded face of the drawing";
            out.push_back(c);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// refutation driver

/// All violations the outside-obstacle machinery can find for this drawing
/// with the given clique pair.
inline std::vector<Certificate> refute_outside_all(const Drawing& d, const std::vector<int>& Z,
                                                   const std::vector<int>& Zp) {
    std::vector<Certificate> out;
    const Graph& g = d.graph;
    PetalDecomposition pd = petal_decomposition(d, Z, Zp);

    // Observation-level prerequisite: cross non-edges must escape the hulls
    if (Z.size() >= 3 && Zp.size() >= 3) {
        for (int u : Z)
            for (int v : Zp)
                if (!g.has_edge(u, v) &&
                    segment_inside_hull_union(d, u, v, pd.hullZ, pd.hullZp)) {
                    Certificate c;
                    c.clause = Clause::ObsCliqueDisjoint;
                    c.witnesses = {u, v};
                    std::ostringstream os;
                    os << "non-edge " << u << "-" << v
                       << " lies inside the union of the clique hulls, which every outside "
                          "obstacle avoids";
                    c.narrative = os.str();
                    out.push_back(c);
                }
    }

    for (const auto& emb : find_induced_k6star(g, Z, Zp))
        if (auto c = check_lemma4b(d, Z, Zp, emb)) out.push_back(*c);

    if (auto c = check_lemma4a(pd, g, Z, Zp)) out.push_back(*c);

    Arrangement arr = build_arrangement(d);
    if (pd.relation == HullRelation::crossing) {
        auto pos = [](const std::vector<int>& vs, int v) {
            for (size_t i = 0; i < vs.size(); ++i)
                if (vs[i] == v) return (int)i;
            return -1;
        };
        for (const auto& cyc : find_induced_4cycles_across(g, Z, Zp)) {
            int p1 = pd.memberZ[pos(Z, cyc.z1)], p2 = pd.memberZ[pos(Z, cyc.z2)];
            if (p1 < 0 || p2 < 0 || p1 != p2) continue;
            if (auto c = check_lemma4c(d, arr, pd, Z, Zp, cyc)) out.push_back(*c);
        }
    }

    // last resort, and the complete per-drawing test: a non-edge that cannot
    // reach the unbounded face of the drawn edges is unblockable from outside
    for (auto [u, v] : g.non_edges())
        if (!non_edge_outside_accessible(arr, d, u, v)) {
            Certificate c;
            c.clause = Clause::Lemma4c;
            c.variant = 1;
            c.witnesses = {u, v};
            std::ostringstream os;
            os << "non-edge " << u << "-" << v
               << " is not accessible from the outside of the drawn edges";
            c.narrative = os.str();
            out.push_back(c);
        }
    return out;
}

/// First violated clause for the requested obstacle kind; `any` requires the
/// drawing to be refuted for both kinds and reports the outside certificate.
inline std::optional<Certificate> refute_drawing(const Drawing& d, const std::vector<int>& Z,
                                                 const std::vector<int>& Zp, Want want) {
    std::vector<Certificate> outside, inside;
    if (want != Want::inside) outside = refute_outside_all(d, Z, Zp);
    if (want != Want::outside) inside = check_inside_observations(d);
    if (want == Want::outside) return outside.empty() ? std::nullopt : std::make_optional(outside[0]);
    if (want == Want::inside) return inside.empty() ? std::nullopt : std::make_optional(inside[0]);
    if (outside.empty() || inside.empty()) return std::nullopt;
    return outside[0];
}

// ---------------------------------------------------------------------------
// certificate replay

/// Re-evaluates the named clause on the stored witnesses; true iff the
/// violation is reproduced.
inline bool replay_certificate(const Certificate& c, const Drawing& d, const std::vector<int>& Z,
                               const std::vector<int>& Zp) {
    const Graph& g = d.graph;
    switch (c.clause) {
        case Clause::Lemma4a: {
            if (c.witnesses.size() != 4) return false;
            PetalDecomposition pd = petal_decomposition(d, Z, Zp);
            if (pd.relation != HullRelation::crossing || pd.t != c.witnesses[2]) return false;
            int v = c.witnesses[0];
            const auto& other = c.witnesses[3] == 0 ? Zp : Z;
            int cnt = 0;
            for (int u : other)
                if (g.has_edge(u, v)) ++cnt;
            return cnt == c.witnesses[1] && cnt < pd.t - 1;
        }
        case Clause::Lemma4bTriples: {
            std::vector<int> x(c.witnesses.begin(), c.witnesses.begin() + 3);
            std::vector<int> y(c.witnesses.begin() + 3, c.witnesses.begin() + 6);
            return !triangles_at_least_1_crossing(d, x, y);
        }
        case Clause::Lemma4bHulls:
            return !triangles_at_least_1_crossing(d, Z, Zp);
        case Clause::Lemma4c: {
            Arrangement arr = build_arrangement(d);
            if (c.variant == 1)
                return !g.has_edge(c.witnesses[0], c.witnesses[1]) &&
                       !non_edge_outside_accessible(arr, d, c.witnesses[0], c.witnesses[1]);
            PetalDecomposition pd = petal_decomposition(d, Z, Zp);
            if (pd.relation != HullRelation::crossing) return false;
            Cross4Cycle cyc{c.witnesses[0], c.witnesses[1], c.witnesses[2], c.witnesses[3]};
            try {
                return check_lemma4c(d, arr, pd, Z, Zp, cyc).has_value();
            } catch (const std::invalid_argument&) {
                return false;
            }
        }
        case Clause::ObsCliqueDisjoint: {
            PetalDecomposition pd = petal_decomposition(d, Z, Zp);
            int u = c.witnesses[0], v = c.witnesses[1];
            return !g.has_edge(u, v) && segment_inside_hull_union(d, u, v, pd.hullZ, pd.hullZp);
        }
        case Clause::ObsHullCycle:
        case Clause::Obs4PathConvex:
        case Clause::ObsTwo4Paths:
        case Clause::ObsConsecutive: {
            for (const Certificate& k : check_inside_observations(d))
                if (k.clause == c.clause && k.variant == c.variant && k.witnesses == c.witnesses)
                    return true;
            return false;
        }
    }
    return false;
}

}  // namespace visobs

#endif
