#ifndef VISOBS_COMPOSE_HPP
#define VISOBS_COMPOSE_HPP

#include <optional>

#include "visobs/synth.hpp"

namespace visobs {

namespace compose_detail {

/// L-infinity pseudo-normalization: rational, direction-preserving.
inline Vec norm1(const Vec& v) {
    Rat m = std::max(rat_abs(v.x), rat_abs(v.y));
    return Vec{v.x / m, v.y / m};
}

/// Affine map of a whole representation's placement (placement only; the
/// obstacle is re-synthesized after every composition).
inline std::vector<Point> map_points(const std::vector<Point>& pts,
                                     const std::function<Point(const Point&)>& f) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts) out.push_back(f(p));
    return out;
}

/// Scale/translate into the open axis-aligned box.
inline std::function<Point(const Point&)> into_box(const std::vector<Point>& pts, Rat x0, Rat x1,
                                                   Rat y0, Rat y1) {
    BoundingBox bb = bounding_box(pts);
    Rat w = bb.xmax - bb.xmin, h = bb.ymax - bb.ymin;
    if (sign(w) == 0) w = 1;
    if (sign(h) == 0) h = 1;
    // keep a margin so images stay strictly inside
    Rat sx = (x1 - x0) / (2 * w), sy = (y1 - y0) / (2 * h);
    Rat ox = x0 + (x1 - x0) / 4, oy = y0 + (y1 - y0) / 4;
    return [=](const Point& p) {
        return Point(ox + (p.x - bb.xmin) * sx, oy + (p.y - bb.ymin) * sy);
    };
}

/// An escape direction at an exposed point: a rational direction d such that
/// points u + eps*d lie in the unbounded face for all small eps, plus a reach
/// r with the open segment (u, u + r*d) clear of the arrangement.
struct Pocket {
    Vec dir;
    Rat reach;
};

/// Small rational rotation by roughly 2/m radians (counterclockwise for
/// positive m): (m^2-1, 2m)/(m^2+1) is a rational point on the unit circle.
inline Vec rat_rotate(const Vec& v, long m) {
    Rat c(m * m - 1, m * m + 1), s(2 * m, m * m + 1);
    return Vec{c * v.x - s * v.y, s * v.x + c * v.y};
}

inline std::vector<Pocket> find_pockets(const Arrangement& arr, const Point& u) {
    std::vector<Vec> dirs;
    auto id = arr.node_id(u);
    if (id) {
        for (const auto& arc : arr.arcs()) {
            if (arc.a == *id) dirs.push_back(norm1(arr.nodes()[arc.b] - u));
            if (arc.b == *id) dirs.push_back(norm1(arr.nodes()[arc.a] - u));
        }
    }
    std::vector<Vec> cands;
    if (dirs.empty()) {
        cands = {Vec{Rat(1), Rat(0)}, Vec{Rat(-1), Rat(0)}, Vec{Rat(0), Rat(1)}, Vec{Rat(0), Rat(-1)}};
    } else if (dirs.size() == 1) {
        cands = {-dirs[0], rot90(dirs[0]), -rot90(dirs[0])};
    } else {
        auto upper = [](const Vec& d) {
            int sy = sign(d.y);
            return sy > 0 || (sy == 0 && sign(d.x) > 0);
        };
        std::sort(dirs.begin(), dirs.end(), [&](const Vec& a, const Vec& b) {
            bool ua = upper(a), ub = upper(b);
            if (ua != ub) return ua;
            return sign(cross(a, b)) > 0;
        });
        for (size_t i = 0; i < dirs.size(); ++i) {
            const Vec &a = dirs[i], &b = dirs[(i + 1) % dirs.size()];
            Vec mid = norm1(a) + norm1(b);
            if (sign(mid.x) == 0 && sign(mid.y) == 0) {
                cands.push_back(rot90(a));
            } else {
                // mid bisects the ccw sector from a to b when that sector is
                // below pi; otherwise its negation does
                if (sign(cross(a, mid)) > 0 && sign(cross(mid, b)) > 0) cands.push_back(mid);
                else cands.push_back(-mid);
            }
        }
    }
    // near-tangent variants widen the choice when hull corners must survive
    std::vector<Vec> more;
    for (const Vec& c : cands) {
        for (long m : {24L, -24L, 6L, -6L}) more.push_back(rat_rotate(c, m));
    }
    for (const Vec& d : dirs) {
        for (long m : {64L, 12L}) {
            more.push_back(rat_rotate(d, m));
            more.push_back(rat_rotate(d, -m));
        }
    }
    cands.insert(cands.end(), more.begin(), more.end());

    std::vector<Pocket> out;
    for (const Vec& d0 : cands) {
        Vec d = norm1(d0);
        // first hit along the ray
        std::optional<Rat> hit;
        for (const auto& arc : arr.arcs()) {
            const Point &a = arr.nodes()[arc.a], &b = arr.nodes()[arc.b];
            // solve u + t d on segment ab
            Rat den = cross(d, b - a);
            if (sign(den) == 0) continue;
            Rat t = cross(a - u, b - a) / den;
            Rat s = cross(a - u, d) / den;
            if (t > 0 && s >= 0 && s <= 1)
                if (!hit || t < *hit) hit = t;
        }
        Rat reach = hit ? *hit / 2 : Rat(1);
        Point probe = u + (reach / 2) * d;
        if (arr.locate(probe) == 0) out.push_back(Pocket{d, reach});
    }
    return out;
}

inline std::optional<Pocket> find_pocket(const Arrangement& arr, const Point& u) {
    auto all = find_pockets(arr, u);
    if (all.empty()) return std::nullopt;
    return all.front();
}

}  // namespace compose_detail

/// A representation whose local vertices carry ids of an enclosing graph.
struct LabeledRep {
    ExposedRepresentation er;
    std::vector<int> ids;  // local vertex -> global vertex id

    int local_of(int global) const {
        for (size_t i = 0; i < ids.size(); ++i)
            if (ids[i] == global) return (int)i;
        throw std::invalid_argument("global id not present in representation");
    }
};

/// Re-synthesizes an outside obstacle for a composed placement and wraps it
/// up with exposure bookkeeping. Returns nullopt when the placement does not
/// admit an exposed outside representation (caller shrinks and retries). The
/// expensive obstacle synthesis only runs once the cheap drawing-level checks
/// (general position, face coverage, exposure, hull membership) have passed.
inline std::optional<ExposedRepresentation> outside_rep_for(
    const Graph& g, const std::vector<Point>& pts, const std::vector<int>& need_hull = {}) {
    if (!in_general_position(pts)) return std::nullopt;
    Drawing d{g, pts};
    Arrangement arr(d.edge_segments());
    if (!decide_face_only(d, arr, Want::outside)) return std::nullopt;
    for (const Point& p : pts)
        if (!arr.exposed(p)) return std::nullopt;
    if (!need_hull.empty()) {
        std::vector<int> hv = hull_vertices(pts);
        for (int r : need_hull)
            if (std::find(hv.begin(), hv.end(), r) == hv.end()) return std::nullopt;
    }
    Representation rep;
    rep.drawing = d;
    try {
        rep.obstacle = synthesize_obstacle_in_face(d, arr, 0, d.non_edge_segments());
    } catch (const std::exception&) {
        return std::nullopt;
    }
    rep.kind = ObstacleKind::outside;
    VerifyReport vr = verify_representation(rep, &arr);
    if (!vr.ok) return std::nullopt;
    return make_exposed(std::move(rep), arr);
}

/// Disjoint union of two outside representations: the first is scaled into
/// (0,1)^2, the second into (1,2)x(0,1); every cross pair is separated by the
/// gap between the boxes, and the obstacle is re-synthesized around the whole
/// drawing. When keep_left_on_hull is set, that vertex of r1 is first made
/// leftmost so it survives on the union hull.
inline LabeledRep merge_disjoint(const LabeledRep& r1, const LabeledRep& r2, const Graph& whole,
                                 std::optional<int> keep_left_on_hull = std::nullopt,
                                 bool check_inputs = true) {
    using namespace compose_detail;
    if (check_inputs)
        for (const LabeledRep* r : {&r1, &r2})
            if (!verify_representation(r->er.rep).ok)
                throw std::invalid_argument("merge_disjoint: input fails verification");

    std::vector<Point> p1 = r1.er.rep.drawing.placement;
    if (keep_left_on_hull && p1.size() >= 2) {
        int lv = r1.local_of(*keep_left_on_hull);
        if (!r1.er.on_hull(lv)) throw std::invalid_argument("merge_disjoint: vertex not on hull");
        // change coordinates so that vertex becomes strictly leftmost: project
        // onto the outward normal direction of the hull at that vertex
        Vec out{Rat(0), Rat(0)};
        if (p1.size() == 2) {
            out = norm1(p1[lv] - p1[1 - lv]);
        } else {
            std::vector<Point> hull = convex_hull(p1).v;
            size_t hi = 0;
            while (hull[hi] != p1[lv]) ++hi;
            Vec e1 = hull[(hi + 1) % hull.size()] - hull[hi];
            Vec e0 = hull[hi] - hull[(hi + hull.size() - 1) % hull.size()];
            out = norm1(rot90(-e0)) + norm1(rot90(-e1));  // outward-ish normal
            if (sign(out.x) == 0 && sign(out.y) == 0) out = rot90(-e1);
        }
        Vec ax = -out;  // vertex minimizes the ax-projection
        Vec ay = rot90(ax);
        std::vector<Point> q;
        for (const Point& p : p1) q.emplace_back(dot(ax, p - p1[lv]), dot(ay, p - p1[lv]));
        p1 = q;
    }
    auto f1 = into_box(p1, Rat(0), Rat(1), Rat(0), Rat(1));
    auto f2 = into_box(r2.er.rep.drawing.placement, Rat(1), Rat(2), Rat(0), Rat(1));

    LabeledRep out;
    out.ids = r1.ids;
    out.ids.insert(out.ids.end(), r2.ids.begin(), r2.ids.end());
    std::vector<Point> pts = map_points(p1, f1);
    for (const Point& p : map_points(r2.er.rep.drawing.placement, f2)) pts.push_back(p);

    Graph g((int)out.ids.size());
    for (size_t i = 0; i < out.ids.size(); ++i)
        for (size_t j = i + 1; j < out.ids.size(); ++j)
            if (whole.has_edge(out.ids[i], out.ids[j])) g.add_edge((int)i, (int)j);
    // jiggle-free: placements from verified inputs are in general position
    // except possibly across the two groups; nudge the right group down by
    // snowflake offsets until clean
    std::vector<int> need_hull;
    if (keep_left_on_hull) need_hull.push_back(out.local_of(*keep_left_on_hull));
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto er = outside_rep_for(g, pts, need_hull);
        if (er) {
            out.er = std::move(*er);
            return out;
        }
        Rat dy = Rat(1, 1000) / (attempt + 1);
        for (size_t i = p1.size(); i < pts.size(); ++i) pts[i].y += dy;
    }
    throw std::logic_error("merge_disjoint: composition failed");
}

/// One-point amalgam per the identifying lemma: the second representation is
/// squashed into a thin wedge pocket of the first one's unbounded face at u,
/// with its anchor vertex v mapped onto u.
inline LabeledRep identify_vertices(const LabeledRep& rG, int u_global, const LabeledRep& rH,
                                    int v_global, const Graph& whole,
                                    const std::vector<int>& keep_hull_globals = {},
                                    bool check_inputs = true) {
    using namespace compose_detail;
    if (check_inputs &&
        (!verify_representation(rG.er.rep).ok || !verify_representation(rH.er.rep).ok))
        throw std::invalid_argument("identify_vertices: input fails verification");
    int u = rG.local_of(u_global), v = rH.local_of(v_global);
    if (!rG.er.exposed[u]) throw std::invalid_argument("identify_vertices: u not exposed");
    if (!rH.er.on_hull(v)) throw std::invalid_argument("identify_vertices: v not on hull");

    const std::vector<Point>& gp = rG.er.rep.drawing.placement;
    const std::vector<Point>& hp = rH.er.rep.drawing.placement;
    Point pu = gp[u], pv = hp[v];

    // wedge axis of H at v: must see every other H vertex within +-90 degrees
    Vec axis{Rat(0), Rat(0)};
    for (int w = 0; w < (int)hp.size(); ++w)
        if (w != v) axis = axis + norm1(hp[w] - pv);
    auto axis_ok = [&](const Vec& e) {
        if (sign(e.x) == 0 && sign(e.y) == 0) return false;
        for (int w = 0; w < (int)hp.size(); ++w)
            if (w != v && sign(dot(e, hp[w] - pv)) <= 0) return false;
        return true;
    };
    if (!axis_ok(axis)) {
        // fall back to the hull-edge bisector at v
        std::vector<Point> hull = convex_hull(hp).v;
        size_t hi = 0;
        while (hull[hi] != pv) ++hi;
        Vec in1 = hull[(hi + 1) % hull.size()] - pv;
        Vec in0 = hull[(hi + hull.size() - 1) % hull.size()] - pv;
        axis = norm1(in0) + norm1(in1);
        if (!axis_ok(axis)) throw std::logic_error("identify_vertices: no wedge axis found");
    }
    Vec axis_n = rot90(axis);
    Rat a2 = dot(axis, axis);

    Arrangement arrG = build_arrangement(rG.er.rep.drawing);
    auto pockets = find_pockets(arrG, pu);
    if (pockets.empty()) throw std::logic_error("identify_vertices: exposed vertex has no pocket");

    LabeledRep out;
    out.ids = rG.ids;
    for (size_t i = 0; i < rH.ids.size(); ++i)
        if ((int)i != v) out.ids.push_back(rH.ids[i]);
    Graph g((int)out.ids.size());
    for (size_t i = 0; i < out.ids.size(); ++i)
        for (size_t j = i + 1; j < out.ids.size(); ++j)
            if (whole.has_edge(out.ids[i], out.ids[j])) g.add_edge((int)i, (int)j);

    std::vector<int> need_hull;
    for (int kg : keep_hull_globals) {
        for (size_t i = 0; i < out.ids.size(); ++i)
            if (out.ids[i] == kg) need_hull.push_back((int)i);
    }
    for (const auto& pocket : pockets) {
        Vec d = pocket.dir;
        Vec dn = rot90(d);
        Rat s = pocket.reach / 2, t = Rat(1, 4);
        for (int attempt = 0; attempt < 24; ++attempt, s /= 2, t /= 2) {
            // the shear keeps a two-point H off the ray through u
            for (Rat shear : {Rat(0), Rat(1, 8), Rat(-1, 8)}) {
                std::vector<Point> pts = gp;
                for (int w = 0; w < (int)hp.size(); ++w) {
                    if (w == v) continue;
                    Vec q = hp[w] - pv;
                    Rat a = dot(q, axis) / a2;
                    Rat b = dot(q, axis_n) / a2;
                    pts.push_back(pu + (s * a) * d + (s * (t * b + shear * a)) * dn);
                }
                auto er = outside_rep_for(g, pts, need_hull);
                if (er) {
                    out.er = std::move(*er);
                    return out;
                }
            }
        }
    }
    throw std::logic_error("identify_vertices: wedge search failed");
}

/// Non-adjacent twins of an on-hull vertex, placed on a flat convex chain
/// inside a shrinking disk around it; the whole twin class ends up on the
/// hull of the result.
inline LabeledRep insert_twins(const LabeledRep& r, int v_global, const std::vector<int>& twin_ids,
                               const Graph& whole, bool check_inputs = true) {
    using namespace compose_detail;
    if (twin_ids.empty()) return r;
    if (check_inputs && !verify_representation(r.er.rep).ok)
        throw std::invalid_argument("insert_twins: input fails verification");
    int v = r.local_of(v_global);
    if (!r.er.on_hull(v)) throw std::invalid_argument("insert_twins: vertex not on hull");

    const std::vector<Point>& pts0 = r.er.rep.drawing.placement;
    Point pv = pts0[v];
    // outward normal of the placement hull at v: the bent twin chain replaces
    // the hull corner there
    Vec n{Rat(1), Rat(0)};
    if (pts0.size() >= 3) {
        std::vector<Point> hull = convex_hull(pts0).v;
        size_t hi = 0;
        while (hull[hi] != pv) ++hi;
        Vec e1 = hull[(hi + 1) % hull.size()] - pv;
        Vec e0 = pv - hull[(hi + hull.size() - 1) % hull.size()];
        n = norm1(-rot90(e0)) + norm1(-rot90(e1));
        if (sign(n.x) == 0 && sign(n.y) == 0) n = -rot90(e1);
    } else if (pts0.size() == 2) {
        Vec e = pts0[1 - v] - pv;
        n = -norm1(e);
    }
    Vec tang = rot90(n);

    LabeledRep out;
    out.ids = r.ids;
    for (int id : twin_ids) out.ids.push_back(id);
    Graph g((int)out.ids.size());
    for (size_t i = 0; i < out.ids.size(); ++i)
        for (size_t j = i + 1; j < out.ids.size(); ++j)
            if (whole.has_edge(out.ids[i], out.ids[j])) g.add_edge((int)i, (int)j);

    Rat eps(1, 4);
    for (int attempt = 0; attempt < 64; ++attempt, eps /= 2) {
        std::vector<Point> pts = pts0;
        std::vector<int> need_hull{v};
        for (size_t k = 0; k < twin_ids.size(); ++k) {
            long c = (k % 2 == 0) ? (long)(k / 2 + 1) : -(long)(k / 2 + 1);
            // flat convex chain with apex at v; the sag shrinks quadratically
            // in eps so the chain eventually fits under any hull corner
            Rat ck(c);
            pts.push_back(pv + (eps * ck) * tang + (-eps * eps * Rat(1, 8) * ck * ck) * n);
            need_hull.push_back((int)(pts0.size() + k));
        }
        auto er = outside_rep_for(g, pts, need_hull);
        if (er) {
            out.er = std::move(*er);
            return out;
        }
    }
    throw std::logic_error("insert_twins: chain search failed");
}

}  // namespace visobs

#endif
