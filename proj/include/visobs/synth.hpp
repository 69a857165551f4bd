#ifndef VISOBS_SYNTH_HPP
#define VISOBS_SYNTH_HPP

#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "visobs/drawing.hpp"

namespace visobs {

namespace synth_detail {

/// Bounding box three times the extent of all geometry, per the outside-face
/// clipping convention.
inline BoundingBox synthesis_box(const std::vector<Point>& pts) {
    BoundingBox bb = bounding_box(pts);
    Rat w = bb.xmax - bb.xmin, h = bb.ymax - bb.ymin;
    if (sign(w) == 0) w = 1;
    if (sign(h) == 0) h = 1;
    return BoundingBox{bb.xmin - w, bb.ymin - h, bb.xmax + w, bb.ymax + h};
}

inline bool in_box_strict(const BoundingBox& b, const Point& p) {
    return cmp(b.xmin, p.x) < 0 && cmp(p.x, b.xmax) < 0 && cmp(b.ymin, p.y) < 0 &&
           cmp(p.y, b.ymax) < 0;
}

/// Convex-cell complex: the arrangement of obstruction segments, target
/// segments and a bounding box, refined by vertical walls through every node
/// so that every bounded face is convex. Corridors routed through cells may
/// cross walls and targets but never obstruction segments.
struct CellComplex {
    enum Label { kEdge = 0, kBox = 1, kWall = 2, kTarget = 3 };

    Arrangement aux;
    std::vector<Label> seg_label;   // per aux segment
    std::vector<int> seg_target;    // target index for kTarget segments, else -1
    std::vector<int> cell_cycle;    // per cell: positive cycle index
    std::vector<Point> cell_hub;    // interior point of each cell
    std::vector<int> cell_base_face;  // face of the base arrangement containing the cell
    struct Portal {
        int cell_a, cell_b;
        int arc;  // aux arc index
        int target;  // -1 for wall portals
    };
    std::vector<Portal> portals;
    std::map<int, int> cycle_to_cell;

    int cell_of_cycle(int cyc) const {
        auto it = cycle_to_cell.find(cyc);
        return it == cycle_to_cell.end() ? -1 : it->second;
    }
};

/// Vertical wall segments through every node of the given arrangement,
/// stopping at the first feature hit (arc interior or node) or at the box.
inline std::vector<Segment> vertical_walls(const Arrangement& ar) {
    std::vector<Segment> walls;
    const auto& nodes = ar.nodes();
    for (int i = 0; i < (int)nodes.size(); ++i) {
        const Point& u = nodes[i];
        for (int dir = 0; dir < 2; ++dir) {  // 0: up, 1: down
            bool skip = false;
            // an incident vertical arc already is the wall
            for (const auto& arc : ar.arcs()) {
                const Point* other = nullptr;
                if (arc.a == i) other = &nodes[arc.b];
                else if (arc.b == i) other = &nodes[arc.a];
                else continue;
                if (other->x == u.x && (dir == 0 ? other->y > u.y : other->y < u.y)) skip = true;
            }
            if (skip) continue;
            std::optional<Rat> besty;
            auto consider = [&](const Rat& y) {
                if (dir == 0 ? cmp(y, u.y) > 0 : cmp(y, u.y) < 0)
                    if (!besty || (dir == 0 ? cmp(y, *besty) < 0 : cmp(y, *besty) > 0)) besty = y;
            };
            for (const Point& w : nodes)
                if (w.x == u.x && !(w == u)) consider(w.y);
            for (const auto& arc : ar.arcs()) {
                const Point &a = nodes[arc.a], &b = nodes[arc.b];
                int sa = cmp(a.x, u.x), sb = cmp(b.x, u.x);
                if (sa == 0 || sb == 0) continue;  // endpoint at same x handled as node
                if (sa * sb > 0) continue;
                // strict interior crossing of the vertical line
                Rat t = (u.x - a.x) / (b.x - a.x);
                consider(a.y + t * (b.y - a.y));
            }
            if (besty) walls.emplace_back(u, Point(u.x, *besty));
        }
    }
    // a wall shot up to a node and the wall shot down from that node coincide
    std::vector<Segment> unique_walls;
    std::set<std::pair<Point, Point>> seen;
    for (const Segment& w : walls) {
        auto key = w.a < w.b ? std::make_pair(w.a, w.b) : std::make_pair(w.b, w.a);
        if (seen.insert(key).second) unique_walls.push_back(w);
    }
    return unique_walls;
}

inline CellComplex build_cells(const std::vector<Segment>& obstructions,
                               const std::vector<Segment>& targets, const BoundingBox& box) {
    CellComplex cc;
    std::vector<Segment> segs;
    std::vector<CellComplex::Label> labels;
    std::vector<int> tgt;
    auto push = [&](const Segment& s, CellComplex::Label l, int t) {
        segs.push_back(s);
        labels.push_back(l);
        tgt.push_back(t);
    };
    for (const Segment& s : obstructions) push(s, CellComplex::kEdge, -1);
    for (size_t i = 0; i < targets.size(); ++i) push(targets[i], CellComplex::kTarget, (int)i);
    Point b1(box.xmin, box.ymin), b2(box.xmax, box.ymin), b3(box.xmax, box.ymax), b4(box.xmin, box.ymax);
    push(Segment(b1, b2), CellComplex::kBox, -1);
    push(Segment(b2, b3), CellComplex::kBox, -1);
    push(Segment(b3, b4), CellComplex::kBox, -1);
    push(Segment(b4, b1), CellComplex::kBox, -1);

    Arrangement first(segs);
    for (const Segment& w : vertical_walls(first)) push(w, CellComplex::kWall, -1);

    cc.aux = Arrangement(segs);
    cc.seg_label = std::move(labels);
    cc.seg_target = std::move(tgt);

    // cells = bounded faces of the refined arrangement
    for (int f = 1; f < cc.aux.face_count(); ++f) {
        int cyc = cc.aux.positive_cycle_of_face(f);
        int cell = (int)cc.cell_cycle.size();
        cc.cell_cycle.push_back(cyc);
        cc.cycle_to_cell[cyc] = cell;
        // hub: average of the distinct walk nodes (convex cell -> interior)
        std::set<int> ids;
        for (int h : cc.aux.cycle_halfedges(cyc)) ids.insert(cc.aux.he_from(h));
        Rat sx(0), sy(0);
        for (int id : ids) {
            sx += cc.aux.nodes()[id].x;
            sy += cc.aux.nodes()[id].y;
        }
        Point hub(sx / (long)ids.size(), sy / (long)ids.size());
        if (cc.aux.locate(hub) != f) hub = cc.aux.face_sample(f);
        cc.cell_hub.push_back(hub);
    }
    cc.cell_base_face.assign(cc.cell_cycle.size(), -1);

    // portals: wall/target arcs with cells on both sides
    const auto& arcs = cc.aux.arcs();
    for (int ai = 0; ai < (int)arcs.size(); ++ai) {
        CellComplex::Label l = cc.seg_label[arcs[ai].seg];
        if (l != CellComplex::kWall && l != CellComplex::kTarget) continue;
        int c1 = cc.aux.cycle_of_halfedge(2 * ai);
        int c2 = cc.aux.cycle_of_halfedge(2 * ai + 1);
        int cell1 = cc.cell_of_cycle(c1), cell2 = cc.cell_of_cycle(c2);
        if (cell1 < 0 || cell2 < 0) continue;
        cc.portals.push_back({cell1, cell2, ai,
                              l == CellComplex::kTarget ? cc.seg_target[arcs[ai].seg] : -1});
    }
    return cc;
}

/// Plane tree with straight edges meeting only at shared endpoints.
struct PlaneTree {
    std::vector<Point> pts;
    std::map<Point, int> id;
    std::vector<std::vector<int>> adj;

    int add_point(const Point& p) {
        auto [it, fresh] = id.emplace(p, (int)pts.size());
        if (fresh) {
            pts.push_back(p);
            adj.emplace_back();
        }
        return it->second;
    }
    void add_edge(const Point& a, const Point& b) {
        int u = add_point(a), v = add_point(b);
        if (u == v) return;
        for (int w : adj[u])
            if (w == v) return;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    /// Segments of the tree pairwise intersect only in shared endpoints.
    bool embedding_ok() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < (int)pts.size(); ++u)
            for (int v : adj[u])
                if (u < v) es.emplace_back(u, v);
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j) {
                Segment a(pts[es[i].first], pts[es[i].second]);
                Segment b(pts[es[j].first], pts[es[j].second]);
                bool share = es[i].first == es[j].first || es[i].first == es[j].second ||
                             es[i].second == es[j].first || es[i].second == es[j].second;
                if (share) {
                    if (segments_intersect(a, b, SegMode::open)) return false;
                } else if (segments_intersect(a, b, SegMode::closed)) {
                    return false;
                }
            }
        // connected and acyclic
        if (pts.empty()) return false;
        size_t edges = es.size();
        std::vector<bool> seen(pts.size(), false);
        std::vector<int> stack{0};
        seen[0] = true;
        size_t cnt = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++cnt;
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        return cnt == pts.size() && edges == pts.size() - 1;
    }
};

/// Closed contour at offset delta around a plane tree: the classic walk that
/// visits every edge twice with the complement on its left, each side shifted
/// by its left normal, corners mitered and leaves capped.
inline std::vector<Point> tree_contour(const PlaneTree& t, const Rat& delta) {
    struct Side {
        int from, to;
    };
    // ccw order of neighbours around every node
    std::vector<std::vector<int>> ring(t.pts.size());
    for (int u = 0; u < (int)t.pts.size(); ++u) {
        ring[u] = t.adj[u];
        std::sort(ring[u].begin(), ring[u].end(), [&](int a, int b) {
            Vec da = t.pts[a] - t.pts[u], db = t.pts[b] - t.pts[u];
            auto upper = [](const Vec& d) {
                int sy = sign(d.y);
                return sy > 0 || (sy == 0 && sign(d.x) > 0);
            };
            bool ua = upper(da), ub = upper(db);
            if (ua != ub) return ua;
            int c = sign(cross(da, db));
            if (c == 0) throw std::logic_error("tree contour: coincident directions");
            return c > 0;
        });
    }
    auto next_side = [&](const Side& s) {
        int v = s.to;
        const auto& r = ring[v];
        int idx = -1;
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i] == s.from) idx = (int)i;
        return Side{v, r[(idx + r.size() - 1) % r.size()]};
    };
    // collect the full walk (2E sides)
    size_t total = 0;
    for (auto& a : t.adj) total += a.size();
    std::vector<Side> walk;
    Side s{0, ring[0][0]};
    for (size_t i = 0; i < total; ++i) {
        walk.push_back(s);
        s = next_side(s);
    }

    auto offset_vec = [&](const Vec& d) {
        Vec n = rot90(d);
        Rat m = std::max(rat_abs(n.x), rat_abs(n.y));
        return (delta / m) * n;
    };
    std::vector<Point> contour;
    for (size_t i = 0; i < walk.size(); ++i) {
        const Side& cur = walk[i];
        const Side& nxt = walk[(i + 1) % walk.size()];
        Point q = t.pts[cur.to];
        Vec d1 = t.pts[cur.to] - t.pts[cur.from];
        Vec d2 = t.pts[nxt.to] - t.pts[nxt.from];
        Vec o1 = offset_vec(d1), o2 = offset_vec(d2);
        if (nxt.to == cur.from && t.adj[cur.to].size() == 1) {
            // leaf cap: extend past the leaf by delta
            Rat m = std::max(rat_abs(d1.x), rat_abs(d1.y));
            Vec ext = (delta / m) * d1;
            contour.push_back(q + o1 + ext);
            contour.push_back(q + o2 + ext);
            continue;
        }
        Rat den = cross(d1, d2);
        if (sign(den) == 0) {
            // straight-through: small jog between the two offset lines
            contour.push_back(q + o1);
            contour.push_back(q + o2);
        } else {
            // miter: intersection of the two offset lines
            Point p1 = t.pts[cur.from] + o1;
            Point p2 = t.pts[nxt.from] + o2;
            Rat s2 = cross(p2 - p1, d2) / den;
            contour.push_back(p1 + s2 * d1);
        }
    }
    return contour;
}

}  // namespace synth_detail

/// Constructive half of the fixed-drawing decision: a simple polygon strictly
/// inside the chosen face whose open interior meets every target segment.
/// For the unbounded face the polygon stays inside a bounding box three times
/// the drawing's extent. Throws when some target does not meet the face.
inline SimplePolygon synthesize_obstacle_in_face(const Drawing& drawing, const Arrangement& base,
                                                 int face, const std::vector<Segment>& targets) {
    using namespace synth_detail;
    std::vector<Point> all = drawing.placement;
    for (const Segment& t : targets) {
        all.push_back(t.a);
        all.push_back(t.b);
    }
    BoundingBox box = synthesis_box(all);
    std::vector<Segment> obstructions = drawing.edge_segments();

    if (targets.empty()) {
        // degenerate tiny obstacle near (but never exactly on) the face sample;
        // for the unbounded face pick a spot between the drawing and the box
        BoundingBox bb = bounding_box(all);
        Point c = face == 0 ? Point((bb.xmax + box.xmax) / 2, (bb.ymax + box.ymax) / 2)
                            : base.face_sample(face);
        Rat r(1, 4);
        for (int it = 0; it < 96; ++it, r /= 2) {
            SimplePolygon sq({Point(c.x + r / 4, c.y + r / 4), Point(c.x + r, c.y + r / 4),
                              Point(c.x + r, c.y + r), Point(c.x + r / 4, c.y + r)});
            bool ok = true;
            for (const Point& p : sq.v)
                ok = ok && in_box_strict(box, p) && base.locate(p) == face;
            for (const Segment& e : obstructions)
                for (size_t i = 0; i < 4 && ok; ++i)
                    if (segments_intersect(e, sq.edge(i), SegMode::closed)) ok = false;
            for (const Point& vp : drawing.placement)
                if (sq.side(vp) >= 0) ok = false;
            if (ok) return sq;
        }
        throw std::logic_error("could not place a degenerate obstacle");
    }

    CellComplex cc = build_cells(obstructions, targets, box);
    // classify cells by base face (lazy: only cells we touch matter, but the
    // complex is small enough to do eagerly)
    for (size_t c = 0; c < cc.cell_cycle.size(); ++c)
        cc.cell_base_face[c] = base.locate(cc.cell_hub[c]);

    // adjacency restricted to cells inside the chosen face
    std::vector<std::vector<int>> nbr(cc.cell_cycle.size());
    std::vector<int> portal_for_target(targets.size(), -1);
    for (int pi = 0; pi < (int)cc.portals.size(); ++pi) {
        const auto& p = cc.portals[pi];
        if (cc.cell_base_face[p.cell_a] != face || cc.cell_base_face[p.cell_b] != face) continue;
        nbr[p.cell_a].push_back(pi);
        nbr[p.cell_b].push_back(pi);
        if (p.target >= 0 && portal_for_target[p.target] < 0) portal_for_target[p.target] = pi;
    }
    for (size_t i = 0; i < targets.size(); ++i)
        if (portal_for_target[i] < 0)
            throw std::invalid_argument("synthesize_obstacle_in_face: target does not meet the face");

    // BFS tree over cells in the face from the first required cell
    int root = cc.portals[portal_for_target[0]].cell_a;
    std::vector<int> parent_portal(cc.cell_cycle.size(), -1);
    std::vector<int> parent_cell(cc.cell_cycle.size(), -1);
    std::vector<bool> seen(cc.cell_cycle.size(), false);
    std::queue<int> bfs;
    bfs.push(root);
    seen[root] = true;
    while (!bfs.empty()) {
        int c = bfs.front();
        bfs.pop();
        for (int pi : nbr[c]) {
            const auto& p = cc.portals[pi];
            int o = p.cell_a == c ? p.cell_b : p.cell_a;
            if (seen[o]) continue;
            seen[o] = true;
            parent_portal[o] = pi;
            parent_cell[o] = c;
            bfs.push(o);
        }
    }

    // Steiner spine: tree paths from the root to each required portal's cell,
    // plus a short spur crossing the portal arc itself.
    auto arc_point = [&](int arc, int k) {
        const auto& a = cc.aux.arcs()[arc];
        return lerp(cc.aux.nodes()[a.a], cc.aux.nodes()[a.b], Rat(k, k + k + 1));
    };

    for (int attempt = 0; attempt < 8; ++attempt) {
        PlaneTree tree;
        bool bad = false;
        std::set<int> spine_cells;
        auto add_spine = [&](int cell) {
            while (cell != -1 && !spine_cells.count(cell)) {
                spine_cells.insert(cell);
                if (parent_cell[cell] != -1) {
                    int pi = parent_portal[cell];
                    Point m = arc_point(cc.portals[pi].arc, 1 + attempt);
                    tree.add_edge(cc.cell_hub[parent_cell[cell]], m);
                    tree.add_edge(m, cc.cell_hub[cell]);
                }
                cell = parent_cell[cell];
            }
        };
        for (size_t i = 0; i < targets.size(); ++i) {
            const auto& p = cc.portals[portal_for_target[i]];
            if (!seen[p.cell_a] || !seen[p.cell_b]) throw std::logic_error("face cells disconnected");
            add_spine(p.cell_a);
            Point m = arc_point(p.arc, 2 + attempt);
            Point tip = lerp(m, cc.cell_hub[p.cell_b], Rat(1, 8));
            tree.add_edge(cc.cell_hub[p.cell_a], m);
            tree.add_edge(m, tip);
        }
        try {
            if (!tree.embedding_ok()) bad = true;
        } catch (const std::logic_error&) {
            bad = true;
        }
        if (bad) continue;  // retry with shifted portal points

        Rat delta(1, 16);
        for (int it = 0; it < 24; ++it, delta /= 16) {
            std::vector<Point> contour;
            try {
                contour = synth_detail::tree_contour(tree, delta);
            } catch (const std::logic_error&) {
                break;  // re-pick points
            }
            SimplePolygon poly(contour);
            try {
                poly.canonicalize();
                poly.validate();
            } catch (const std::invalid_argument&) {
                continue;
            }
            bool ok = true;
            for (const Point& p : poly.v)
                if (!in_box_strict(box, p)) ok = false;
            for (size_t i = 0; i < poly.size() && ok; ++i) {
                Segment pe = poly.edge(i);
                for (const Segment& e : obstructions)
                    if (segments_intersect(pe, e, SegMode::closed)) {
                        ok = false;
                        break;
                    }
            }
            for (const Point& vp : drawing.placement)
                if (ok && poly.side(vp) >= 0) ok = false;
            for (const Segment& t : targets)
                if (ok && !segment_meets_open_polygon(t, poly)) ok = false;
            if (ok) return poly;
        }
    }
    throw std::logic_error("synthesize_obstacle_in_face: corridor construction failed");
}

struct DecideResult {
    int face = -1;
    Representation rep;
};

/// Decision part only: the face that every non-edge meets (preference:
/// unbounded, then lowest id), without synthesizing a witness obstacle.
inline std::optional<int> decide_face_only(const Drawing& drawing, const Arrangement& arr,
                                           Want want) {
    std::vector<int> candidates;
    if (want != Want::inside) candidates.push_back(0);
    if (want != Want::outside)
        for (int f = 1; f < arr.face_count(); ++f) candidates.push_back(f);
    std::set<int> live(candidates.begin(), candidates.end());
    for (auto [u, v] : drawing.graph.non_edges()) {
        std::set<int> fs = arr.segment_faces(drawing.segment(u, v));
        for (auto it = live.begin(); it != live.end();) {
            if (!fs.count(*it)) it = live.erase(it);
            else ++it;
        }
        if (live.empty()) return std::nullopt;
    }
    return *live.begin();
}

/// Is there a single obstacle of the requested kind completing this drawing?
/// An obstacle is confined to one face of the edge arrangement, so the test
/// scans faces: yes iff some admissible face is met by every non-edge
/// segment. On yes the witness obstacle is synthesized and fully verified.
inline std::optional<DecideResult> decide_fixed_drawing(const Drawing& drawing, Want want) {
    drawing.validate();
    Arrangement arr = build_arrangement(drawing);
    auto face_opt = decide_face_only(drawing, arr, want);
    if (!face_opt) return std::nullopt;
    int face = *face_opt;
    std::vector<Segment> targets = drawing.non_edge_segments();
    DecideResult res;
    res.face = face;
    res.rep.drawing = drawing;
    res.rep.obstacle = synthesize_obstacle_in_face(drawing, arr, face, targets);
    res.rep.kind = face == 0 ? ObstacleKind::outside : ObstacleKind::inside;
    VerifyReport vr = verify_representation(res.rep);
    if (!vr.ok) throw std::logic_error("decide_fixed_drawing: synthesized witness failed: " + vr.describe());
    return res;
}

}  // namespace visobs

#endif
