#ifndef VISOBS_ARRANGEMENT_HPP
#define VISOBS_ARRANGEMENT_HPP

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "visobs/geometry.hpp"

namespace visobs {

/// Planar subdivision induced by a set of segments, with exact rational
/// vertices. Faces are recovered from half-edge walks: every walk keeps its
/// face on the left, so walks of positive signed area are exactly the outer
/// boundaries of bounded faces. Nesting questions are answered by winding
/// numbers instead of an explicit hole tree.
class Arrangement {
  public:
    struct Arc {
        int a, b;  // node ids
        int seg;   // index of the input segment this arc belongs to
    };

    static constexpr int kOnArrangement = -2;

    Arrangement() = default;

    explicit Arrangement(const std::vector<Segment>& segments) : segs_(segments) {
        build_nodes_and_arcs();
        build_halfedges();
        build_cycles();
        if (!nodes_.empty()) {
            BoundingBox bb = bounding_box(nodes_);
            unbounded_sample_ = Point(bb.xmax + 1, bb.ymax + 1);
        }
        sample_cache_.assign(cycle_halfedges_.size(), std::nullopt);
        cycle_face_.assign(cycle_halfedges_.size(), -3);
    }

    // --- raw structure ------------------------------------------------------
    const std::vector<Point>& nodes() const { return nodes_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<Segment>& segments() const { return segs_; }
    int he_from(int h) const { return (h & 1) ? arcs_[h >> 1].b : arcs_[h >> 1].a; }
    int he_to(int h) const { return (h & 1) ? arcs_[h >> 1].a : arcs_[h >> 1].b; }
    int cycle_of_halfedge(int h) const { return cycle_of_[h]; }
    int cycle_count() const { return (int)cycle_halfedges_.size(); }
    const std::vector<int>& cycle_halfedges(int c) const { return cycle_halfedges_[c]; }
    const Rat& cycle_area2(int c) const { return cycle_area2_[c]; }
    std::optional<int> node_id(const Point& p) const {
        auto it = node_id_.find(p);
        if (it == node_id_.end()) return std::nullopt;
        return it->second;
    }

    // --- faces ---------------------------------------------------------------
    /// Public face ids: 0 is the unbounded face, 1..bounded_count() the
    /// bounded faces (one per positive cycle).
    int face_count() const { return 1 + (int)bounded_cycles_.size(); }
    int bounded_count() const { return (int)bounded_cycles_.size(); }
    static bool face_bounded(int fid) { return fid != 0; }
    int positive_cycle_of_face(int fid) const { return bounded_cycles_[fid - 1]; }

    const Point& face_sample(int fid) const {
        if (fid == 0) return unbounded_sample_;
        return cycle_sample(bounded_cycles_[fid - 1]);
    }

    /// Locates a point: face id, or kOnArrangement when it lies on an arc or
    /// node.
    int locate(const Point& q) const {
        for (const Arc& arc : arcs_)
            if (on_segment_closed(nodes_[arc.a], nodes_[arc.b], q)) return kOnArrangement;
        return locate_off(q);
    }

    /// The set of faces whose open region the open segment meets.
    std::set<int> segment_faces(const Segment& s) const {
        std::vector<Rat> ts{Rat(0), Rat(1)};
        for (const Arc& arc : arcs_) {
            const Point &a = nodes_[arc.a], &b = nodes_[arc.b];
            Segment e(a, b);
            if (auto p = proper_crossing(s, e)) ts.push_back(param_on_segment(s.a, s.b, *p));
            if (on_segment_closed(s.a, s.b, a)) ts.push_back(param_on_segment(s.a, s.b, a));
            if (on_segment_closed(s.a, s.b, b)) ts.push_back(param_on_segment(s.a, s.b, b));
            if (on_segment_closed(a, b, s.a)) ts.push_back(Rat(0));
            if (on_segment_closed(a, b, s.b)) ts.push_back(Rat(1));
        }
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        std::set<int> out;
        for (size_t i = 0; i + 1 < ts.size(); ++i) {
            int f = locate(lerp(s.a, s.b, (ts[i] + ts[i + 1]) / 2));
            if (f >= 0) out.insert(f);
        }
        return out;
    }

    /// Is the point on the closure of the unbounded face? For arrangement
    /// nodes this is the exposure test; other points must lie in the open
    /// unbounded face.
    bool exposed(const Point& p) const {
        auto it = node_id_.find(p);
        if (it == node_id_.end()) return locate(p) == 0;
        ensure_exposure();
        return exposed_node_[it->second];
    }

    /// Face bordered (on the left) of the given cycle's half-edges.
    int cycle_face(int c) const {
        if (cycle_face_[c] == -3) {
            if (sign(cycle_area2_[c]) > 0) {
                cycle_face_[c] = face_of_positive_[c];
            } else {
                cycle_face_[c] = locate_off(cycle_sample(c));
            }
        }
        return cycle_face_[c];
    }

    /// A point strictly inside the face to the left of the cycle.
    const Point& cycle_sample(int c) const {
        if (!sample_cache_[c]) sample_cache_[c] = sample_left_of(c);
        return *sample_cache_[c];
    }

    // --- counts ---------------------------------------------------------------
    int vertex_count() const { return (int)nodes_.size(); }
    int arc_count() const { return (int)arcs_.size(); }
    int component_count() const { return components_; }
    /// V - E + F; equals 1 + number of connected components of the
    /// subdivision (2 whenever the union of the segments is connected).
    long euler_characteristic() const { return (long)vertex_count() - arc_count() + face_count(); }

  private:
    std::vector<Segment> segs_;
    std::vector<Point> nodes_;
    std::map<Point, int> node_id_;
    std::vector<Arc> arcs_;

    std::vector<std::vector<int>> out_;  // per node: outgoing halfedges, ccw
    std::vector<int> next_;
    std::vector<int> cycle_of_;
    std::vector<std::vector<int>> cycle_halfedges_;
    std::vector<Rat> cycle_area2_;
    std::vector<int> bounded_cycles_;
    std::vector<int> face_of_positive_;
    mutable std::vector<int> cycle_face_;
    mutable std::vector<std::optional<Point>> sample_cache_;
    mutable std::optional<std::vector<bool>> exposure_cache_;
    mutable std::vector<bool> exposed_node_;
    Point unbounded_sample_{Rat(0), Rat(0)};
    int components_ = 0;

    int node(const Point& p) {
        auto [it, fresh] = node_id_.emplace(p, (int)nodes_.size());
        if (fresh) nodes_.push_back(p);
        return it->second;
    }

    void build_nodes_and_arcs() {
        size_t n = segs_.size();
        std::vector<std::vector<Point>> cuts(n);
        for (size_t i = 0; i < n; ++i) {
            cuts[i].push_back(segs_[i].a);
            cuts[i].push_back(segs_[i].b);
        }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                const Segment &s = segs_[i], &t = segs_[j];
                if (sign(cross(s.b - s.a, t.b - t.a)) == 0 && orient(s.a, s.b, t.a) == 0 &&
                    orient(s.a, s.b, t.b) == 0) {
                    int shared = (on_segment_open(s.a, s.b, t.a) ? 1 : 0) +
                                 (on_segment_open(s.a, s.b, t.b) ? 1 : 0) +
                                 (on_segment_open(t.a, t.b, s.a) ? 1 : 0) +
                                 (on_segment_open(t.a, t.b, s.b) ? 1 : 0) +
                                 ((s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a) ? 2 : 0);
                    if (shared > 0) throw std::invalid_argument("collinear overlapping segments");
                }
                if (auto p = proper_crossing(s, t)) {
                    cuts[i].push_back(*p);
                    cuts[j].push_back(*p);
                }
                if (on_segment_open(s.a, s.b, t.a)) cuts[i].push_back(t.a);
                if (on_segment_open(s.a, s.b, t.b)) cuts[i].push_back(t.b);
                if (on_segment_open(t.a, t.b, s.a)) cuts[j].push_back(s.a);
                if (on_segment_open(t.a, t.b, s.b)) cuts[j].push_back(s.b);
            }
        for (size_t i = 0; i < n; ++i) {
            auto& pts = cuts[i];
            std::sort(pts.begin(), pts.end(), [&](const Point& p, const Point& q) {
                return param_on_segment(segs_[i].a, segs_[i].b, p) <
                       param_on_segment(segs_[i].a, segs_[i].b, q);
            });
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
            for (size_t k = 0; k + 1 < pts.size(); ++k)
                arcs_.push_back({node(pts[k]), node(pts[k + 1]), (int)i});
        }
    }

    static bool dir_upper(const Vec& d) {
        int sy = sign(d.y);
        return sy > 0 || (sy == 0 && sign(d.x) > 0);
    }

    void build_halfedges() {
        out_.assign(nodes_.size(), {});
        for (size_t a = 0; a < arcs_.size(); ++a) {
            out_[arcs_[a].a].push_back((int)(2 * a));
            out_[arcs_[a].b].push_back((int)(2 * a + 1));
        }
        for (size_t v = 0; v < nodes_.size(); ++v) {
            auto dir = [&](int h) { return nodes_[he_to(h)] - nodes_[he_from(h)]; };
            std::sort(out_[v].begin(), out_[v].end(), [&](int h1, int h2) {
                Vec d1 = dir(h1), d2 = dir(h2);
                bool u1 = dir_upper(d1), u2 = dir_upper(d2);
                if (u1 != u2) return u1;
                int c = sign(cross(d1, d2));
                if (c == 0) throw std::logic_error("coincident halfedge directions at a node");
                return c > 0;
            });
        }
        next_.assign(2 * arcs_.size(), -1);
        std::vector<int> pos(2 * arcs_.size());
        for (size_t v = 0; v < nodes_.size(); ++v)
            for (size_t i = 0; i < out_[v].size(); ++i) pos[out_[v][i]] = (int)i;
        for (int h = 0; h < (int)(2 * arcs_.size()); ++h) {
            int tw = h ^ 1;
            const auto& ring = out_[he_from(tw)];
            next_[h] = ring[(pos[tw] + ring.size() - 1) % ring.size()];
        }
    }

    void build_cycles() {
        cycle_of_.assign(2 * arcs_.size(), -1);
        for (int h0 = 0; h0 < (int)(2 * arcs_.size()); ++h0) {
            if (cycle_of_[h0] >= 0) continue;
            int id = (int)cycle_halfedges_.size();
            cycle_halfedges_.emplace_back();
            Rat area2(0);
            int h = h0;
            do {
                cycle_of_[h] = id;
                cycle_halfedges_[id].push_back(h);
                const Point& p = nodes_[he_from(h)];
                const Point& q = nodes_[he_to(h)];
                area2 += cross(Vec{p.x, p.y}, Vec{q.x, q.y});
                h = next_[h];
            } while (h != h0);
            cycle_area2_.push_back(area2);
        }
        face_of_positive_.assign(cycle_halfedges_.size(), -1);
        for (size_t c = 0; c < cycle_halfedges_.size(); ++c)
            if (sign(cycle_area2_[c]) > 0) {
                face_of_positive_[c] = (int)bounded_cycles_.size() + 1;
                bounded_cycles_.push_back((int)c);
            }

        std::vector<int> uf(nodes_.size());
        std::iota(uf.begin(), uf.end(), 0);
        std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
        for (const Arc& a : arcs_) uf[find(a.a)] = find(a.b);
        std::set<int> roots;
        for (size_t v = 0; v < nodes_.size(); ++v) roots.insert(find((int)v));
        components_ = (int)roots.size();
    }

    int winding(int cycle, const Point& q) const {
        long w = 0;
        for (int h : cycle_halfedges_[cycle]) {
            const Point& a = nodes_[he_from(h)];
            const Point& b = nodes_[he_to(h)];
            if (cmp(a.y, q.y) <= 0) {
                if (cmp(b.y, q.y) > 0 && orient(a, b, q) > 0) ++w;
            } else {
                if (cmp(b.y, q.y) <= 0 && orient(a, b, q) < 0) --w;
            }
        }
        return (int)w;
    }

    int locate_off(const Point& q) const {
        int best = -1;
        for (size_t k = 0; k < bounded_cycles_.size(); ++k) {
            int c = bounded_cycles_[k];
            if (winding(c, q) != 0)
                if (best < 0 || cycle_area2_[c] < cycle_area2_[bounded_cycles_[best]]) best = (int)k;
        }
        return best < 0 ? 0 : best + 1;
    }

    /// True iff the arc (u,v) touches the probe segment m->q anywhere other
    /// than exactly at m.
    bool arc_touches_probe_beyond(const Point& u, const Point& v, const Point& m,
                                  const Point& q) const {
        if (on_segment_closed(u, v, q)) return true;
        if (proper_crossing(Segment(m, q), Segment(u, v))) return true;
        if (on_segment_closed(m, q, u) && u != m) return true;
        if (on_segment_closed(m, q, v) && v != m) return true;
        return false;
    }

    Point sample_left_of(int cycle) const {
        for (int h : cycle_halfedges_[cycle]) {
            const Point& a = nodes_[he_from(h)];
            const Point& b = nodes_[he_to(h)];
            Point m = midpoint(a, b);
            Vec nrm = rot90(b - a);
            Rat scale = std::max(rat_abs(nrm.x), rat_abs(nrm.y));
            Rat delta(1, 2);
            for (int it = 0; it < 96; ++it, delta /= 2) {
                Point q = m + (delta / scale) * nrm;
                bool clear = true;
                for (const Arc& arc : arcs_)
                    if (arc_touches_probe_beyond(nodes_[arc.a], nodes_[arc.b], m, q)) {
                        clear = false;
                        break;
                    }
                if (clear) return q;
            }
        }
        throw std::logic_error("could not sample a face interior point");
    }

    void ensure_exposure() const {
        if (exposure_cache_) return;
        exposed_node_.assign(nodes_.size(), false);
        for (int c = 0; c < (int)cycle_halfedges_.size(); ++c) {
            if (sign(cycle_area2_[c]) > 0) continue;  // positive walks border bounded faces
            if (cycle_face(c) != 0) continue;
            for (int h : cycle_halfedges_[c]) exposed_node_[he_from(h)] = true;
        }
        exposure_cache_ = exposed_node_;
    }
};

}  // namespace visobs

#endif
