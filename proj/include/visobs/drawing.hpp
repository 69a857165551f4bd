#ifndef VISOBS_DRAWING_HPP
#define VISOBS_DRAWING_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "visobs/arrangement.hpp"
#include "visobs/graph.hpp"
#include "visobs/polygon.hpp"

namespace visobs {

/// A straight-line placement of a graph's vertices.
struct Drawing {
    Graph graph;
    std::vector<Point> placement;

    Segment segment(int u, int v) const { return Segment(placement[u], placement[v]); }

    std::vector<Segment> edge_segments() const {
        std::vector<Segment> out;
        for (auto [u, v] : graph.edges()) out.push_back(segment(u, v));
        return out;
    }
    std::vector<Segment> non_edge_segments() const {
        std::vector<Segment> out;
        for (auto [u, v] : graph.non_edges()) out.push_back(segment(u, v));
        return out;
    }

    void validate() const {
        if ((int)placement.size() != graph.n)
            throw std::invalid_argument("placement size does not match vertex count");
        if (!in_general_position(placement))
            throw std::invalid_argument("placement not in general position");
    }
};

enum class ObstacleKind { inside, outside };

/// Which obstacle kind a query asks for.
enum class Want { inside, outside, any };

inline const char* to_string(ObstacleKind k) { return k == ObstacleKind::inside ? "inside" : "outside"; }

struct Representation {
    Drawing drawing;
    SimplePolygon obstacle;
    ObstacleKind kind = ObstacleKind::outside;
};

/// The planar subdivision induced by the drawn edge segments: the universe in
/// which obstacles live ("faces" of the visibility drawing).
inline Arrangement build_arrangement(const Drawing& d) {
    d.validate();
    return Arrangement(d.edge_segments());
}

/// Visibility graph of the points with respect to the open obstacle: pq is an
/// edge iff the segment pq misses the obstacle's interior.
inline Graph visibility_graph(const std::vector<Point>& points, const SimplePolygon& obstacle) {
    if (!in_general_position(points))
        throw std::invalid_argument("visibility_graph: points not in general position");
    for (const Point& p : points)
        if (obstacle.side(p) > 0)
            throw std::invalid_argument("visibility_graph: a point lies inside the obstacle");
    Graph g((int)points.size());
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!segment_meets_open_polygon(Segment(points[u], points[v]), obstacle)) g.add_edge(u, v);
    return g;
}

/// Which kind of obstacle is this? The obstacle may not cross any drawn edge
/// of the realized graph, hence lies inside a single face of the drawing: it
/// is an outside obstacle iff that face is the unbounded one.
inline ObstacleKind classify_obstacle(const Drawing& drawing, const SimplePolygon& obstacle,
                                      const Arrangement& arr) {
    for (auto [u, v] : drawing.graph.edges())
        if (segment_meets_open_polygon(drawing.segment(u, v), obstacle))
            throw std::invalid_argument("classify_obstacle: obstacle interior meets a drawn edge");
    Point w = obstacle.interior_point();
    int f = arr.locate(w);
    if (f == Arrangement::kOnArrangement)
        throw std::logic_error("classify_obstacle: witness fell on the arrangement");
    return f == 0 ? ObstacleKind::outside : ObstacleKind::inside;
}

inline ObstacleKind classify_obstacle(const Drawing& drawing, const SimplePolygon& obstacle) {
    Arrangement arr = build_arrangement(drawing);
    return classify_obstacle(drawing, obstacle, arr);
}

inline ObstacleKind classify_obstacle(const Representation& rep) {
    return classify_obstacle(rep.drawing, rep.obstacle);
}

struct VerifyReport {
    bool ok = false;
    /// required edges that the obstacle blocks
    std::vector<std::pair<int, int>> blocked_required;
    /// forbidden pairs that remain mutually visible
    std::vector<std::pair<int, int>> visible_forbidden;
    std::string message;

    std::string describe() const {
        if (ok) return "ok";
        std::ostringstream os;
        os << message;
        for (auto [u, v] : blocked_required) os << " required-edge-blocked(" << u << "," << v << ")";
        for (auto [u, v] : visible_forbidden) os << " non-edge-visible(" << u << "," << v << ")";
        return os.str();
    }
};

/// Full check of a claimed representation: the visibility graph of the
/// placement with the obstacle must equal the claimed graph and the obstacle
/// kind must match. Never throws on a well-formed input; failures come back
/// with the offending pairs.
inline VerifyReport verify_representation(const Representation& rep, const Arrangement* arr_hint);

inline VerifyReport verify_representation(const Representation& rep) {
    return verify_representation(rep, nullptr);
}

inline VerifyReport verify_representation(const Representation& rep, const Arrangement* arr_hint) {
    VerifyReport r;
    try {
        rep.drawing.validate();
        rep.obstacle.validate();
        Graph vis = visibility_graph(rep.drawing.placement, rep.obstacle);
        for (int u = 0; u < rep.drawing.graph.n; ++u)
            for (int v = u + 1; v < rep.drawing.graph.n; ++v) {
                bool want = rep.drawing.graph.has_edge(u, v);
                bool got = vis.has_edge(u, v);
                if (want && !got) r.blocked_required.emplace_back(u, v);
                if (!want && got) r.visible_forbidden.emplace_back(u, v);
            }
        if (!r.blocked_required.empty() || !r.visible_forbidden.empty()) {
            r.message = "visibility graph mismatch";
            return r;
        }
        ObstacleKind k = arr_hint ? classify_obstacle(rep.drawing, rep.obstacle, *arr_hint)
                                  : classify_obstacle(rep);
        if (k != rep.kind) {
            r.message = std::string("obstacle kind is ") + to_string(k) + ", claimed " +
                        to_string(rep.kind);
            return r;
        }
    } catch (const std::exception& e) {
        r.message = e.what();
        return r;
    }
    r.ok = true;
    return r;
}

/// A representation together with exposure flags and the convex hull of the
/// placement; all vertices must lie on the boundary of the unbounded face.
struct ExposedRepresentation {
    Representation rep;
    std::vector<bool> exposed;
    std::vector<int> hull;  // vertices on the convex hull of the placement

    bool all_exposed() const {
        for (bool b : exposed)
            if (!b) return false;
        return true;
    }
    bool on_hull(int v) const { return std::find(hull.begin(), hull.end(), v) != hull.end(); }
};

inline std::vector<int> hull_vertices(const std::vector<Point>& pts) {
    std::vector<int> out;
    if (pts.size() < 3) {
        for (size_t i = 0; i < pts.size(); ++i) out.push_back((int)i);
        return out;
    }
    ConvexPolygon h = convex_hull(pts);
    for (const Point& hv : h.v)
        for (size_t i = 0; i < pts.size(); ++i)
            if (pts[i] == hv) out.push_back((int)i);
    return out;
}

inline ExposedRepresentation make_exposed(Representation rep, const Arrangement& arr) {
    ExposedRepresentation er;
    er.exposed.resize(rep.drawing.graph.n);
    for (int v = 0; v < rep.drawing.graph.n; ++v)
        er.exposed[v] = arr.exposed(rep.drawing.placement[v]);
    er.hull = hull_vertices(rep.drawing.placement);
    er.rep = std::move(rep);
    return er;
}

inline ExposedRepresentation make_exposed(Representation rep) {
    Arrangement arr = build_arrangement(rep.drawing);
    return make_exposed(std::move(rep), arr);
}

}  // namespace visobs

#endif
