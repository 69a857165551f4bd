#ifndef VISOBS_CATALOG_HPP
#define VISOBS_CATALOG_HPP

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "visobs/catalog_data.hpp"
#include "visobs/compose.hpp"

namespace visobs {

/// A pre-validated point placement for one block shape: a base placement,
/// fixed edges/non-edges, free chord slots and an optional validity condition
/// over the chords. Instantiating an entry places (a subset of) its slots and
/// hands the drawing to decide_fixed_drawing, so a stale entry can reject an
/// instance but never corrupt one.
struct CatalogEntry {
    std::string id;
    int n = 0;
    std::vector<Point> pts;
    std::vector<int> cycle;  // slots of the base cycle, in order (may be empty)
    enum PairClass { kEdge = 0, kNonEdge = 1, kFree = 2 };
    std::map<std::pair<int, int>, PairClass> cls;
    std::string valid_if;  // empty = unconditional

    PairClass pair_class(int a, int b) const {
        if (a > b) std::swap(a, b);
        for (size_t i = 0; i < cycle.size(); ++i) {
            int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
            if (u > v) std::swap(u, v);
            if (u == a && v == b) return kEdge;
        }
        auto it = cls.find({a, b});
        if (it != cls.end()) return it->second;
        return kNonEdge;  // unlisted pairs default to non-edges
    }
};

namespace catalog_detail {

// --- tiny recursive-descent parser for valid-if expressions ----------------
struct CondParser {
    const std::string& s;
    size_t i = 0;
    const std::function<bool(int, int)>& edge;

    void skip() {
        while (i < s.size() && isspace((unsigned char)s[i])) ++i;
    }
    bool parse_or() {
        bool v = parse_and();
        skip();
        while (i < s.size() && s[i] == '|') {
            ++i;
            bool w = parse_and();
            v = v || w;
            skip();
        }
        return v;
    }
    bool parse_and() {
        bool v = parse_atom();
        skip();
        while (i < s.size() && s[i] == '&') {
            ++i;
            bool w = parse_atom();
            v = v && w;
            skip();
        }
        return v;
    }
    bool parse_atom() {
        skip();
        if (i < s.size() && s[i] == '!') {
            ++i;
            return !parse_atom();
        }
        if (i < s.size() && s[i] == '(') {
            ++i;
            bool v = parse_or();
            skip();
            if (i >= s.size() || s[i] != ')') throw std::invalid_argument("valid-if: missing )");
            ++i;
            return v;
        }
        if (i < s.size() && s[i] == 'e') {
            ++i;
            size_t j = i;
            while (j < s.size() && (isdigit((unsigned char)s[j]) || s[j] == '-')) ++j;
            std::string tok = s.substr(i, j - i);
            i = j;
            size_t dash = tok.find('-');
            if (dash == std::string::npos) throw std::invalid_argument("valid-if: bad atom");
            return edge(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
        }
        throw std::invalid_argument("valid-if: parse error near '" + s.substr(i) + "'");
    }
};

}  // namespace catalog_detail

inline bool eval_valid_if(const std::string& expr, const std::function<bool(int, int)>& edge) {
    if (expr.empty()) return true;
    catalog_detail::CondParser p{expr, 0, edge};
    bool v = p.parse_or();
    return v;
}

inline std::vector<CatalogEntry> parse_catalog(const std::string& text) {
    std::vector<CatalogEntry> out;
    std::istringstream in(text);
    std::string line;
    std::optional<CatalogEntry> cur;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "entry") {
            if (cur) fail("entry without end");
            cur.emplace();
            ls >> cur->id;
        } else if (!cur) {
            fail("directive outside entry");
        } else if (tok == "n") {
            ls >> cur->n;
            cur->pts.resize(cur->n);
        } else if (tok == "cycle") {
            int v;
            while (ls >> v) cur->cycle.push_back(v);
        } else if (tok == "point") {
            int idx;
            std::string xs, ys;
            ls >> idx >> xs >> ys;
            if (idx < 0 || idx >= cur->n) fail("point index out of range");
            cur->pts[idx] = Point(rat_from_string(xs), rat_from_string(ys));
        } else if (tok == "pair") {
            int a, b;
            std::string k;
            ls >> a >> b >> k;
            CatalogEntry::PairClass pc = k == "edge"      ? CatalogEntry::kEdge
                                         : k == "nonedge" ? CatalogEntry::kNonEdge
                                         : k == "free"    ? CatalogEntry::kFree
                                                          : throw std::invalid_argument("bad pair class " + k);
            if (a > b) std::swap(a, b);
            cur->cls[{a, b}] = pc;
        } else if (tok == "valid-if") {
            std::string rest;
            std::getline(ls, rest);
            size_t s0 = rest.find_first_not_of(' ');
            cur->valid_if = s0 == std::string::npos ? "" : rest.substr(s0);
        } else if (tok == "end") {
            out.push_back(std::move(*cur));
            cur.reset();
        } else {
            fail("unknown directive " + tok);
        }
    }
    if (cur) throw std::invalid_argument("catalog: unterminated entry");
    return out;
}

inline const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> entries = parse_catalog(data::catalog_text);
    return entries;
}

// ---------------------------------------------------------------------------
// entry matching

namespace catalog_detail {

/// All assignments of graph vertices onto entry slots consistent with the
/// entry's pair classes, visiting injective maps; calls sink(slot_of) until it
/// returns true.
inline bool enumerate_assignments(const CatalogEntry& e, const Graph& h,
                                  const std::function<bool(const std::vector<int>&)>& sink) {
    int L = (int)e.cycle.size();
    std::vector<int> slot_of(h.n, -1);
    std::vector<bool> used(e.n, false);

    auto compatible = [&](int v, int slot) {
        for (int u = 0; u < h.n; ++u) {
            if (slot_of[u] < 0 || u == v) continue;
            CatalogEntry::PairClass pc = e.pair_class(slot_of[u], slot);
            bool edge = h.has_edge(u, v);
            if (pc == CatalogEntry::kEdge && !edge) return false;
            if (pc == CatalogEntry::kNonEdge && edge) return false;
        }
        return true;
    };

    std::function<bool(int)> extend = [&](int v) -> bool {
        while (v < h.n && slot_of[v] >= 0) ++v;
        if (v >= h.n) return sink(slot_of);
        for (int s = 0; s < e.n; ++s) {
            if (used[s]) continue;
            if (!compatible(v, s)) continue;
            slot_of[v] = s;
            used[s] = true;
            if (extend(v + 1)) return true;
            slot_of[v] = -1;
            used[s] = false;
        }
        return false;
    };

    if (L == 0) return extend(0);
    // anchor the entry's cycle on a cycle of h (dihedral alignments)
    for (const auto& cyc : cycles_of_length(h, L)) {
        for (int refl = 0; refl < 2; ++refl) {
            for (int rot = 0; rot < L; ++rot) {
                std::fill(slot_of.begin(), slot_of.end(), -1);
                std::fill(used.begin(), used.end(), false);
                bool ok = true;
                for (int k = 0; k < L && ok; ++k) {
                    int v = cyc[refl ? (rot + L - k) % L : (rot + k) % L];
                    int s = e.cycle[k];
                    if (!compatible(v, s)) ok = false;
                    slot_of[v] = s;
                    used[s] = true;
                }
                if (!ok) continue;
                if (extend(0)) return true;
            }
        }
    }
    return false;
}

}  // namespace catalog_detail

/// Instantiates the entry for the given block graph: finds a slot assignment
/// compatible with the chord pattern and the validity condition, places the
/// vertices, and lets the fixed-drawing decision produce a verified outside
/// obstacle. `need_hull` vertices must land on the hull of the placement.
inline std::optional<LabeledRep> match_entry(const CatalogEntry& e, const Graph& h,
                                             const std::vector<int>& ids,
                                             const std::vector<int>& need_hull_local) {
    if (h.n > e.n) return std::nullopt;
    std::optional<LabeledRep> result;
    catalog_detail::enumerate_assignments(e, h, [&](const std::vector<int>& slot_of) {
        auto edge_on_slots = [&](int sa, int sb) {
            int va = -1, vb = -1;
            for (int v = 0; v < h.n; ++v) {
                if (slot_of[v] == sa) va = v;
                if (slot_of[v] == sb) vb = v;
            }
            return va >= 0 && vb >= 0 && h.has_edge(va, vb);
        };
        if (!eval_valid_if(e.valid_if, edge_on_slots)) return false;
        std::vector<Point> pts(h.n);
        for (int v = 0; v < h.n; ++v) pts[v] = e.pts[slot_of[v]];
        auto er = outside_rep_for(h, pts, need_hull_local);
        if (!er) return false;
        LabeledRep lr;
        lr.er = std::move(*er);
        lr.ids = ids;
        result = std::move(lr);
        return true;
    });
    return result;
}

// ---------------------------------------------------------------------------
// parametric construction: two hub vertices joined by internally disjoint
// paths of length 2 or 3, placed on a half-circle

/// Matches the generalized theta shape and produces its half-circle drawing:
/// hubs at the ends of a diameter, each path's interior vertices on the arc
/// with its hub-far vertex first, so every non-edge escapes through the arc
/// gaps between consecutive paths.
inline std::optional<LabeledRep> match_half_circle(const Graph& h, const std::vector<int>& ids,
                                                   const std::vector<int>& need_hull_local) {
    if (h.n < 5) return std::nullopt;
    std::vector<int> hubs;
    for (int v = 0; v < h.n; ++v)
        if (h.degree(v) >= 3) hubs.push_back(v);
    if (hubs.size() != 2) return std::nullopt;
    for (int flip = 0; flip < 2; ++flip) {
        int a = hubs[flip], b = hubs[1 - flip];
        // decompose the rest into paths
        std::vector<std::vector<int>> paths;  // interior vertices, a-side first
        std::vector<bool> seen(h.n, false);
        bool ok = true;
        for (int v = 0; v < h.n && ok; ++v) {
            if (v == a || v == b || seen[v]) continue;
            if (h.degree(v) == 2 && h.has_edge(v, a) && h.has_edge(v, b)) {
                paths.push_back({v});
                seen[v] = true;
                continue;
            }
            if (h.degree(v) != 2) {
                ok = false;
                break;
            }
            // must pair with a neighbour w: v ~ a, v ~ w, w ~ b
            int w = -1;
            for (int u = 0; u < h.n; ++u)
                if (u != a && u != b && h.has_edge(v, u)) w = u;
            if (w < 0 || seen[w] || h.degree(w) != 2) {
                ok = false;
                break;
            }
            int x = -1, y = -1;  // x ~ a, y ~ b
            if (h.has_edge(v, a) && h.has_edge(w, b)) x = v, y = w;
            else if (h.has_edge(w, a) && h.has_edge(v, b)) x = w, y = v;
            else {
                ok = false;
                break;
            }
            paths.push_back({x, y});
            seen[v] = seen[w] = true;
        }
        if (!ok) continue;
        // the hubs may carry the direct edge a-b and nothing else unaccounted
        int deg_expected_a = (int)paths.size() + (h.has_edge(a, b) ? 1 : 0);
        if (h.degree(a) != deg_expected_a || h.degree(b) != deg_expected_a) continue;

        // place: a=(-R,0), b=(R,0), arc slots ordered from the a side; per
        // path the b-neighbour comes first
        int slots = 0;
        for (auto& p : paths) slots += (int)p.size();
        std::vector<Point> pts(h.n);
        Rat R(64);
        pts[a] = Point(-R, Rat(0));
        pts[b] = Point(R, Rat(0));
        int k = 0;
        auto arc_point = [&](int idx) {
            // tan-half parametrization, decreasing tau from the a side
            Rat tau(2 * (slots - idx) + 1, 2);
            Rat den = 1 + tau * tau;
            return Point(R * (1 - tau * tau) / den, R * 2 * tau / den);
        };
        for (auto& p : paths) {
            if (p.size() == 1) {
                pts[p[0]] = arc_point(k++);
            } else {
                pts[p[1]] = arc_point(k++);  // b-neighbour first (nearer a)
                pts[p[0]] = arc_point(k++);
            }
        }
        auto er = outside_rep_for(h, pts, need_hull_local);
        if (!er) continue;
        LabeledRep lr;
        lr.er = std::move(*er);
        lr.ids = ids;
        return lr;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// block-level construction

inline LabeledRep construct_connected(const Graph& g, const std::vector<int>& ids,
                                      std::vector<int> need_hull_local);

/// Exposed outside representation of the biconnected (or trivially small)
/// graph `h` with every vertex of `need_hull_local` on the placement hull.
/// Catalog entries are tried first; blocks too large for any entry have their
/// twin classes stripped, the core rebuilt through the full pipeline, and the
/// twins re-inserted on bent chains.
inline LabeledRep construct_block(const Graph& h, const std::vector<int>& ids,
                                  std::vector<int> need_hull_local) {
    if (h.n == 1) {
        Graph g1(1);
        Drawing d{g1, {Point(Rat(0), Rat(0))}};
        Representation rep{d, SimplePolygon({Point(Rat(10), Rat(10)), Point(Rat(12), Rat(10)),
                                             Point(Rat(11), Rat(12))}),
                           ObstacleKind::outside};
        LabeledRep lr;
        lr.er = make_exposed(rep);
        lr.ids = ids;
        return lr;
    }
    if (h.n == 2) {
        Drawing d{h, {Point(Rat(0), Rat(0)), Point(Rat(4), Rat(1))}};
        auto res = decide_fixed_drawing(d, Want::outside);
        if (!res) throw std::logic_error("construct_block: two-vertex core failed");
        LabeledRep lr;
        lr.er = make_exposed(res->rep);
        lr.ids = ids;
        return lr;
    }

    for (const CatalogEntry& e : builtin_catalog())
        if (auto got = match_entry(e, h, ids, need_hull_local)) return *got;
    if (auto got = match_half_circle(h, ids, need_hull_local)) return *got;

    // no entry fits directly: strip twin classes and rebuild the core
    auto classes = find_twins(h);
    bool any = false;
    for (auto& c : classes) any = any || c.size() > 1;
    if (!any)
        throw std::logic_error("construct_block: no catalog entry matches a block core of order " +
                               std::to_string(h.n));
    std::vector<int> rep_of(h.n);
    std::vector<int> keep;
    for (auto& c : classes) {
        int rep = c[0];
        for (int v : c)
            if (std::find(need_hull_local.begin(), need_hull_local.end(), v) !=
                need_hull_local.end())
                rep = v;
        for (int v : c) rep_of[v] = rep;
        keep.push_back(rep);
    }
    std::sort(keep.begin(), keep.end());
    Graph core = h.induced(keep);
    std::vector<int> core_ids(keep.size());
    std::vector<int> core_pos(h.n, -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        core_ids[i] = ids[keep[i]];
        core_pos[keep[i]] = (int)i;
    }
    std::vector<int> core_hull;
    for (int r : need_hull_local) core_hull.push_back(core_pos[rep_of[r]]);
    for (auto& c : classes)
        if (c.size() > 1) core_hull.push_back(core_pos[rep_of[c[0]]]);
    std::sort(core_hull.begin(), core_hull.end());
    core_hull.erase(std::unique(core_hull.begin(), core_hull.end()), core_hull.end());

    LabeledRep cur = construct_connected(core, core_ids, core_hull);

    // re-insert twins class by class, in local id space
    std::vector<int> local_of_global(64, -1);
    for (int v = 0; v < h.n; ++v) local_of_global[ids[v]] = v;
    for (int& id : cur.ids) id = local_of_global[id];
    for (auto& c : classes) {
        if (c.size() <= 1) continue;
        int base = rep_of[c[0]];
        std::vector<int> others;
        for (int v : c)
            if (v != base) others.push_back(v);
        cur = insert_twins(cur, base, others, h, /*check_inputs=*/false);
    }
    for (int r : need_hull_local)
        if (!cur.er.on_hull(cur.local_of(r)))
            throw std::logic_error("construct_block: hull requirement lost after twin insertion");
    for (int& id : cur.ids) id = ids[id];
    return cur;
}

/// Connected graphs: root block first, children glued in by one-point
/// amalgams along the block tree. Tries each required-hull vertex as the
/// root until the whole requirement set survives on the final hull.
inline LabeledRep construct_connected(const Graph& g, const std::vector<int>& ids,
                                      std::vector<int> need_hull_local) {
    std::vector<int> roots = need_hull_local;
    if (roots.empty()) roots.push_back(0);
    std::string last_err;
    for (int root : roots) {
        try {
            BlockTree bt = block_decomposition(g, root);
            std::vector<int> order{bt.root_block};
            for (size_t qi = 0; qi < order.size(); ++qi)
                for (auto [c, cut] : bt.children[order[qi]]) order.push_back(c);
            LabeledRep acc;
            for (size_t qi = 0; qi < order.size(); ++qi) {
                int b = order[qi];
                const auto& blk = bt.blocks[b];
                std::vector<int> bids;
                for (int v : blk.vertices) bids.push_back(ids[v]);
                Graph bh = g.induced(blk.vertices);
                auto pos_in_block = [&](int sv) {
                    return (int)(std::find(blk.vertices.begin(), blk.vertices.end(), sv) -
                                 blk.vertices.begin());
                };
                std::vector<int> hull_req;
                if (qi == 0) {
                    // any required vertices living in the root block anchor it
                    for (int r : need_hull_local)
                        if (std::find(blk.vertices.begin(), blk.vertices.end(), r) !=
                            blk.vertices.end())
                            hull_req.push_back(pos_in_block(r));
                    if (hull_req.empty()) hull_req.push_back(pos_in_block(root));
                    acc = construct_block(bh, bids, hull_req);
                } else {
                    int cut = bt.parent_cut[b];
                    hull_req.push_back(pos_in_block(cut));
                    LabeledRep child = construct_block(bh, bids, hull_req);
                    std::vector<int> keep;
                    for (int r : need_hull_local)
                        for (int idg : acc.ids)
                            if (idg == ids[r]) keep.push_back(ids[r]);
                    acc = identify_vertices(acc, ids[cut], child, ids[cut], g, keep, /*check_inputs=*/false);
                }
            }
            bool ok = true;
            for (int r : need_hull_local) ok = ok && acc.er.on_hull(acc.local_of(ids[r]));
            if (ok) return acc;
            last_err = "hull requirement not met";
        } catch (const std::exception& e) {
            last_err = e.what();
        }
    }
    throw std::logic_error("construct_connected: " + (last_err.empty() ? "no roots" : last_err));
}

// ---------------------------------------------------------------------------
// full pipelines

/// Outside-obstacle representation of any graph of circumference at most 6:
/// components are merged pairwise, each component is composed block by block
/// along its block tree, and each block comes from the catalog with its cut
/// vertex on the hull.
inline LabeledRep construct_circumference_le6(const Graph& g, int root = 0) {
    if (g.n == 0) throw std::invalid_argument("empty graph");
    if (circumference(g) > 6) throw std::invalid_argument("circumference exceeds 6");
    auto comps = g.components();

    std::optional<LabeledRep> acc;
    // the root's component goes first and stays leftmost so the root keeps
    // its place on the union hull
    std::vector<std::vector<int>> ordered;
    for (auto& c : comps)
        if (std::find(c.begin(), c.end(), root) != c.end()) ordered.push_back(c);
    for (auto& c : comps)
        if (std::find(c.begin(), c.end(), root) == c.end()) ordered.push_back(c);
    for (auto& c : ordered) {
        int comp_root = std::find(c.begin(), c.end(), root) != c.end() ? root : c[0];
        Graph sub = g.induced(c);
        int local_root = (int)(std::find(c.begin(), c.end(), comp_root) - c.begin());
        LabeledRep r = construct_connected(sub, c, {local_root});
        if (!acc) {
            acc = std::move(r);
        } else {
            acc = merge_disjoint(*acc, r, g, root, /*check_inputs=*/false);
        }
    }
    if (!acc->er.on_hull(acc->local_of(root)))
        throw std::logic_error("construct_circumference_le6: root not on hull");
    return *acc;
}

/// Outside-obstacle representation of any graph on at most 7 vertices. Graphs
/// of circumference at most 6 go through the block pipeline; the rest contain
/// a spanning 7-cycle and are matched against the 7-cycle catalog under every
/// dihedral labeling of every such cycle.
inline LabeledRep construct_7_vertex(const Graph& g) {
    if (g.n > 7) throw std::invalid_argument("construct_7_vertex: more than 7 vertices");
    if (circumference(g) <= 6) return construct_circumference_le6(g, 0);

    std::vector<int> ids(g.n);
    std::iota(ids.begin(), ids.end(), 0);
    for (const CatalogEntry& e : builtin_catalog()) {
        if (e.n != 7 || e.cycle.size() != 7) continue;
        auto got = match_entry(e, g, ids, {});
        if (got) return *got;
    }
    throw std::logic_error("construct_7_vertex: no 7-cycle catalog entry matched");
}

}  // namespace visobs

#endif
