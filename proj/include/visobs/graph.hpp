#ifndef VISOBS_GRAPH_HPP
#define VISOBS_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace visobs {

/// Finite simple graph on vertices 0..n-1, adjacency as bitmasks (n <= 64).
struct Graph {
    int n = 0;
    std::vector<uint64_t> adj;
    std::vector<std::string> labels;  // optional vertex names

    Graph() = default;
    explicit Graph(int nv) : n(nv), adj(nv, 0) {
        if (nv < 0 || nv > 64) throw std::invalid_argument("graph order out of range");
    }

    bool has_edge(int u, int v) const { return u != v && (adj[u] >> v) & 1; }
    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("loop edge");
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        adj[u] |= uint64_t(1) << v;
        adj[v] |= uint64_t(1) << u;
    }
    void remove_edge(int u, int v) {
        adj[u] &= ~(uint64_t(1) << v);
        adj[v] &= ~(uint64_t(1) << u);
    }
    int degree(int u) const { return __builtin_popcountll(adj[u]); }
    uint64_t neighbors(int u) const { return adj[u]; }

    int edge_count() const {
        int m = 0;
        for (int u = 0; u < n; ++u) m += degree(u);
        return m / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (has_edge(u, v)) e.emplace_back(u, v);
        return e;
    }
    std::vector<std::pair<int, int>> non_edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!has_edge(u, v)) e.emplace_back(u, v);
        return e;
    }

    bool is_clique(const std::vector<int>& vs) const {
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (!has_edge(vs[i], vs[j])) return false;
        return true;
    }

    Graph induced(const std::vector<int>& vs) const {
        Graph g((int)vs.size());
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (has_edge(vs[i], vs[j])) g.add_edge((int)i, (int)j);
        return g;
    }

    Graph relabeled(const std::vector<int>& perm) const {  // perm[old] = new
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (has_edge(u, v)) g.add_edge(perm[u], perm[v]);
        return g;
    }

    bool connected() const {
        if (n == 0) return true;
        uint64_t seen = 1, frontier = 1;
        while (frontier) {
            uint64_t next = 0;
            for (int u = 0; u < n; ++u)
                if ((frontier >> u) & 1) next |= adj[u];
            frontier = next & ~seen;
            seen |= next;
        }
        return __builtin_popcountll(seen) == n;
    }

    std::vector<std::vector<int>> components() const {
        std::vector<int> comp(n, -1);
        std::vector<std::vector<int>> out;
        for (int s = 0; s < n; ++s) {
            if (comp[s] >= 0) continue;
            int id = (int)out.size();
            out.emplace_back();
            std::vector<int> stack{s};
            comp[s] = id;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                out[id].push_back(u);
                for (int v = 0; v < n; ++v)
                    if (has_edge(u, v) && comp[v] < 0) {
                        comp[v] = id;
                        stack.push_back(v);
                    }
            }
            std::sort(out[id].begin(), out[id].end());
        }
        return out;
    }

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

// ---------------------------------------------------------------------------
// circumference and cycle search (exact, exponential; intended for n <= ~16)

namespace detail {
inline void longest_cycle_dfs(const Graph& g, int start, int u, uint64_t used,
                              std::vector<int>& path, int& best, std::vector<int>& best_cycle) {
    for (int v = 0; v < g.n; ++v) {
        if (!g.has_edge(u, v)) continue;
        if (v == start && path.size() >= 3) {
            if ((int)path.size() > best) {
                best = (int)path.size();
                best_cycle = path;
            }
            continue;
        }
        if ((used >> v) & 1) continue;
        if (v < start) continue;  // cycles are rooted at their minimum vertex
        path.push_back(v);
        longest_cycle_dfs(g, start, v, used | (uint64_t(1) << v), path, best, best_cycle);
        path.pop_back();
    }
}
}  // namespace detail

/// Longest simple cycle, with a witness. Length 0 when the graph is acyclic.
inline std::pair<int, std::vector<int>> longest_cycle(const Graph& g) {
    int best = 0;
    std::vector<int> best_cycle;
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> path{s};
        detail::longest_cycle_dfs(g, s, s, uint64_t(1) << s, path, best, best_cycle);
    }
    return {best, best_cycle};
}

inline int circumference(const Graph& g) { return longest_cycle(g).first; }

/// All simple cycles of the given length, as vertex sequences starting at
/// their minimal vertex, up to rotation/reflection (each cycle listed once).
inline std::vector<std::vector<int>> cycles_of_length(const Graph& g, int k) {
    std::vector<std::vector<int>> out;
    struct Rec {
        const Graph& g;
        int k;
        std::vector<std::vector<int>>& out;
        void dfs(int start, int u, uint64_t used, std::vector<int>& path) {
            if ((int)path.size() == k) {
                if (g.has_edge(u, start) && path[1] < path.back()) out.push_back(path);
                return;
            }
            for (int v = start + 1; v < g.n; ++v) {
                if (!g.has_edge(u, v) || ((used >> v) & 1)) continue;
                path.push_back(v);
                dfs(start, v, used | (uint64_t(1) << v), path);
                path.pop_back();
            }
        }
    } rec{g, k, out};
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> path{s};
        rec.dfs(s, s, uint64_t(1) << s, path);
    }
    return out;
}

// ---------------------------------------------------------------------------
// twins

/// Non-adjacent twin classes. For u != v non-adjacent, the twin condition
/// N(v)\{u} = N(u)\{v} collapses to N(u) = N(v), so classes are groups of
/// identical neighborhoods and are automatically pairwise non-adjacent.
inline std::vector<std::vector<int>> find_twins(const Graph& g) {
    std::map<uint64_t, std::vector<int>> groups;
    for (int u = 0; u < g.n; ++u) groups[g.adj[u]].push_back(u);
    std::vector<std::vector<int>> classes;
    std::vector<bool> placed(g.n, false);
    for (int u = 0; u < g.n; ++u) {
        if (placed[u]) continue;
        auto& grp = groups[g.adj[u]];
        for (int v : grp) placed[v] = true;
        classes.push_back(grp);
    }
    return classes;
}

// ---------------------------------------------------------------------------
// block decomposition (biconnected components)

struct BlockTree {
    struct Block {
        std::vector<int> vertices;               // sorted
        std::vector<std::pair<int, int>> edges;  // edges of this block
    };
    std::vector<Block> blocks;
    std::vector<int> cut_vertices;
    int root_block = 0;
    /// children[b] = list of (child block, shared cut vertex)
    std::vector<std::vector<std::pair<int, int>>> children;
    std::vector<int> parent_cut;  // cut vertex shared with parent, -1 for root
};

/// Standard lowpoint block decomposition; the tree is rooted at the block
/// containing `root`. Disconnected input throws (split components first).
inline BlockTree block_decomposition(const Graph& g, int root = 0) {
    if (!g.connected()) throw std::invalid_argument("block decomposition of disconnected graph");
    BlockTree bt;
    if (g.n == 0) return bt;
    if (g.n == 1) {
        bt.blocks.push_back({{0}, {}});
        bt.children.resize(1);
        bt.parent_cut = {-1};
        return bt;
    }
    std::vector<int> num(g.n, -1), low(g.n, 0), parent(g.n, -1);
    std::vector<std::pair<int, int>> estack;
    std::vector<bool> is_cut(g.n, false);
    int timer = 0;

    struct Frame {
        int u, v;  // exploring neighbour v of u
    };
    // iterative DFS to avoid deep recursion
    std::vector<Frame> stack;
    num[root] = low[root] = timer++;
    stack.push_back({root, 0});
    int root_children = 0;
    while (!stack.empty()) {
        auto& f = stack.back();
        int u = f.u;
        if (f.v < g.n) {
            int v = f.v++;
            if (!g.has_edge(u, v) || v == parent[u]) continue;
            if (num[v] == -1) {
                estack.emplace_back(u, v);
                parent[v] = u;
                num[v] = low[v] = timer++;
                if (u == root) ++root_children;
                stack.push_back({v, 0});
            } else if (num[v] < num[u]) {
                estack.emplace_back(u, v);
                low[u] = std::min(low[u], num[v]);
            }
        } else {
            stack.pop_back();
            if (stack.empty()) break;
            int p = parent[u];
            low[p] = std::min(low[p], low[u]);
            if (low[u] >= num[p]) {
                if (p != root || root_children > 1) is_cut[p] = true;
                BlockTree::Block blk;
                std::vector<int> vs;
                while (true) {
                    auto e = estack.back();
                    estack.pop_back();
                    blk.edges.push_back(e);
                    vs.push_back(e.first);
                    vs.push_back(e.second);
                    if (e == std::make_pair(p, u)) break;
                }
                std::sort(vs.begin(), vs.end());
                vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
                blk.vertices = vs;
                bt.blocks.push_back(std::move(blk));
            }
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (is_cut[v]) bt.cut_vertices.push_back(v);

    // root the tree at the block containing `root`
    int nb = (int)bt.blocks.size();
    bt.children.assign(nb, {});
    bt.parent_cut.assign(nb, -1);
    std::map<int, std::vector<int>> blocks_of_vertex;
    for (int b = 0; b < nb; ++b)
        for (int v : bt.blocks[b].vertices) blocks_of_vertex[v].push_back(b);
    int rootb = -1;
    for (int b = 0; b < nb; ++b)
        if (std::binary_search(bt.blocks[b].vertices.begin(), bt.blocks[b].vertices.end(), root))
            rootb = b;
    bt.root_block = rootb;
    std::vector<bool> seen(nb, false);
    std::vector<int> order{rootb};
    seen[rootb] = true;
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int b = order[qi];
        for (int v : bt.blocks[b].vertices) {
            if (!is_cut[v] && !(v == root && qi == 0)) continue;
            for (int c : blocks_of_vertex[v]) {
                if (seen[c]) continue;
                seen[c] = true;
                bt.children[b].emplace_back(c, v);
                bt.parent_cut[c] = v;
                order.push_back(c);
            }
        }
    }
    return bt;
}

// ---------------------------------------------------------------------------
// named graphs

struct K6StarEmbedding {
    int z[3];   // in clique Z
    int zp[3];  // matched partners in Z', z[i]-zp[i] is the missing matching
};

namespace named {

/// Complete graph minus a perfect matching on 2m vertices; vertex i in the
/// first half is matched (non-adjacent) with i+m in the second half.
inline Graph complete_minus_matching(int m) {
    Graph g(2 * m);
    for (int u = 0; u < 2 * m; ++u)
        for (int v = u + 1; v < 2 * m; ++v)
            if (v != u + m) g.add_edge(u, v);
    return g;
}

inline Graph k6star() {
    Graph g = complete_minus_matching(3);
    g.labels = {"z1", "z2", "z3", "z1'", "z2'", "z3'"};
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph cycle(int k) {
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

/// The 8-vertex co-bipartite graph with cliques {v1..v4}, {v5..v8} whose
/// non-edge set is exactly {v1v6, v2v5, v3v7, v4v5, v4v6, v4v7, v8v1, v8v2,
/// v8v3} (vertices 0-indexed in code).
inline Graph b8() {
    Graph g = complete(8);
    const int ne[9][2] = {{1, 6}, {2, 5}, {3, 7}, {4, 5}, {4, 6}, {4, 7}, {8, 1}, {8, 2}, {8, 3}};
    for (auto& e : ne) g.remove_edge(e[0] - 1, e[1] - 1);
    g.labels = {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"};
    return g;
}
inline std::vector<int> b8_cliqueZ() { return {0, 1, 2, 3}; }
inline std::vector<int> b8_cliqueZp() { return {4, 5, 6, 7}; }

/// K*_10 (z1..z5, z1'..z5') plus an apex v adjacent to z1..z5.
inline Graph b11() {
    Graph g = complete_minus_matching(5);
    Graph h(11);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (int i = 0; i < 5; ++i) h.add_edge(10, i);
    h.labels = {"z1", "z2", "z3", "z4", "z5", "z1'", "z2'", "z3'", "z4'", "z5'", "v"};
    return h;
}
inline std::vector<int> b11_cliqueZ() { return {0, 1, 2, 3, 4, 10}; }
inline std::vector<int> b11_cliqueZp() { return {5, 6, 7, 8, 9}; }

}  // namespace named

// ---------------------------------------------------------------------------
// induced structures across two cliques

/// All labeled K*_6 embeddings with the triple z in cliqueZ, partners in
/// cliqueZp and the missing matching z[i]-zp[i]; z is listed increasing.
inline std::vector<K6StarEmbedding> find_induced_k6star(const Graph& g, const std::vector<int>& cliqueZ,
                                                        const std::vector<int>& cliqueZp) {
    if (!g.is_clique(cliqueZ) || !g.is_clique(cliqueZp))
        throw std::invalid_argument("find_induced_k6star: inputs must be cliques");
    std::vector<K6StarEmbedding> out;
    size_t nz = cliqueZ.size(), np = cliqueZp.size();
    for (size_t i = 0; i < nz; ++i)
        for (size_t j = i + 1; j < nz; ++j)
            for (size_t k = j + 1; k < nz; ++k) {
                int z[3] = {cliqueZ[i], cliqueZ[j], cliqueZ[k]};
                // choose an ordered partner triple
                std::vector<int> cand;
                for (size_t a = 0; a < np; ++a) cand.push_back(cliqueZp[a]);
                for (int p0 : cand)
                    for (int p1 : cand)
                        for (int p2 : cand) {
                            if (p0 == p1 || p0 == p2 || p1 == p2) continue;
                            int zp[3] = {p0, p1, p2};
                            bool ok = true;
                            for (int a = 0; a < 3 && ok; ++a)
                                for (int b = 0; b < 3 && ok; ++b) {
                                    bool edge = g.has_edge(z[a], zp[b]);
                                    if (a == b ? edge : !edge) ok = false;
                                }
                            if (ok) out.push_back({{z[0], z[1], z[2]}, {zp[0], zp[1], zp[2]}});
                        }
            }
    return out;
}

struct Cross4Cycle {
    // induced 4-cycle z1 z1' z2' z2 with z1,z2 in Z and z1',z2' in Z';
    // edges z1-z1p and z2-z2p, non-edges z1-z2p and z2-z1p.
    int z1, z2, z1p, z2p;
};

inline std::vector<Cross4Cycle> find_induced_4cycles_across(const Graph& g, const std::vector<int>& cliqueZ,
                                                            const std::vector<int>& cliqueZp) {
    if (!g.is_clique(cliqueZ) || !g.is_clique(cliqueZp))
        throw std::invalid_argument("find_induced_4cycles_across: inputs must be cliques");
    std::vector<Cross4Cycle> out;
    for (size_t i = 0; i < cliqueZ.size(); ++i)
        for (size_t j = i + 1; j < cliqueZ.size(); ++j)
            for (size_t a = 0; a < cliqueZp.size(); ++a)
                for (size_t b = 0; b < cliqueZp.size(); ++b) {
                    if (a == b) continue;
                    int z1 = cliqueZ[i], z2 = cliqueZ[j], z1p = cliqueZp[a], z2p = cliqueZp[b];
                    if (g.has_edge(z1, z1p) && g.has_edge(z2, z2p) && !g.has_edge(z1, z2p) &&
                        !g.has_edge(z2, z1p))
                        out.push_back({z1, z2, z1p, z2p});
                }
    return out;
}

// ---------------------------------------------------------------------------
// graph6 encoding (standard format, n <= 62)

inline std::string to_graph6(const Graph& g) {
    if (g.n > 62) throw std::invalid_argument("graph6 writer limited to n <= 62");
    std::string s;
    s.push_back(char(g.n + 63));
    int bit = 0, cur = 0;
    for (int v = 1; v < g.n; ++v)
        for (int u = 0; u < v; ++u) {
            cur = (cur << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bit == 6) {
                s.push_back(char(cur + 63));
                bit = cur = 0;
            }
        }
    if (bit) s.push_back(char((cur << (6 - bit)) + 63));
    return s;
}

inline Graph from_graph6(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty graph6 line");
    size_t pos = 0;
    if (s[0] == ':' || s[0] == '&') throw std::invalid_argument("unsupported graph6 variant");
    int n = s[pos++] - 63;
    if (n < 0 || n > 62) throw std::invalid_argument("graph6 order out of supported range");
    Graph g(n);
    int bit = 0;
    int cur = 0;
    int have = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (have == 0) {
                if (pos >= s.size()) throw std::invalid_argument("truncated graph6 line");
                cur = s[pos++] - 63;
                if (cur < 0 || cur > 63) throw std::invalid_argument("bad graph6 byte");
                have = 6;
            }
            if ((cur >> (have - 1)) & 1) g.add_edge(u, v);
            --have;
            ++bit;
        }
    return g;
}

// ---------------------------------------------------------------------------
// canonical forms and exhaustive enumeration of small graphs

/// Canonical edge bitmask: minimum over all vertex permutations. Exact but
/// factorial; fine for n <= 8.
inline uint64_t canonical_code(const Graph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t(0);
    do {
        uint64_t code = 0;
        int bit = 0;
        bool prune = false;
        for (int v = 1; v < g.n && !prune; ++v)
            for (int u = 0; u < v; ++u) {
                code = (code << 1) | (g.has_edge(perm[u], perm[v]) ? 1 : 0);
                ++bit;
            }
        code <<= (g.n * (g.n - 1) / 2 - bit);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

/// All non-isomorphic graphs on exactly n vertices (n <= 8), by augmenting
/// the catalog for n-1 with every neighborhood of a new vertex.
inline std::vector<Graph> enumerate_nonisomorphic(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("enumeration supported for 1 <= n <= 8");
    std::vector<Graph> cur{Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::map<uint64_t, Graph> next;
        for (const Graph& g : cur) {
            for (uint64_t nb = 0; nb < (uint64_t(1) << (k - 1)); ++nb) {
                Graph h(k);
                for (int u = 0; u < k - 1; ++u)
                    for (int v = u + 1; v < k - 1; ++v)
                        if (g.has_edge(u, v)) h.add_edge(u, v);
                for (int u = 0; u < k - 1; ++u)
                    if ((nb >> u) & 1) h.add_edge(u, k - 1);
                uint64_t code = canonical_code(h);
                next.emplace(code, std::move(h));
            }
        }
        cur.clear();
        for (auto& [code, g] : next) cur.push_back(std::move(g));
    }
    return cur;
}

}  // namespace visobs

#endif
