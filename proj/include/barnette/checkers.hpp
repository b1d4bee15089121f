#pragma once
// Structural predicates and certificates: cubicity, bipartiteness with an
// odd-walk witness, exhaustive small-k vertex connectivity, face inventories,
// edge cuts and their essential/major classification.
#include <array>
#include <cmath>
#include <functional>

#include "barnette/embedding.hpp"
#include "barnette/graph.hpp"

namespace barnette {

inline bool is_cubic(const graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

struct bipartition_outcome {
    std::optional<bipartition_t> coloring;
    std::vector<int> odd_walk;  // closed walk of odd length when no coloring exists
};

inline bipartition_outcome bipartition(const graph& g) {
    int n = g.vertex_count();
    std::vector<char> color(n, 2);
    std::vector<int> parent(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != 2) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : g.incident(v)) {
                const auto& r = g.edge(e);
                int w = r.other(v);
                if (r.is_loop() || (color[w] != 2 && color[w] == color[v])) {
                    // Odd closed walk: v up to the LCA, down to w, close on vw.
                    bipartition_outcome out;
                    if (r.is_loop()) {
                        out.odd_walk = {v, v};
                        return out;
                    }
                    std::vector<int> up_v{v}, up_w{w};
                    for (int x = v; parent[x] != -1; x = parent[x]) up_v.push_back(parent[x]);
                    for (int x = w; parent[x] != -1; x = parent[x]) up_w.push_back(parent[x]);
                    while (up_v.size() >= 2 && up_w.size() >= 2 &&
                           up_v[up_v.size() - 1] == up_w[up_w.size() - 1] &&
                           up_v[up_v.size() - 2] == up_w[up_w.size() - 2]) {
                        up_v.pop_back();
                        up_w.pop_back();
                    }
                    std::vector<int> walk = up_v;  // v .. lca
                    for (std::size_t i = up_w.size() - 1; i >= 1; --i)
                        walk.push_back(up_w[i - 1]);  // .. down to w
                    walk.push_back(v);
                    out.odd_walk = std::move(walk);
                    return out;
                }
                if (color[w] == 2) {
                    color[w] = static_cast<char>(1 - color[v]);
                    parent[w] = v;
                    q.push(w);
                }
            }
        }
    }
    bipartition_outcome out;
    out.coloring = bipartition_t{std::move(color)};
    return out;
}

namespace detail {

inline bool connected_after_deleting(const graph& g, const std::vector<int>& removed) {
    int n = g.vertex_count();
    std::vector<char> dead(n, 0);
    for (int v : removed) dead[v] = 1;
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (!dead[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive == 0) return true;
    std::vector<int> stack{start};
    std::vector<char> seen(n, 0);
    seen[start] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.incident(v)) {
            int w = g.edge(e).other(v);
            if (!dead[w] && !seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
        }
    }
    return cnt == alive;
}

}  // namespace detail

struct connectivity_verdict {
    bool at_least;
    std::vector<int> separator;  // witness when at_least is false (may be empty)
};

// Exhaustive over all vertex subsets of size < k; k in 1..4 at desk scale.
inline connectivity_verdict vertex_connectivity_at_least(const graph& g, int k) {
    if (k < 1 || k > 4) throw std::invalid_argument("vertex_connectivity_at_least: k must be 1..4");
    int n = g.vertex_count();
    if (n <= k) return {false, {}};
    std::vector<int> subset;
    std::function<std::optional<std::vector<int>>(int, int)> search =
        [&](int next, int want) -> std::optional<std::vector<int>> {
        if (static_cast<int>(subset.size()) == want) {
            if (!detail::connected_after_deleting(g, subset)) return subset;
            return std::nullopt;
        }
        for (int v = next; v < n; ++v) {
            subset.push_back(v);
            if (auto r = search(v + 1, want)) return r;
            subset.pop_back();
        }
        return std::nullopt;
    };
    for (int size = 0; size < k; ++size) {
        subset.clear();
        if (auto sep = search(0, size)) return {false, *sep};
    }
    return {true, {}};
}

struct face_inventory {
    std::vector<std::vector<int>> faces;  // cyclic edge id sequences
    std::vector<std::vector<int>> face_darts;
    std::map<int, int> size_histogram;
};

inline face_inventory faces(const graph& g, const embedding& emb) {
    auto fl = trace_faces(g, emb);
    face_inventory inv;
    inv.face_darts = fl.faces;
    inv.size_histogram = fl.size_histogram;
    for (const auto& f : fl.faces) {
        std::vector<int> edges;
        for (int d : f) edges.push_back(dart_edge(d));
        inv.faces.push_back(std::move(edges));
    }
    return inv;
}

enum class cut_class { plain, essential_4, major_4, none };

struct cut_report {
    enum class kind_t { vertex_cut, edge_cut } kind;
    std::vector<int> members;             // vertex ids or edge ids
    std::array<std::vector<int>, 2> sides;
    cut_class classification = cut_class::none;
};

namespace detail {

// Components of g after removing the given edges; empty result when the
// removal does not split into exactly two parts of >= 2 vertices each.
inline std::optional<std::array<std::vector<int>, 2>> two_sides(const graph& g,
                                                                const std::vector<int>& cut) {
    std::vector<char> cut_edge(g.edge_count(), 0);
    for (int e : cut) cut_edge[e] = 1;
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        if (ncomp == 2) return std::nullopt;  // more than two parts
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.incident(v)) {
                if (cut_edge[e]) continue;
                int w = g.edge(e).other(v);
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    if (ncomp != 2) return std::nullopt;
    // Every cut edge must actually cross.
    for (int e : cut)
        if (comp[g.edge(e).u] == comp[g.edge(e).v]) return std::nullopt;
    std::array<std::vector<int>, 2> sides;
    for (int v = 0; v < n; ++v) sides[comp[v]].push_back(v);
    if (sides[0].size() < 2 || sides[1].size() < 2) return std::nullopt;
    return sides;
}

}  // namespace detail

// Exhaustive over edge triples; both sides must have >= 2 vertices.
inline std::optional<cut_report> find_edge_3cut(const graph& g) {
    int m = g.edge_count();
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                auto sides = detail::two_sides(g, {a, b, c});
                if (!sides) continue;
                cut_report r;
                r.kind = cut_report::kind_t::edge_cut;
                r.members = {a, b, c};
                r.sides = *sides;
                r.classification = cut_class::plain;
                return r;
            }
    return std::nullopt;
}

namespace detail {

// Is `side` exactly the vertex set of a quadrilateral face of emb?
inline bool side_is_4face(const graph& g, const embedding& emb, const std::vector<int>& side) {
    if (side.size() != 4) return false;
    std::set<int> sv(side.begin(), side.end());
    auto fl = trace_faces(g, emb);
    for (const auto& f : fl.faces) {
        if (f.size() != 4) continue;
        std::set<int> fv;
        for (int d : f) fv.insert(dart_tail(g, d));
        if (fv == sv) return true;
    }
    return false;
}

// Ladder detection for R1 (2x3) and R2 (2x4): the side subgraph, anchored at
// the four cut-edge endpoints, must be isomorphic to the fixed pattern with
// anchors at the ladder corners.
inline bool side_is_ladder(const graph& g, const std::vector<int>& side,
                           const std::vector<int>& cut, int cols) {
    int k = 2 * cols;
    if (static_cast<int>(side.size()) != k) return false;
    std::set<int> sv(side.begin(), side.end());
    std::vector<int> anchors;
    for (int e : cut) {
        int u = g.edge(e).u, v = g.edge(e).v;
        anchors.push_back(sv.count(u) ? u : v);
    }
    std::set<int> anchor_set(anchors.begin(), anchors.end());
    if (anchor_set.size() != 4) return false;

    std::map<int, int> idx;
    for (int v : side) idx.insert({v, static_cast<int>(idx.size())});
    std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
    for (const auto& r : g.edges())
        if (sv.count(r.u) && sv.count(r.v)) adj[idx[r.u]][idx[r.v]] = adj[idx[r.v]][idx[r.u]] = 1;

    // Pattern: vertices (row, col) = row*cols + col; corners are the anchors.
    auto pat_adj = [&](int x, int y) {
        int rx = x / cols, cx = x % cols, ry = y / cols, cy = y % cols;
        return (rx == ry && std::abs(cx - cy) == 1) || (cx == cy && rx != ry);
    };
    std::vector<char> pat_anchor(k, 0);
    for (int row : {0, 1})
        for (int col : {0, cols - 1}) pat_anchor[row * cols + col] = 1;
    std::vector<char> side_anchor(k, 0);
    for (int a : anchor_set) side_anchor[idx[a]] = 1;

    std::vector<int> map(k, -1);
    std::vector<char> used(k, 0);
    std::function<bool(int)> go = [&](int i) -> bool {
        if (i == k) return true;
        for (int j = 0; j < k; ++j) {
            if (used[j] || pat_anchor[i] != side_anchor[j]) continue;
            bool ok = true;
            for (int p = 0; p < i && ok; ++p)
                if (pat_adj(i, p) != (adj[j][map[p]] != 0)) ok = false;
            if (!ok) continue;
            used[j] = 1;
            map[i] = j;
            if (go(i + 1)) return true;
            used[j] = 0;
        }
        return false;
    };
    return go(0);
}

}  // namespace detail

// Every 4-edge cut with both sides >= 2 vertices, classified: plain when a
// side is a 4-face, essential otherwise, major when additionally no side is
// R1 or R2. The four cut edges must be pairwise vertex-disjoint: that is how
// the ladder patterns anchor, and it keeps the cube free of essential cuts
// (a cut reusing an endpoint always isolates a single edge or path).
inline std::vector<cut_report> classify_4cuts(const graph& g, const embedding& emb) {
    std::vector<cut_report> out;
    int m = g.edge_count();
    auto disjoint = [&](int x, int y) {
        const auto &rx = g.edge(x), &ry = g.edge(y);
        return rx.u != ry.u && rx.u != ry.v && rx.v != ry.u && rx.v != ry.v;
    };
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            if (!disjoint(a, b)) continue;
            for (int c = b + 1; c < m; ++c) {
                if (!disjoint(a, c) || !disjoint(b, c)) continue;
                for (int d = c + 1; d < m; ++d) {
                    if (!disjoint(a, d) || !disjoint(b, d) || !disjoint(c, d)) continue;
                    std::vector<int> cut{a, b, c, d};
                    auto sides = detail::two_sides(g, cut);
                    if (!sides) continue;
                    cut_report r;
                    r.kind = cut_report::kind_t::edge_cut;
                    r.members = cut;
                    r.sides = *sides;
                    bool face_side = detail::side_is_4face(g, emb, (*sides)[0]) ||
                                     detail::side_is_4face(g, emb, (*sides)[1]);
                    if (face_side) {
                        r.classification = cut_class::plain;
                    } else {
                        bool ladder = false;
                        for (const auto& side : *sides)
                            for (int cols : {3, 4})
                                if (detail::side_is_ladder(g, side, cut, cols)) ladder = true;
                        r.classification = ladder ? cut_class::essential_4 : cut_class::major_4;
                    }
                    out.push_back(std::move(r));
                }
            }
        }
    return out;
}

// No edge cut of size <= 3 separates two cycle-containing parts.
inline bool cyclically_4_edge_connected(const graph& g) {
    int m = g.edge_count();
    auto has_two_cyclic_parts = [&](const std::vector<int>& cut) {
        std::vector<char> cut_edge(g.edge_count(), 0);
        for (int e : cut) cut_edge[e] = 1;
        int n = g.vertex_count();
        std::vector<int> comp(n, -1);
        int ncomp = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[s] != -1) continue;
            std::vector<int> stack{s};
            comp[s] = ncomp;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int e : g.incident(v)) {
                    if (cut_edge[e]) continue;
                    int w = g.edge(e).other(v);
                    if (comp[w] == -1) {
                        comp[w] = ncomp;
                        stack.push_back(w);
                    }
                }
            }
            ++ncomp;
        }
        if (ncomp < 2) return false;
        std::vector<int> verts(ncomp, 0), edges(ncomp, 0);
        for (int v = 0; v < n; ++v) ++verts[comp[v]];
        for (int e = 0; e < g.edge_count(); ++e)
            if (!cut_edge[e] && comp[g.edge(e).u] == comp[g.edge(e).v]) ++edges[comp[g.edge(e).u]];
        int cyclic = 0;
        for (int c = 0; c < ncomp; ++c)
            if (edges[c] >= verts[c]) ++cyclic;  // a component with |E| >= |V| contains a cycle
        return cyclic >= 2;
    };
    for (int a = 0; a < m; ++a) {
        if (has_two_cyclic_parts({a})) return false;
        for (int b = a + 1; b < m; ++b) {
            if (has_two_cyclic_parts({a, b})) return false;
            for (int c = b + 1; c < m; ++c)
                if (has_two_cyclic_parts({a, b, c})) return false;
        }
    }
    return true;
}

// The four defining checks of the enumeration's object of study.
struct c3cbp_verdict {
    bool simple = false, cubic = false, bipartite = false, three_connected = false, planar = false;
    bool ok() const { return simple && cubic && bipartite && three_connected && planar; }
};

inline c3cbp_verdict check_c3cbp(const graph& g) {
    c3cbp_verdict v;
    v.simple = g.is_simple();
    v.cubic = is_cubic(g);
    if (!v.simple || !v.cubic) return v;
    v.bipartite = bipartition(g).coloring.has_value();
    if (!g.is_connected()) return v;
    v.three_connected = vertex_connectivity_at_least(g, 3).at_least;
    v.planar = std::holds_alternative<embedding>(is_planar(g));
    return v;
}

// Separation at a 3-cut: each side keeps its vertices and gains one new
// vertex adjacent to its three cut endpoints.
inline std::pair<graph, graph> split_at_3cut(const graph& g, const std::vector<int>& cut) {
    if (cut.size() != 3) throw std::invalid_argument("split_at_3cut: need exactly 3 edges");
    auto sides = detail::two_sides(g, cut);
    if (!sides) throw std::invalid_argument("split_at_3cut: edges are not a 3-cut");
    std::array<graph, 2> parts;
    for (int s = 0; s < 2; ++s) {
        const auto& side = (*sides)[s];
        std::map<int, int> idx;
        for (int v : side) idx.insert({v, static_cast<int>(idx.size())});
        graph part(static_cast<int>(side.size()) + 1);
        int apex = static_cast<int>(side.size());
        std::set<int> in_cut(cut.begin(), cut.end());
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& r = g.edge(e);
            if (in_cut.count(e)) continue;
            if (idx.count(r.u) && idx.count(r.v)) part.add_edge(idx[r.u], idx[r.v]);
        }
        for (int e : cut) {
            const auto& r = g.edge(e);
            int inside = idx.count(r.u) ? r.u : r.v;
            part.add_edge(idx[inside], apex);
        }
        parts[s] = std::move(part);
    }
    return {parts[0], parts[1]};
}

}  // namespace barnette
