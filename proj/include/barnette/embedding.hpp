#pragma once
// Combinatorial embeddings as rotation systems over darts, face tracing with
// the Euler certificate, a Demoucron-style planarity test that yields either
// an embedding or a K5/K33 subdivision witness, and the minimal embedding
// walk code used as the canonical key on 3-connected planar graphs.
//
// Darts: edge e yields darts 2e (u->v) and 2e+1 (v->u); rev(d) = d^1.
// Face successor: phi(d) = rotation successor of rev(d) at head(d).
#include <cassert>
#include <map>
#include <queue>
#include <set>
#include <variant>

#include "barnette/canonical.hpp"
#include "barnette/graph.hpp"

namespace barnette {

inline int dart_rev(int d) { return d ^ 1; }
inline int dart_edge(int d) { return d >> 1; }

inline int dart_tail(const graph& g, int d) {
    const auto& e = g.edge(d >> 1);
    return (d & 1) ? e.v : e.u;
}
inline int dart_head(const graph& g, int d) { return dart_tail(g, dart_rev(d)); }

struct embedding {
    std::vector<std::vector<int>> rot;  // rot[v]: darts with tail v, cyclic order

    bool valid_for(const graph& g) const {
        if (static_cast<int>(rot.size()) != g.vertex_count()) return false;
        std::vector<char> seen(2 * g.edge_count(), 0);
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int d : rot[v]) {
                if (d < 0 || d >= 2 * g.edge_count()) return false;
                if (dart_tail(g, d) != v) return false;
                if (seen[d]) return false;
                seen[d] = 1;
            }
        for (char s : seen)
            if (!s) return false;
        return true;
    }

    // phi(d); pos[d] = index of d in rot[tail(d)].
    std::vector<int> face_successor(const graph& g) const {
        std::vector<int> pos(2 * g.edge_count(), -1);
        for (const auto& r : rot)
            for (std::size_t i = 0; i < r.size(); ++i) pos[r[i]] = static_cast<int>(i);
        std::vector<int> phi(2 * g.edge_count(), -1);
        for (int d = 0; d < 2 * g.edge_count(); ++d) {
            int r = dart_rev(d);
            int v = dart_tail(g, r);
            const auto& ring = rot[v];
            phi[d] = ring[(pos[r] + 1) % ring.size()];
        }
        return phi;
    }
};

struct face_list {
    std::vector<std::vector<int>> faces;  // dart cycles
    std::map<int, int> size_histogram;    // face size -> count

    int count() const { return static_cast<int>(faces.size()); }
};

inline face_list trace_faces(const graph& g, const embedding& emb) {
    if (!emb.valid_for(g)) throw std::invalid_argument("trace_faces: invalid rotation system");
    face_list out;
    if (g.edge_count() == 0) {
        // Isolated vertices lie in one unbounded face.
        out.faces.push_back({});
        out.size_histogram[0] = 1;
        return out;
    }
    auto phi = emb.face_successor(g);
    std::vector<char> seen(2 * g.edge_count(), 0);
    for (int d0 = 0; d0 < 2 * g.edge_count(); ++d0) {
        if (seen[d0]) continue;
        std::vector<int> face;
        int d = d0;
        do {
            seen[d] = 1;
            face.push_back(d);
            d = phi[d];
        } while (d != d0);
        ++out.size_histogram[static_cast<int>(face.size())];
        out.faces.push_back(std::move(face));
    }
    return out;
}

// Genus-0 certificate for a connected graph.
inline bool euler_certificate(const graph& g, const embedding& emb) {
    if (!g.is_connected()) return false;
    auto fl = trace_faces(g, emb);
    return g.vertex_count() - g.edge_count() + fl.count() == 2;
}

struct kuratowski_witness {
    enum class kind_t { k5, k33 } kind;
    std::vector<int> branch_vertices;   // 5 or 6 vertices of g
    std::vector<int> subdivision_edges; // edge ids of g forming the subdivision
};

using planarity_result = std::variant<embedding, kuratowski_witness>;

namespace detail {

// Demoucron-Malgrange-Pertuiset on a simple 2-connected graph, given as a
// vertex list and edge list into the host graph. Faces are kept as oriented
// simple vertex cycles; on success they convert into one rotation system.
class dmp {
public:
    dmp(const graph& g, const std::vector<int>& block_edges) : g_(g), block_edges_(block_edges) {}

    // Returns false when the block is not planar. On success `rot` receives
    // the block's darts spliced into per-vertex rotations.
    bool run(std::vector<std::vector<int>>& rot) {
        for (int e : block_edges_) {
            verts_.insert(g_.edge(e).u);
            verts_.insert(g_.edge(e).v);
        }
        for (int e : block_edges_) edge_in_block_.insert(e);
        if (block_edges_.size() == 1) {
            int e = block_edges_[0];
            rot[g_.edge(e).u].push_back(2 * e);
            rot[g_.edge(e).v].push_back(2 * e + 1);
            return true;
        }
        auto cyc = find_cycle();
        assert(!cyc.empty());
        for (int v : cyc) embedded_vertex_.insert(v);
        for (std::size_t i = 0; i < cyc.size(); ++i)
            embedded_edge_.insert(edge_between(cyc[i], cyc[(i + 1) % cyc.size()]));
        faces_.push_back(cyc);
        std::reverse(cyc.begin(), cyc.end());
        faces_.push_back(cyc);

        while (embedded_edge_.size() < block_edges_.size()) {
            if (!embed_one_path()) return false;
        }
        return extract_rotations(rot);
    }

private:
    int edge_between(int u, int v) const {
        for (int e : g_.incident(u))
            if (edge_in_block_.count(e) && g_.edge(e).joins(u, v)) return e;
        throw std::logic_error("dmp: expected block edge missing");
    }

    std::vector<int> find_cycle() const {
        // BFS tree plus any non-tree block edge closes a fundamental cycle.
        std::map<int, int> parent;
        std::map<int, int> parent_edge;
        int root = *verts_.begin();
        parent[root] = root;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : g_.incident(v)) {
                if (!edge_in_block_.count(e)) continue;
                int w = g_.edge(e).other(v);
                if (!parent.count(w)) {
                    parent[w] = v;
                    parent_edge[w] = e;
                    q.push(w);
                }
            }
        }
        auto path_to_root = [&](int x) {
            std::vector<int> p{x};
            while (parent.at(x) != x) {
                x = parent.at(x);
                p.push_back(x);
            }
            return p;
        };
        for (int e : block_edges_) {
            int u = g_.edge(e).u, v = g_.edge(e).v;
            bool tree = (parent_edge.count(u) && parent_edge.at(u) == e) ||
                        (parent_edge.count(v) && parent_edge.at(v) == e);
            if (tree) continue;
            auto pu = path_to_root(u), pv = path_to_root(v);
            std::map<int, int> depth_on_pv;
            for (std::size_t i = 0; i < pv.size(); ++i) depth_on_pv[pv[i]] = static_cast<int>(i);
            int meet = -1;
            for (int x : pu)
                if (depth_on_pv.count(x)) {
                    meet = x;
                    break;
                }
            std::vector<int> cyc;
            for (int x : pu) {
                cyc.push_back(x);
                if (x == meet) break;
            }
            std::vector<int> tail;
            for (int x : pv) {
                if (x == meet) break;
                tail.push_back(x);
            }
            std::reverse(tail.begin(), tail.end());
            cyc.insert(cyc.end(), tail.begin(), tail.end());
            if (cyc.size() >= 3) return cyc;
        }
        throw std::logic_error("dmp: no cycle in 2-connected block");
    }

    struct fragment {
        std::vector<int> attachments;       // embedded vertices touching it
        std::vector<int> interior_vertices; // unembedded vertices
        std::vector<int> frag_edges;        // unembedded block edges
    };

    std::vector<fragment> compute_fragments() const {
        std::vector<fragment> frs;
        // Chord fragments: unembedded edges with both endpoints embedded.
        for (int e : block_edges_) {
            if (embedded_edge_.count(e)) continue;
            int u = g_.edge(e).u, v = g_.edge(e).v;
            if (embedded_vertex_.count(u) && embedded_vertex_.count(v)) {
                fragment f;
                f.attachments = {u, v};
                f.frag_edges = {e};
                frs.push_back(std::move(f));
            }
        }
        // Component fragments: components of the unembedded vertices.
        std::set<int> unseen;
        for (int v : verts_)
            if (!embedded_vertex_.count(v)) unseen.insert(v);
        while (!unseen.empty()) {
            int start = *unseen.begin();
            fragment f;
            std::set<int> att;
            std::vector<int> stack{start};
            unseen.erase(start);
            f.interior_vertices.push_back(start);
            std::set<int> fedges;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int e : g_.incident(v)) {
                    if (!edge_in_block_.count(e)) continue;
                    fedges.insert(e);
                    int w = g_.edge(e).other(v);
                    if (embedded_vertex_.count(w)) {
                        att.insert(w);
                    } else if (unseen.count(w)) {
                        unseen.erase(w);
                        f.interior_vertices.push_back(w);
                        stack.push_back(w);
                    }
                }
            }
            f.attachments.assign(att.begin(), att.end());
            f.frag_edges.assign(fedges.begin(), fedges.end());
            frs.push_back(std::move(f));
        }
        return frs;
    }

    std::vector<int> admissible_faces(const fragment& f) const {
        std::vector<int> adm;
        for (std::size_t i = 0; i < faces_.size(); ++i) {
            std::set<int> fv(faces_[i].begin(), faces_[i].end());
            bool ok = true;
            for (int a : f.attachments)
                if (!fv.count(a)) {
                    ok = false;
                    break;
                }
            if (ok) adm.push_back(static_cast<int>(i));
        }
        return adm;
    }

    // Alpha-path between two distinct attachments through the fragment.
    std::vector<int> alpha_path(const fragment& f) const {
        if (f.frag_edges.size() == 1 && f.interior_vertices.empty())
            return {f.attachments[0], f.attachments[1]};
        int source = f.attachments[0];
        std::map<int, int> prev;
        std::queue<int> q;
        std::set<int> interior(f.interior_vertices.begin(), f.interior_vertices.end());
        std::set<int> fedges(f.frag_edges.begin(), f.frag_edges.end());
        prev[source] = source;
        q.push(source);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (v != source && embedded_vertex_.count(v)) {
                std::vector<int> path{v};
                while (prev[v] != v) {
                    v = prev[v];
                    path.push_back(v);
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (v != source && !interior.count(v)) continue;
            for (int e : g_.incident(v)) {
                if (!fedges.count(e)) continue;
                int w = g_.edge(e).other(v);
                if (!prev.count(w)) {
                    prev[w] = v;
                    q.push(w);
                }
            }
        }
        throw std::logic_error("dmp: fragment has fewer than two attachments");
    }

    bool embed_one_path() {
        auto frs = compute_fragments();
        assert(!frs.empty());
        int pick = -1;
        std::vector<int> pick_adm;
        for (std::size_t i = 0; i < frs.size(); ++i) {
            auto adm = admissible_faces(frs[i]);
            if (adm.empty()) return false;  // non-planar
            if (pick < 0 || adm.size() < pick_adm.size()) {
                pick = static_cast<int>(i);
                pick_adm = adm;
                if (adm.size() == 1) break;
            }
        }
        const fragment& f = frs[pick];
        auto path = alpha_path(f);
        int face_idx = pick_adm[0];

        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            embedded_edge_.insert(edge_between(path[i], path[i + 1]));
        for (int v : path) embedded_vertex_.insert(v);

        // Split the host face along the path.
        std::vector<int> face = faces_[face_idx];
        int ia = -1, ib = -1;
        for (std::size_t i = 0; i < face.size(); ++i) {
            if (face[i] == path.front()) ia = static_cast<int>(i);
            if (face[i] == path.back()) ib = static_cast<int>(i);
        }
        assert(ia >= 0 && ib >= 0 && ia != ib);
        int len = static_cast<int>(face.size());
        std::vector<int> f1, f2;
        for (int i = ia; i != ib; i = (i + 1) % len) f1.push_back(face[i]);
        f1.push_back(face[ib]);
        for (std::size_t i = path.size() - 2; i + 1 >= 2; --i) f1.push_back(path[i]);
        for (int i = ib; i != ia; i = (i + 1) % len) f2.push_back(face[i]);
        f2.push_back(face[ia]);
        for (std::size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);
        faces_[face_idx] = std::move(f1);
        faces_.push_back(std::move(f2));
        return true;
    }

    bool extract_rotations(std::vector<std::vector<int>>& rot) const {
        // phi from oriented faces, then sigma(d) = phi(rev(d)).
        std::map<int, int> phi;
        for (const auto& face : faces_) {
            int len = static_cast<int>(face.size());
            std::vector<int> darts;
            for (int i = 0; i < len; ++i) {
                int u = face[i], v = face[(i + 1) % len];
                int e = edge_between(u, v);
                darts.push_back(2 * e + (g_.edge(e).u == u ? 0 : 1));
            }
            for (int i = 0; i < len; ++i) {
                if (phi.count(darts[i])) return false;
                phi[darts[i]] = darts[(i + 1) % len];
            }
        }
        if (phi.size() != 2 * block_edges_.size()) return false;
        std::set<int> placed;
        for (int e : block_edges_)
            for (int d : {2 * e, 2 * e + 1}) {
                if (placed.count(d)) continue;
                int v = dart_tail(g_, d);
                int cur = d;
                do {
                    rot[v].push_back(cur);
                    placed.insert(cur);
                    cur = phi.at(dart_rev(cur));
                    if (dart_tail(g_, cur) != v) return false;
                } while (cur != d);
            }
        return true;
    }

    const graph& g_;
    std::vector<int> block_edges_;
    std::set<int> edge_in_block_;
    std::set<int> verts_;
    std::set<int> embedded_vertex_;
    std::set<int> embedded_edge_;
    std::vector<std::vector<int>> faces_;  // oriented simple vertex cycles
};

// Biconnected components of a simple graph as edge lists (Hopcroft-Tarjan).
inline std::vector<std::vector<int>> blocks(const graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::vector<int>> out;
    std::vector<int> estack;
    int timer = 0;
    struct frame {
        int v, parent_edge;
        std::size_t idx;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<frame> st{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!st.empty()) {
            auto& fr = st.back();
            const auto& inc = g.incident(fr.v);
            if (fr.idx < inc.size()) {
                int e = inc[fr.idx++];
                if (e == fr.parent_edge) continue;
                int v = fr.v;
                int w = g.edge(e).other(v);
                if (disc[w] == -1) {
                    estack.push_back(e);
                    disc[w] = low[w] = timer++;
                    st.push_back({w, e, 0});  // invalidates fr
                } else if (disc[w] < disc[v]) {
                    estack.push_back(e);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                int v = fr.v, pe = fr.parent_edge;
                st.pop_back();
                if (st.empty()) continue;
                int u = st.back().v;
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    std::vector<int> comp;
                    while (true) {
                        int e = estack.back();
                        estack.pop_back();
                        comp.push_back(e);
                        if (e == pe) break;
                    }
                    out.push_back(std::move(comp));
                }
            }
        }
    }
    return out;
}

}  // namespace detail

namespace detail {

// Decision-only planarity of a simple graph (any number of components).
inline bool planar_decision(const graph& g) {
    for (auto& block : blocks(g)) {
        dmp solver(g, block);
        std::vector<std::vector<int>> rot(g.vertex_count());
        if (!solver.run(rot)) return false;
    }
    return true;
}

inline kuratowski_witness extract_kuratowski(const graph& g) {
    // Simple support with a map back to g's edge ids.
    std::vector<int> keep;
    std::set<std::pair<int, int>> used;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& r = g.edge(e);
        if (r.is_loop()) continue;
        auto key = std::minmax(r.u, r.v);
        if (used.insert({key.first, key.second}).second) keep.push_back(e);
    }
    auto build = [&](const std::vector<int>& edge_ids) {
        graph h(g.vertex_count());
        for (int e : edge_ids) h.add_edge(g.edge(e).u, g.edge(e).v);
        return h;
    };
    auto nonplanar = [&](const std::vector<int>& edge_ids) {
        return !planar_decision(build(edge_ids));
    };
    // Greedy edge-deletion: afterwards every remaining edge is critical, so
    // the remainder is exactly a Kuratowski subdivision.
    assert(nonplanar(keep));
    for (std::size_t i = 0; i < keep.size();) {
        std::vector<int> trial = keep;
        trial.erase(trial.begin() + static_cast<long>(i));
        if (nonplanar(trial))
            keep = std::move(trial);
        else
            ++i;
    }
    // keep is now a Kuratowski subdivision; classify by suppressing the
    // degree-2 chains and verifying the quotient shape exactly.
    graph h = build(keep);
    std::vector<int> deg(h.vertex_count(), 0);
    for (const auto& r : h.edges()) {
        ++deg[r.u];
        ++deg[r.v];
    }
    std::vector<int> branch;
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (deg[v] >= 3) branch.push_back(v);
        if (deg[v] == 1) throw std::logic_error("kuratowski extraction left a pendant vertex");
    }
    std::set<int> branch_set(branch.begin(), branch.end());
    std::map<int, int> branch_idx;
    for (std::size_t i = 0; i < branch.size(); ++i) branch_idx[branch[i]] = static_cast<int>(i);
    // Follow each chain from a branch vertex to the next branch vertex.
    std::map<std::pair<int, int>, int> quotient;
    for (int b : branch)
        for (int e0 : h.incident(b)) {
            int prev = b, cur = h.edge(e0).other(b);
            while (!branch_set.count(cur)) {
                for (int e : h.incident(cur)) {
                    int w2 = h.edge(e).other(cur);
                    if (w2 != prev) {
                        prev = cur;
                        cur = w2;
                        break;
                    }
                }
                if (prev == cur) throw std::logic_error("kuratowski chain walk stalled");
            }
            if (cur == b) throw std::logic_error("kuratowski chain loops back");
            auto mm = std::minmax(branch_idx[b], branch_idx[cur]);
            ++quotient[{mm.first, mm.second}];
        }
    for (auto& [pq, count] : quotient) {
        if (count != 2)  // counted once from each end
            throw std::logic_error("kuratowski quotient has a doubled chain");
    }
    kuratowski_witness w;
    w.subdivision_edges = keep;
    w.branch_vertices = branch;
    if (branch.size() == 5 && quotient.size() == 10) {
        w.kind = kuratowski_witness::kind_t::k5;
    } else if (branch.size() == 6 && quotient.size() == 9) {
        // Complete bipartite shape: the non-neighbors of each branch vertex
        // split the six into two independent triples.
        std::vector<int> side(6, -1);
        side[0] = 0;
        for (int i = 1; i < 6; ++i)
            side[i] = quotient.count({0, i}) ? 1 : 0;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if ((side[i] == side[j]) == (quotient.count({i, j}) > 0))
                    throw std::logic_error("kuratowski quotient is not complete bipartite");
        w.kind = kuratowski_witness::kind_t::k33;
    } else {
        throw std::logic_error("kuratowski extraction failed to isolate a subdivision");
    }
    return w;
}

}  // namespace detail

inline planarity_result is_planar(const graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("is_planar: empty graph");
    if (!g.is_connected()) throw std::invalid_argument("is_planar: disconnected input");

    // Simple support; parallels and loops are reinserted afterwards.
    std::map<std::pair<int, int>, int> first_copy;
    std::vector<int> parallels, loops;
    std::vector<int> support;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& r = g.edge(e);
        if (r.is_loop()) {
            loops.push_back(e);
            continue;
        }
        auto mm = std::minmax(r.u, r.v);
        auto [it, fresh] = first_copy.insert({{mm.first, mm.second}, e});
        if (fresh)
            support.push_back(e);
        else
            parallels.push_back(e);
    }

    graph s(g.vertex_count());
    std::vector<int> support_of;  // s edge id -> g edge id
    for (int e : support) {
        s.add_edge(g.edge(e).u, g.edge(e).v);
        support_of.push_back(e);
    }

    std::vector<std::vector<int>> rot(g.vertex_count());
    for (auto& block : detail::blocks(s)) {
        detail::dmp solver(s, block);
        std::vector<std::vector<int>> brot(s.vertex_count());
        if (!solver.run(brot)) return detail::extract_kuratowski(g);
        for (int v = 0; v < s.vertex_count(); ++v)
            for (int d : brot[v]) {
                int ge = support_of[dart_edge(d)];
                rot[v].push_back(2 * ge + (d & 1));
            }
    }

    // Parallel copies sit right next to their first copy (digon faces).
    for (int e : parallels) {
        const auto& r = g.edge(e);
        auto mm = std::minmax(r.u, r.v);
        int e0 = first_copy.at({mm.first, mm.second});
        int u = g.edge(e0).u, v = g.edge(e0).v;
        int du0 = 2 * e0, dv0 = 2 * e0 + 1;
        int du = 2 * e + (r.u == u ? 0 : 1);
        auto& ru = rot[u];
        ru.insert(std::find(ru.begin(), ru.end(), du0) + 1, du);
        auto& rv = rot[v];
        rv.insert(std::find(rv.begin(), rv.end(), dv0), dart_rev(du));
        first_copy[{mm.first, mm.second}] = e;  // chain further copies
    }
    for (int e : loops) {
        int v = g.edge(e).u;
        rot[v].push_back(2 * e + 1);
        rot[v].push_back(2 * e);
    }

    embedding emb{std::move(rot)};
    if (!euler_certificate(g, emb)) throw std::logic_error("is_planar: embedding failed Euler check");
    return emb;
}

// Minimal walk code over all starting darts and both senses. Complete
// isomorphism invariant for simple 3-connected planar graphs; for anything
// weaker it is only an embedding invariant.
inline canonical_key canonical_key_embedding(const graph& g, const embedding& emb) {
    if (!emb.valid_for(g)) throw std::invalid_argument("canonical_key: invalid embedding");
    if (g.edge_count() == 0) {
        canonical_key k;
        k.key = {'F', static_cast<std::uint8_t>(g.vertex_count())};
        return k;
    }
    int n = g.vertex_count();
    if (n > 250) throw std::invalid_argument("canonical_key: graph too large for byte code");
    std::vector<int> pos(2 * g.edge_count(), -1);
    for (const auto& r : emb.rot)
        for (std::size_t i = 0; i < r.size(); ++i) pos[r[i]] = static_cast<int>(i);

    std::vector<std::uint8_t> best;
    std::vector<int> label(n), order, first_dart(n);
    for (int d0 = 0; d0 < 2 * g.edge_count(); ++d0) {
        for (int sense : {1, -1}) {
            std::fill(label.begin(), label.end(), 0);
            order.clear();
            int next = 0;
            auto discover = [&](int v, int via_dart_to_v) {
                label[v] = ++next;
                order.push_back(v);
                first_dart[v] = via_dart_to_v;
            };
            discover(dart_tail(g, d0), d0);
            std::vector<std::uint8_t> code;
            code.push_back(static_cast<std::uint8_t>(n));
            for (std::size_t qi = 0; qi < order.size(); ++qi) {
                int v = order[qi];
                const auto& ring = emb.rot[v];
                int deg = static_cast<int>(ring.size());
                int start = pos[first_dart[v]];
                for (int k = 0; k < deg; ++k) {
                    int d = ring[((start + sense * k) % deg + deg) % deg];
                    int w = dart_head(g, d);
                    if (label[w] == 0) discover(w, dart_rev(d));
                    code.push_back(static_cast<std::uint8_t>(label[w]));
                }
                code.push_back(0);
            }
            if (static_cast<int>(order.size()) != n) continue;  // disconnected: no code
            if (best.empty() || code < best) best = std::move(code);
        }
    }
    if (best.empty()) throw std::invalid_argument("canonical_key: disconnected graph");
    canonical_key k;
    k.key.push_back('F');
    k.key.insert(k.key.end(), best.begin(), best.end());
    return k;
}

// Spec surface: embedding-backed code when an embedding is supplied,
// adjacency-code fallback otherwise.
inline canonical_key compute_canonical_key(const graph& g,
                                           const std::optional<embedding>& emb = std::nullopt) {
    if (emb) return canonical_key_embedding(g, *emb);
    return canonical_key_adjacency(g);
}

}  // namespace barnette
