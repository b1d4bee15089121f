#pragma once
// The two reductions that generate this graph family from the cube, run in
// reverse: ladder insertion across two co-facial edges (adds 4 vertices) and
// vertex inflation into a cube-minus-vertex gadget (adds 6). The enumerator
// closes the family under both expansions with canonical-key dedup, persists
// sorted catalogs, and carries the Hamiltonian-cycle extension templates.
#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include "barnette/checkers.hpp"
#include "barnette/fragments.hpp"
#include "barnette/hamiltonicity.hpp"

namespace barnette {

struct expansion_site {
    enum class kind_t { r0, r4 } kind = kind_t::r0;
    int e1 = -1, e2 = -1;      // r0: vertex-disjoint edges on a common face
    bool orientation = false;  // r0: swap the second edge's endpoints
    int vertex = -1;           // r4

    std::string describe() const {
        std::ostringstream os;
        if (kind == kind_t::r0)
            os << "r0(e" << e1 << ",e" << e2 << (orientation ? ",swap)" : ",keep)");
        else
            os << "r4(v" << vertex << ")";
        return os.str();
    }
};

namespace detail {

inline bool edges_vertex_disjoint(const graph& g, int e1, int e2) {
    const auto &a = g.edge(e1), &b = g.edge(e2);
    return a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
}

inline bool edges_share_face(const graph& g, const embedding& emb, int e1, int e2) {
    auto fl = trace_faces(g, emb);
    for (const auto& f : fl.faces) {
        bool h1 = false, h2 = false;
        for (int d : f) {
            if (dart_edge(d) == e1) h1 = true;
            if (dart_edge(d) == e2) h2 = true;
        }
        if (h1 && h2) return true;
    }
    return false;
}

}  // namespace detail

struct expansion_result {
    graph g;
    embedding emb;
    // r0: ids of the four new vertices w, x, y, z (paths a-w-x-b, c-y-z-d,
    // rungs w-y, x-z). r4: old-to-new vertex map plus the 7-gadget base.
    std::array<int, 4> r0_new{-1, -1, -1, -1};
    std::vector<int> old_to_new;
    int r4_base = -1;
};

// Deletes the two site edges and inserts the four-vertex ladder; the caller
// filters results that fail the full family checks. Returns nothing when the
// result is not planar (the wrong orientation inside the shared face).
inline std::optional<expansion_result> expand_r0(const graph& g, const embedding& emb,
                                                 const expansion_site& site) {
    if (site.kind != expansion_site::kind_t::r0) throw std::invalid_argument("expand_r0: bad site");
    if (site.e1 == site.e2 || !detail::edges_vertex_disjoint(g, site.e1, site.e2))
        throw std::invalid_argument("expand_r0: site edges must be vertex-disjoint");
    if (!detail::edges_share_face(g, emb, site.e1, site.e2))
        throw std::invalid_argument("expand_r0: site edges do not lie on a common face");
    int a = g.edge(site.e1).u, b = g.edge(site.e1).v;
    int c = g.edge(site.e2).u, d = g.edge(site.e2).v;
    if (site.orientation) std::swap(c, d);
    int n = g.vertex_count();
    graph out(n + 4);
    for (int e = 0; e < g.edge_count(); ++e)
        if (e != site.e1 && e != site.e2) out.add_edge(g.edge(e).u, g.edge(e).v);
    int w = n, x = n + 1, y = n + 2, z = n + 3;
    out.add_edge(a, w);
    out.add_edge(w, x);
    out.add_edge(x, b);
    out.add_edge(c, y);
    out.add_edge(y, z);
    out.add_edge(z, d);
    out.add_edge(w, y);
    out.add_edge(x, z);
    if (!out.is_connected()) return std::nullopt;
    auto pr = is_planar(out);
    auto* pe = std::get_if<embedding>(&pr);
    if (!pe) return std::nullopt;
    expansion_result res{std::move(out), std::move(*pe), {w, x, y, z}, {}, -1};
    res.old_to_new.resize(n);
    for (int v = 0; v < n; ++v) res.old_to_new[v] = v;
    return res;
}

// The 7-vertex gadget replacing a vertex: cube minus one vertex, attachment
// stubs A, B, C, interior G, H, I, J.
inline const std::vector<std::pair<int, int>>& r4_gadget_edges() {
    static const std::vector<std::pair<int, int>> edges{{0, 4}, {0, 5}, {1, 3}, {1, 4}, {2, 3},
                                                        {2, 5}, {3, 6}, {4, 6}, {5, 6}};
    return edges;  // A=0 B=1 C=2 G=3 H=4 I=5 J=6; A-H A-I B-G B-H C-G C-I G-J H-J I-J
}

inline expansion_result expand_r4(const graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("expand_r4: bad vertex");
    if (g.degree(v) != 3) throw std::invalid_argument("expand_r4: vertex degree is not 3");
    auto nb = g.neighbors(v);
    if (nb[0] == nb[1] || nb[0] == nb[2] || nb[1] == nb[2])
        throw std::invalid_argument("expand_r4: vertex has repeated neighbors");
    auto del = delete_vertices(g, {v});
    int base = del.g.vertex_count();
    graph out(base + 7);
    for (const auto& e : del.g.edges()) out.add_edge(e.u, e.v);
    for (auto [p, q] : r4_gadget_edges()) out.add_edge(base + p, base + q);
    for (int i = 0; i < 3; ++i) out.add_edge(base + i, del.old_to_new[nb[i]]);
    auto pr = is_planar(out);
    auto* pe = std::get_if<embedding>(&pr);
    if (!pe) throw std::logic_error("expand_r4: result unexpectedly non-planar");
    expansion_result res{std::move(out), std::move(*pe), {-1, -1, -1, -1}, del.old_to_new, base};
    return res;
}

// Collapse a quadrilateral face given by its boundary cycle p0 p1 p2 p3; the
// outer neighbors are rejoined (q0-q1, q2-q3) or (q1-q2, q3-q0). Returns the
// result only when it passes all family checks.
inline std::optional<std::pair<graph, embedding>> reduce_r0(const graph& g,
                                                            const std::vector<int>& quad,
                                                            bool orientation) {
    if (quad.size() != 4) throw std::invalid_argument("reduce_r0: need a 4-face");
    std::array<int, 4> outer{};
    std::set<int> on_face(quad.begin(), quad.end());
    if (on_face.size() != 4) throw std::invalid_argument("reduce_r0: degenerate face");
    for (int i = 0; i < 4; ++i) {
        int p = quad[i];
        if (g.degree(p) != 3) throw std::invalid_argument("reduce_r0: face vertex not cubic");
        int prev = quad[(i + 3) % 4], next = quad[(i + 1) % 4];
        int out = -1;
        for (int e : g.incident(p)) {
            int w = g.edge(e).other(p);
            if (w != prev && w != next) out = w;
        }
        if (out < 0 || on_face.count(out))
            throw std::invalid_argument("reduce_r0: third edge does not leave the face");
        outer[i] = out;
    }
    auto del = delete_vertices(g, quad);
    int o = orientation ? 1 : 0;
    for (int k = 0; k < 2; ++k) {
        int u = del.old_to_new[outer[(o + 2 * k) % 4]];
        int v = del.old_to_new[outer[(o + 2 * k + 1) % 4]];
        del.g.add_edge(u, v);
    }
    if (!check_c3cbp(del.g).ok()) return std::nullopt;
    auto pr = is_planar(del.g);
    return std::pair{del.g, std::get<embedding>(pr)};
}

// Collapse the side of a 3-cut that is a cube-minus-vertex to one vertex.
inline std::optional<std::pair<graph, embedding>> reduce_r4(const graph& g,
                                                            const std::vector<int>& cut) {
    if (cut.size() != 3) throw std::invalid_argument("reduce_r4: need a 3-edge cut");
    auto [g1, g2] = split_at_3cut(g, cut);
    static const canonical_key cube_key = canonical_key_adjacency(named::cube_c1());
    for (const auto& pick : {std::pair{&g1, &g2}, std::pair{&g2, &g1}}) {
        if (pick.first->vertex_count() != 8) continue;
        if (canonical_key_adjacency(*pick.first) != cube_key) continue;
        const graph& reduced = *pick.second;
        if (!check_c3cbp(reduced).ok()) return std::nullopt;
        return std::pair{reduced, std::get<embedding>(is_planar(reduced))};
    }
    return std::nullopt;
}

struct catalog_entry {
    graph g;
    embedding emb;
    canonical_key key;
    std::string parent_key_hex;  // empty for the seed graph
    std::string site;
};

struct catalog {
    std::map<int, std::map<canonical_key, catalog_entry>> by_n;
    // Violations of the every-4-face-reduces lemma, should any ever appear;
    // the enumerator records them instead of silently continuing.
    std::vector<std::string> findings;

    std::size_t total() const {
        std::size_t t = 0;
        for (const auto& [n, level] : by_n) t += level.size();
        return t;
    }
};

// For a cyclically 4-edge-connected family member above the minimum order,
// every quadrilateral face must admit at least one orientation of the ladder
// collapse that stays in the family. Returns complaints, empty when the
// lemma holds.
inline std::vector<std::string> r0_lemma_violations(const graph& g, const embedding& emb) {
    std::vector<std::string> out;
    if (g.vertex_count() <= 8) return out;
    if (!cyclically_4_edge_connected(g)) return out;
    auto fl = trace_faces(g, emb);
    for (const auto& f : fl.faces) {
        if (f.size() != 4) continue;
        std::vector<int> quad;
        for (int d : f) quad.push_back(dart_tail(g, d));
        std::set<int> qs(quad.begin(), quad.end());
        if (qs.size() != 4) continue;
        bool eligible = true;
        for (int i = 0; i < 4 && eligible; ++i) {
            int third = -1;
            for (int e : g.incident(quad[i])) {
                int w = g.edge(e).other(quad[i]);
                if (w != quad[(i + 1) % 4] && w != quad[(i + 3) % 4]) third = w;
            }
            if (third < 0 || qs.count(third)) eligible = false;
        }
        if (!eligible) continue;
        bool reduces = false;
        for (bool orient : {false, true})
            if (reduce_r0(g, quad, orient)) reduces = true;
        if (!reduces) {
            std::ostringstream os;
            os << "4-face {" << quad[0] << "," << quad[1] << "," << quad[2] << "," << quad[3]
               << "} of a cyclically-4-edge-connected member on " << g.vertex_count()
               << " vertices admits no ladder collapse";
            out.push_back(os.str());
        }
    }
    return out;
}

// All valid r0 sites of an embedded graph: unordered pairs of vertex-disjoint
// edges on a common face, both orientations, in deterministic order.
inline std::vector<expansion_site> r0_sites(const graph& g, const embedding& emb) {
    std::vector<expansion_site> sites;
    auto fl = trace_faces(g, emb);
    std::set<std::pair<int, int>> seen_pairs;
    for (const auto& f : fl.faces) {
        std::vector<int> edges;
        for (int d : f) edges.push_back(dart_edge(d));
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                if (!detail::edges_vertex_disjoint(g, edges[i], edges[j])) continue;
                if (!seen_pairs.insert({edges[i], edges[j]}).second) continue;
                for (bool orient : {false, true})
                    sites.push_back({expansion_site::kind_t::r0, edges[i], edges[j], orient, -1});
            }
    }
    return sites;
}

// Breadth-first closure from the cube under both expansions, deduplicated by
// canonical key and filtered by the family checks. Deterministic for any
// worker count: children are merged in sorted order and provenance ties go
// to the lexicographically smallest (parent, site).
inline catalog enumerate_catalog(int max_n, int jobs = 1) {
    if (max_n < 8 || max_n % 2 != 0)
        throw std::invalid_argument("enumerate_catalog: max_n must be even and >= 8");
    catalog cat;
    {
        graph cube = named::cube_c1();
        auto emb = std::get<embedding>(is_planar(cube));
        auto key = canonical_key_embedding(cube, emb);
        cat.by_n[8].insert({key, {cube, emb, key, "", "seed"}});
    }
    for (int n = 8; n <= max_n; n += 2) {
        auto lvl = cat.by_n.find(n);
        if (lvl == cat.by_n.end()) continue;
        std::vector<const catalog_entry*> parents;
        for (const auto& [k, entry] : lvl->second) parents.push_back(&entry);

        struct child {
            int n;
            canonical_key key;
            catalog_entry entry;
        };
        std::vector<std::vector<child>> results(std::max(jobs, 1));
        auto expand_parent = [&](const catalog_entry& parent, std::vector<child>& out) {
            auto consider = [&](std::optional<expansion_result> res, const expansion_site& site) {
                if (!res) return;
                int cn = res->g.vertex_count();
                if (cn > max_n) return;
                if (!check_c3cbp(res->g).ok()) return;
                auto key = canonical_key_embedding(res->g, res->emb);
                out.push_back({cn, key,
                               {std::move(res->g), std::move(res->emb), key,
                                parent.key.hex(), site.describe()}});
            };
            for (const auto& site : r0_sites(parent.g, parent.emb))
                if (parent.g.vertex_count() + 4 <= max_n)
                    consider(expand_r0(parent.g, parent.emb, site), site);
            if (parent.g.vertex_count() + 6 <= max_n)
                for (int v = 0; v < parent.g.vertex_count(); ++v) {
                    expansion_site site{expansion_site::kind_t::r4, -1, -1, false, v};
                    consider(expand_r4(parent.g, v), site);
                }
        };
        if (jobs <= 1 || parents.size() <= 1) {
            for (const auto* p : parents) expand_parent(*p, results[0]);
        } else {
            std::vector<std::thread> workers;
            std::atomic<std::size_t> next{0};
            for (int t = 0; t < jobs; ++t)
                workers.emplace_back([&, t] {
                    for (std::size_t i = next.fetch_add(1); i < parents.size();
                         i = next.fetch_add(1))
                        expand_parent(*parents[i], results[t]);
                });
            for (auto& w : workers) w.join();
        }
        std::vector<child> merged;
        for (auto& r : results)
            for (auto& c : r) merged.push_back(std::move(c));
        std::sort(merged.begin(), merged.end(), [](const child& a, const child& b) {
            if (a.n != b.n) return a.n < b.n;
            if (a.key != b.key) return a.key < b.key;
            if (a.entry.parent_key_hex != b.entry.parent_key_hex)
                return a.entry.parent_key_hex < b.entry.parent_key_hex;
            return a.entry.site < b.entry.site;
        });
        for (auto& c : merged) {
            auto [it, fresh] = cat.by_n[c.n].insert({c.key, std::move(c.entry)});
            if (fresh)
                for (auto& complaint : r0_lemma_violations(it->second.g, it->second.emb))
                    cat.findings.push_back(complaint);
        }
    }
    return cat;
}

// Catalog directory: one subdirectory per vertex count holding one edge-list
// file per key, plus a manifest of keys and provenance.
inline void write_catalog(const catalog& cat, const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("write_catalog: cannot create " + dir.string());
    std::ostringstream manifest;
    for (const auto& [n, level] : cat.by_n) {
        fs::path sub = dir / ("n=" + std::to_string(n));
        fs::create_directories(sub, ec);
        if (ec) throw std::runtime_error("write_catalog: cannot create " + sub.string());
        for (const auto& [key, entry] : level) {
            std::ofstream f(sub / (key.hex() + ".graph"), std::ios::binary);
            f << export_graph(entry.g, export_format::edge_list);
            if (!f) throw std::runtime_error("write_catalog: write failed in " + sub.string());
            manifest << n << ' ' << key.hex() << ' '
                     << (entry.parent_key_hex.empty() ? "-" : entry.parent_key_hex) << ' '
                     << entry.site << '\n';
        }
    }
    std::ofstream mf(dir / "manifest.txt", std::ios::binary);
    mf << manifest.str();
    if (!mf) throw std::runtime_error("write_catalog: manifest write failed");
}

// Hamiltonian-cycle extension across an r4 expansion: the spanning paths of
// the gadget between each stub pair, as drawn.
inline std::vector<int> extend_ham_r4(const graph& g, const std::vector<int>& cycle, int v,
                                      const expansion_result& exp) {
    if (!validate_ham_cycle(g, cycle))
        throw std::invalid_argument("extend_ham_r4: input cycle is not Hamiltonian");
    auto nb = g.neighbors(v);
    auto stub_of = [&](int neighbor) {
        for (int i = 0; i < 3; ++i)
            if (nb[i] == neighbor) return i;  // stubs A, B, C in neighbor order
        throw std::logic_error("extend_ham_r4: cycle neighbor mismatch");
    };
    static const std::map<std::pair<int, int>, std::vector<int>> paths{
        {{0, 1}, {0, 4, 6, 5, 2, 3, 1}},  // A H J I C G B
        {{0, 2}, {0, 5, 6, 4, 1, 3, 2}},  // A I J H B G C
        {{1, 2}, {1, 4, 0, 5, 6, 3, 2}},  // B H A I J G C
    };
    int pos = -1;
    int len = static_cast<int>(cycle.size());
    for (int i = 0; i < len; ++i)
        if (cycle[i] == v) pos = i;
    if (pos < 0) throw std::logic_error("extend_ham_r4: vertex not on cycle");
    int enter = stub_of(cycle[(pos + len - 1) % len]);  // stub facing the predecessor
    int leave = stub_of(cycle[(pos + 1) % len]);
    auto key = std::minmax(enter, leave);
    std::vector<int> gadget = paths.at({key.first, key.second});
    if (enter > leave) std::reverse(gadget.begin(), gadget.end());
    // Walk the old cycle from the successor of v around to its predecessor,
    // then cross the gadget from the predecessor-side stub back out.
    std::vector<int> out;
    for (int i = 1; i < len; ++i) out.push_back(exp.old_to_new[cycle[(pos + i) % len]]);
    for (int u : gadget) out.push_back(exp.r4_base + u);
    if (!validate_ham_cycle(exp.g, out))
        throw std::logic_error("extend_ham_r4: extension failed validation");
    return out;
}

struct r0_case_report {
    int case_id = 0;                    // 1..4 by which site edges the cycle uses
    std::vector<int> extended_cycle;    // cases 1-3
    std::vector<int> matching;          // case 4: the perfect-matching complement
    ham_status second_cycle = ham_status::none;  // case 4: cycle through both edges?
    std::vector<int> second_cycle_witness;
};

// How a Hamiltonian cycle of g survives an r0 expansion. Cases 1-3 rewire
// the cycle through the new ladder; case 4 (neither site edge on the cycle)
// records the matching-complement experiment instead of an extension.
inline r0_case_report classify_r0_case(const graph& g, const std::vector<int>& cycle,
                                       const expansion_site& site, const expansion_result& exp,
                                       search_budget budget = {}) {
    if (!validate_ham_cycle(g, cycle))
        throw std::invalid_argument("classify_r0_case: input cycle is not Hamiltonian");
    auto ids = detail::cycle_edge_ids(g, cycle);
    std::set<int> on(ids.begin(), ids.end());
    bool use1 = on.count(site.e1), use2 = on.count(site.e2);
    r0_case_report rep;
    rep.case_id = use1 && use2 ? 1 : use1 ? 2 : use2 ? 3 : 4;
    if (rep.case_id == 4) {
        rep.matching = matching_complement(g, cycle);
        constraint_set c;
        c.required = {site.e1, site.e2};
        auto r = find_ham_cycle(g, c, budget);
        rep.second_cycle = r.status;
        rep.second_cycle_witness = r.cycle_or_path;
        return rep;
    }
    int a = g.edge(site.e1).u, b = g.edge(site.e1).v;
    int c = g.edge(site.e2).u, d = g.edge(site.e2).v;
    if (site.orientation) std::swap(c, d);
    auto [w, x, y, z] = exp.r0_new;
    int len = static_cast<int>(cycle.size());
    std::vector<int> out;
    for (int i = 0; i < len; ++i) {
        int u = cycle[i], nxt = cycle[(i + 1) % len];
        out.push_back(u);
        auto hop = [&](int p, int q) { return (u == p && nxt == q) || (u == q && nxt == p); };
        if (rep.case_id != 3 && hop(a, b)) {
            std::vector<int> mid = rep.case_id == 1 ? std::vector<int>{w, x}
                                                    : std::vector<int>{w, y, z, x};
            if (u == b) std::reverse(mid.begin(), mid.end());
            out.insert(out.end(), mid.begin(), mid.end());
        } else if (rep.case_id != 2 && hop(c, d)) {
            std::vector<int> mid = rep.case_id == 1 ? std::vector<int>{y, z}
                                                    : std::vector<int>{y, w, x, z};
            if (u == d) std::reverse(mid.begin(), mid.end());
            out.insert(out.end(), mid.begin(), mid.end());
        }
    }
    if (!validate_ham_cycle(exp.g, out))
        throw std::logic_error("classify_r0_case: extension failed validation");
    rep.extended_cycle = std::move(out);
    return rep;
}

}  // namespace barnette
