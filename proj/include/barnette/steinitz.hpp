#pragma once
// Serial/parallel reductions and delta-wye transforms on multigraphs, plus a
// greedy driver that reduces planar graphs to K4 by simple delta-wye
// reductions (a transform followed by all possible SP reductions). Vertex
// and edge ids are re-assigned densely by every operation; trace steps are
// recorded against the indexing current at the time of the step.
#include "barnette/checkers.hpp"
#include "barnette/embedding.hpp"

namespace barnette {

inline graph serial_reduce(const graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("serial_reduce: bad vertex");
    if (g.degree(v) != 2) throw std::invalid_argument("serial_reduce: vertex degree is not 2");
    const auto& inc = g.incident(v);
    int y = g.edge(inc[0]).other(v), z = g.edge(inc[1]).other(v);
    if (y == z || y == v)
        throw std::invalid_argument("serial_reduce: both edges reach the same vertex");
    auto del = delete_vertices(g, {v});
    del.g.add_edge(del.old_to_new[y], del.old_to_new[z]);
    return del.g;
}

inline graph parallel_reduce(const graph& g, int e1, int e2) {
    if (e1 == e2 || e1 < 0 || e2 < 0 || e1 >= g.edge_count() || e2 >= g.edge_count())
        throw std::invalid_argument("parallel_reduce: bad edge ids");
    const auto &r1 = g.edge(e1), &r2 = g.edge(e2);
    if (!(r1.joins(r2.u, r2.v)))
        throw std::invalid_argument("parallel_reduce: edges are not parallel");
    graph out(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e)
        if (e != e2) out.add_edge(g.edge(e).u, g.edge(e).v);
    return out;
}

// Degree-3 vertex replaced by a triangle on its neighbors; edges already
// present between the neighbors are preserved, so parallels may arise.
inline graph y_to_delta(const graph& g, int w) {
    if (w < 0 || w >= g.vertex_count()) throw std::invalid_argument("y_to_delta: bad vertex");
    if (g.degree(w) != 3) throw std::invalid_argument("y_to_delta: vertex degree is not 3");
    std::vector<int> nb = g.neighbors(w);
    if (nb[0] == nb[1] || nb[0] == nb[2] || nb[1] == nb[2] || nb[0] == w || nb[1] == w || nb[2] == w)
        throw std::invalid_argument("y_to_delta: neighbors are not three distinct vertices");
    auto del = delete_vertices(g, {w});
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) del.g.add_edge(del.old_to_new[nb[i]], del.old_to_new[nb[j]]);
    return del.g;
}

// Three edges forming a triangle replaced by a new degree-3 hub.
inline graph delta_to_y(const graph& g, std::array<int, 3> tri) {
    std::set<int> ids(tri.begin(), tri.end());
    if (ids.size() != 3) throw std::invalid_argument("delta_to_y: need three distinct edges");
    std::set<int> verts;
    for (int e : tri) {
        if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("delta_to_y: bad edge id");
        verts.insert(g.edge(e).u);
        verts.insert(g.edge(e).v);
    }
    if (verts.size() != 3) throw std::invalid_argument("delta_to_y: edges do not form a triangle");
    // Each corner pair must be joined by one of the three edges.
    std::vector<int> corners(verts.begin(), verts.end());
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            bool joined = false;
            for (int e : tri) joined = joined || g.edge(e).joins(corners[i], corners[j]);
            if (!joined) throw std::invalid_argument("delta_to_y: edges do not form a triangle");
        }
    graph out(g.vertex_count() + 1);
    for (int e = 0; e < g.edge_count(); ++e)
        if (!ids.count(e)) out.add_edge(g.edge(e).u, g.edge(e).v);
    int hub = g.vertex_count();
    for (int c : corners) out.add_edge(c, hub);
    return out;
}

enum class step_kind { serial, parallel, delta_to_y, y_to_delta };

struct reduction_step {
    step_kind kind;
    // serial / y_to_delta: data[0] = vertex; parallel: data = {e1, e2};
    // delta_to_y: data = {e1, e2, e3}.
    std::array<int, 3> data{-1, -1, -1};
};

struct reduction_trace {
    std::vector<reduction_step> steps;
    canonical_key start_key, end_key;
    bool reached_k4 = false;
    graph stuck_graph;  // populated when the driver gives up
};

inline graph apply_step(const graph& g, const reduction_step& s) {
    switch (s.kind) {
        case step_kind::serial: return serial_reduce(g, s.data[0]);
        case step_kind::parallel: return parallel_reduce(g, s.data[0], s.data[1]);
        case step_kind::y_to_delta: return y_to_delta(g, s.data[0]);
        case step_kind::delta_to_y: return delta_to_y(g, {s.data[0], s.data[1], s.data[2]});
    }
    throw std::logic_error("apply_step: bad kind");
}

inline graph replay_trace(const graph& start, const reduction_trace& t) {
    graph g = start;
    for (const auto& s : t.steps) g = apply_step(g, s);
    return g;
}

inline std::string format_step(const reduction_step& s) {
    std::ostringstream os;
    switch (s.kind) {
        case step_kind::serial: os << "serial v=" << s.data[0]; break;
        case step_kind::parallel: os << "parallel e=" << s.data[0] << ",e=" << s.data[1]; break;
        case step_kind::y_to_delta: os << "y-to-delta v=" << s.data[0]; break;
        case step_kind::delta_to_y:
            os << "delta-to-y e=" << s.data[0] << ",e=" << s.data[1] << ",e=" << s.data[2];
            break;
    }
    return os.str();
}

namespace detail {

// Key for trace bookkeeping: embedding code on 3-connected planar inputs,
// adjacency code on anything small.
inline canonical_key trace_key(const graph& g) {
    if (g.vertex_count() <= adjacency_code_max_vertices) return canonical_key_adjacency(g);
    if (g.is_simple() && g.is_connected() && vertex_connectivity_at_least(g, 3).at_least) {
        auto pr = is_planar(g);
        if (auto* emb = std::get_if<embedding>(&pr)) return canonical_key_embedding(g, *emb);
    }
    throw std::invalid_argument("trace_key: graph too large for a canonical key");
}

inline std::optional<std::pair<int, int>> find_parallel_pair(const graph& g) {
    std::map<std::pair<int, int>, int> first;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& r = g.edge(e);
        if (r.is_loop()) continue;
        auto mm = std::minmax(r.u, r.v);
        auto [it, fresh] = first.insert({{mm.first, mm.second}, e});
        if (!fresh) return std::pair{it->second, e};
    }
    return std::nullopt;
}

inline std::optional<int> find_serial_vertex(const graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 2) continue;
        const auto& inc = g.incident(v);
        int y = g.edge(inc[0]).other(v), z = g.edge(inc[1]).other(v);
        if (y != z && y != v) return v;
    }
    return std::nullopt;
}

// Sorted list of triangles as edge-id triples, by corner triple.
inline std::vector<std::array<int, 3>> triangles(const graph& g) {
    std::vector<std::array<int, 3>> out;
    int n = g.vertex_count();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            auto exy = g.find_edge(x, y);
            if (!exy) continue;
            for (int z = y + 1; z < n; ++z) {
                auto exz = g.find_edge(x, z);
                auto eyz = g.find_edge(y, z);
                if (exz && eyz) out.push_back({*exy, *exz, *eyz});
            }
        }
    return out;
}

}  // namespace detail

inline bool is_k4_shape(const graph& g) {
    if (g.vertex_count() != 4 || g.edge_count() != 6 || !g.is_simple()) return false;
    for (int v = 0; v < 4; ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

// Greedy reduce-to-K4 driver: exhaust SP reductions, then try y-to-delta at
// the lowest-index degree-3 vertex whose cleanup keeps 3-connectedness, then
// delta-to-y at the lowest-index triangle; steps revisiting a seen key are
// skipped. Failure returns the stuck graph rather than guessing.
inline reduction_trace reduce_to_k4(const graph& start) {
    reduction_trace trace;
    trace.start_key = detail::trace_key(start);
    graph cur = start;
    std::set<canonical_key> seen{trace.start_key};

    auto sp_closure = [&](graph g, std::vector<reduction_step>& steps) {
        while (true) {
            if (auto pp = detail::find_parallel_pair(g)) {
                steps.push_back({step_kind::parallel, {pp->first, pp->second, -1}});
                g = parallel_reduce(g, pp->first, pp->second);
                continue;
            }
            if (auto sv = detail::find_serial_vertex(g)) {
                steps.push_back({step_kind::serial, {*sv, -1, -1}});
                g = serial_reduce(g, *sv);
                continue;
            }
            return g;
        }
    };

    const int step_cap = 10000;
    while (static_cast<int>(trace.steps.size()) < step_cap) {
        if (is_k4_shape(cur)) {
            trace.reached_k4 = true;
            trace.end_key = detail::trace_key(cur);
            return trace;
        }
        {
            std::vector<reduction_step> sp;
            graph next = sp_closure(cur, sp);
            if (!sp.empty()) {
                trace.steps.insert(trace.steps.end(), sp.begin(), sp.end());
                cur = std::move(next);
                seen.insert(detail::trace_key(cur));
                continue;
            }
        }
        bool was_3conn = cur.is_simple() && cur.is_connected() &&
                         vertex_connectivity_at_least(cur, 3).at_least;
        bool advanced = false;
        for (int w = 0; w < cur.vertex_count() && !advanced; ++w) {
            if (cur.degree(w) != 3) continue;
            auto nb = cur.neighbors(w);
            if (nb[0] == nb[1] || nb[0] == nb[2] || nb[1] == nb[2]) continue;
            std::vector<reduction_step> steps{{step_kind::y_to_delta, {w, -1, -1}}};
            graph candidate = sp_closure(y_to_delta(cur, w), steps);
            if (was_3conn && !is_k4_shape(candidate) &&
                !(candidate.is_simple() && vertex_connectivity_at_least(candidate, 3).at_least))
                throw std::logic_error(
                    "reduce_to_k4: simple delta-wye reduction lost 3-connectedness");
#ifndef NDEBUG
            // Delta-wye steps preserve planarity structurally; re-check only
            // in debug builds.
            assert(candidate.vertex_count() == 0 ||
                   std::holds_alternative<embedding>(is_planar(candidate)));
#endif
            auto key = detail::trace_key(candidate);
            if (seen.count(key)) continue;
            seen.insert(key);
            trace.steps.insert(trace.steps.end(), steps.begin(), steps.end());
            cur = std::move(candidate);
            advanced = true;
        }
        if (advanced) continue;
        for (const auto& tri : detail::triangles(cur)) {
            std::vector<reduction_step> steps{{step_kind::delta_to_y, tri}};
            graph candidate = sp_closure(delta_to_y(cur, tri), steps);
            auto key = detail::trace_key(candidate);
            if (seen.count(key)) continue;
            seen.insert(key);
            trace.steps.insert(trace.steps.end(), steps.begin(), steps.end());
            cur = std::move(candidate);
            advanced = true;
            break;
        }
        if (!advanced) break;  // stuck
    }
    trace.reached_k4 = false;
    trace.end_key = detail::trace_key(cur);
    trace.stuck_graph = cur;
    return trace;
}

inline std::string format_trace(const reduction_trace& t) {
    std::ostringstream os;
    os << "start " << t.start_key.hex() << '\n';
    for (const auto& s : t.steps) os << format_step(s) << '\n';
    os << "end " << t.end_key.hex() << (t.reached_k4 ? " (K4)" : " (stuck)") << '\n';
    return os.str();
}

}  // namespace barnette
