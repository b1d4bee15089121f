#pragma once
// Labeled multigraph with dense edge ids. Loops and parallel edges are
// first-class; simplicity is asserted at module boundaries, not here.
#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace barnette {

struct edge_record {
    int u = -1, v = -1;  // unordered pair; u == v permitted (loop)

    int other(int w) const {
        if (w == u) return v;
        if (w == v) return u;
        throw std::invalid_argument("edge_record::other: vertex not an endpoint");
    }
    bool is_loop() const { return u == v; }
    bool joins(int a, int b) const { return (u == a && v == b) || (u == b && v == a); }
};

class graph {
public:
    graph() = default;
    explicit graph(int n) : n_(n), inc_(n) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const edge_record& edge(int id) const { return edges_.at(id); }
    const std::vector<edge_record>& edges() const { return edges_; }
    const std::vector<int>& incident(int v) const { return inc_.at(v); }

    int degree(int v) const { return static_cast<int>(inc_.at(v).size()); }

    int add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("add_edge: endpoint out of range");
        int id = edge_count();
        edges_.push_back({u, v});
        inc_[u].push_back(id);
        inc_[v].push_back(id);  // loop appears twice at its vertex
        return id;
    }

    // Degree-ordered neighbor walk; parallel edges repeat the neighbor.
    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        out.reserve(inc_.at(v).size());
        for (int e : inc_[v]) out.push_back(edges_[e].other(v));
        return out;
    }

    bool has_edge(int u, int v) const { return find_edge(u, v).has_value(); }

    std::optional<int> find_edge(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
        for (int e : inc_[u])
            if (edges_[e].joins(u, v)) return e;
        return std::nullopt;
    }

    int require_edge(int u, int v) const {
        auto e = find_edge(u, v);
        if (!e) {
            std::ostringstream os;
            os << "no edge between " << u << " and " << v;
            throw std::invalid_argument(os.str());
        }
        return *e;
    }

    bool is_simple() const {
        for (const auto& e : edges_)
            if (e.is_loop()) return false;
        for (int v = 0; v < n_; ++v) {
            auto nb = neighbors(v);
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
        }
        return true;
    }

    bool is_connected() const {
        if (n_ == 0) return true;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : inc_[v]) {
                int w = edges_[e].other(v);
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
            }
        }
        return cnt == n_;
    }

    // Incidence / id invariants; loops count twice in the degree sum.
    void check_consistency() const {
        std::size_t half_edges = 0;
        for (int v = 0; v < n_; ++v) {
            half_edges += inc_[v].size();
            for (int e : inc_[v]) {
                if (e < 0 || e >= edge_count()) throw std::logic_error("bad edge id in incidence");
                const auto& r = edges_[e];
                if (r.u != v && r.v != v) throw std::logic_error("incidence does not match edge");
            }
        }
        if (half_edges != 2 * edges_.size()) throw std::logic_error("degree sum mismatch");
    }

private:
    int n_ = 0;
    std::vector<edge_record> edges_;
    std::vector<std::vector<int>> inc_;
};

// Per-vertex 2-coloring; produced by checkers::bipartition which validates it.
struct bipartition_t {
    std::vector<char> color;  // 0 = black, 1 = white
};

inline graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs, bool one_based) {
    graph g(n);
    int base = one_based ? 1 : 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        int u = pairs[i].first - base;
        int v = pairs[i].second - base;
        if (u < 0 || u >= n || v < 0 || v >= n) {
            std::ostringstream os;
            os << "from_edge_list: pair #" << i + 1 << " (" << pairs[i].first << ","
               << pairs[i].second << ") out of range for n=" << n;
            throw std::invalid_argument(os.str());
        }
        g.add_edge(u, v);
    }
    return g;
}

struct deletion_result {
    graph g;
    std::vector<int> old_to_new;  // -1 for deleted vertices
    std::vector<int> new_to_old;
    std::vector<int> edge_old_to_new;  // -1 for removed edges
};

inline deletion_result delete_vertices(const graph& g, const std::vector<int>& vs) {
    std::vector<char> del(g.vertex_count(), 0);
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("delete_vertices: vertex out of range");
        del[v] = 1;
    }
    deletion_result r;
    r.old_to_new.assign(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!del[v]) {
            r.old_to_new[v] = static_cast<int>(r.new_to_old.size());
            r.new_to_old.push_back(v);
        }
    r.g = graph(static_cast<int>(r.new_to_old.size()));
    r.edge_old_to_new.assign(g.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& rec = g.edge(e);
        if (del[rec.u] || del[rec.v]) continue;
        r.edge_old_to_new[e] = r.g.add_edge(r.old_to_new[rec.u], r.old_to_new[rec.v]);
    }
    return r;
}

// Endpoints merged into one vertex; loops arising from parallel edges are kept.
inline graph contract_edge(const graph& g, int e) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("contract_edge: bad edge id");
    const auto rec = g.edge(e);
    if (rec.is_loop()) throw std::invalid_argument("contract_edge: cannot contract a loop");
    int keep = std::min(rec.u, rec.v), drop = std::max(rec.u, rec.v);
    graph out(g.vertex_count() - 1);
    auto remap = [&](int v) {
        if (v == drop) v = keep;
        return v > drop ? v - 1 : v;
    };
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == e) continue;
        out.add_edge(remap(g.edge(i).u), remap(g.edge(i).v));
    }
    return out;
}

enum class export_format { edge_list, dot };

// Edge-list text: first line "n m", then one "u v" line per edge, 1-based.
inline std::string export_graph(const graph& g, export_format fmt) {
    std::ostringstream os;
    if (fmt == export_format::edge_list) {
        os << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (const auto& e : g.edges()) os << e.u + 1 << ' ' << e.v + 1 << '\n';
    } else {
        os << "graph G {\n";
        for (int v = 0; v < g.vertex_count(); ++v) os << "  v" << v + 1 << ";\n";
        for (const auto& e : g.edges()) os << "  v" << e.u + 1 << " -- v" << e.v + 1 << ";\n";
        os << "}\n";
    }
    return os.str();
}

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Inverse of export_graph(edge_list). '#' starts a comment; blank lines skipped.
inline graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    auto next_data_line = [&](std::string& out) {
        while (std::getline(in, raw)) {
            ++lineno;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            bool blank = raw.find_first_not_of(" \t\r\n") == std::string::npos;
            if (blank) continue;
            out = raw;
            return true;
        }
        return false;
    };
    std::string line;
    if (!next_data_line(line)) throw parse_error(lineno, "missing header");
    std::istringstream hs(line);
    long long n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0) throw parse_error(lineno, "bad header, expected 'n m'");
    std::string trail;
    if (hs >> trail) throw parse_error(lineno, "trailing tokens in header");
    graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(line)) throw parse_error(lineno, "unexpected end of file");
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v)) throw parse_error(lineno, "bad edge line, expected 'u v'");
        if (ls >> trail) throw parse_error(lineno, "trailing tokens in edge line");
        if (u < 1 || u > n || v < 1 || v > n) throw parse_error(lineno, "vertex index out of range");
        g.add_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
    }
    if (next_data_line(line)) throw parse_error(lineno, "trailing data after edge list");
    return g;
}

}  // namespace barnette
