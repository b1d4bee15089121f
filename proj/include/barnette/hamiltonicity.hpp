#pragma once
// Exhaustive, pruned search for Hamiltonian cycles and paths under edge
// constraints. Edge-state DFS (in/out/undecided) with propagation to a
// fixpoint: degree forcing, short-cycle exclusion, xor/or propagation,
// connectivity cut-off and the bipartite parity cut-off. "None" answers are
// exhaustive by construction; budget exhaustion is reported as inconclusive,
// never as "none".
#include <chrono>
#include <cstdint>
#include <numeric>

#include "barnette/checkers.hpp"
#include "barnette/graph.hpp"

namespace barnette {

struct constraint_set {
    std::vector<int> required;
    std::vector<int> forbidden;
    std::vector<std::pair<int, int>> xor_pairs;  // exactly one of each pair
    std::vector<std::vector<int>> or_sets;       // at least one of each set

    void check_well_formed(const graph& g) const {
        auto in_range = [&](int e) {
            if (e < 0 || e >= g.edge_count())
                throw std::invalid_argument("constraint references unknown edge id");
        };
        for (int e : required) in_range(e);
        for (int e : forbidden) in_range(e);
        for (auto [a, b] : xor_pairs) {
            in_range(a);
            in_range(b);
        }
        for (const auto& s : or_sets)
            for (int e : s) in_range(e);
        std::set<int> req(required.begin(), required.end());
        for (int e : forbidden)
            if (req.count(e)) throw std::invalid_argument("edge both required and forbidden");
    }
};

struct search_budget {
    std::uint64_t max_nodes = 1'000'000'000;
    double max_seconds = 600.0;
};

enum class ham_status { found, none, inconclusive };

struct ham_result {
    ham_status status = ham_status::none;
    std::vector<int> cycle_or_path;  // vertex sequence when found
    std::vector<int> used_edges;     // the exact edge ids (parallel-safe)
    std::uint64_t nodes_expanded = 0;
    double elapsed_seconds = 0.0;
};

namespace detail {

class ham_solver {
public:
    ham_solver(const graph& g, const constraint_set& c, search_budget budget)
        : g_(g), budget_(budget), n_(g.vertex_count()), m_(g.edge_count()) {
        c.check_well_formed(g_);
        state_.assign(m_, UNDECIDED);
        deg_in_.assign(n_, 0);
        deg_out_.assign(n_, 0);
        end_of_.resize(n_);
        std::iota(end_of_.begin(), end_of_.end(), 0);
        in_count_ = 0;
        xor_pairs_ = c.xor_pairs;
        or_sets_ = c.or_sets;
        for (int e : c.required) preset_.emplace_back(e, IN);
        for (int e : c.forbidden) preset_.emplace_back(e, OUT);
        // A loop is never on a Hamiltonian cycle of a graph with >= 2 vertices.
        for (int e = 0; e < m_; ++e)
            if (g_.edge(e).is_loop()) preset_.emplace_back(e, OUT);
    }

    // Runs the exhaustive search. on_cycle is invoked for every Hamiltonian
    // cycle satisfying the constraints; returning false stops the search
    // (used for existence queries).
    template <typename Callback>
    ham_status enumerate(Callback&& on_cycle) {
        start_ = std::chrono::steady_clock::now();
        nodes_ = 0;
        stopped_ = false;
        out_of_budget_ = false;
        if (n_ == 0 || n_ == 1) return ham_status::none;

        // Bipartite parity cut-off: unequal part sizes admit no cycle.
        auto bp = bipartition(g_);
        if (bp.coloring) {
            long balance = 0;
            for (char c : bp.coloring->color) balance += c ? 1 : -1;
            if (balance != 0) return ham_status::none;
        }

        bool ok = true;
        for (auto [e, s] : preset_)
            if (!assign(e, s)) ok = false;
        if (ok && propagate()) dfs(std::forward<Callback>(on_cycle));
        if (out_of_budget_) return ham_status::inconclusive;
        return found_any_ ? ham_status::found : ham_status::none;
    }

    std::uint64_t nodes_expanded() const { return nodes_; }
    double elapsed_seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    // Vertex sequence of the current complete assignment.
    std::vector<int> extract_cycle() const {
        std::vector<int> seq{0};
        int prev_edge = -1;
        int v = 0;
        do {
            int next_edge = -1;
            for (int e : g_.incident(v))
                if (state_[e] == IN && e != prev_edge) {
                    next_edge = e;
                    break;
                }
            if (next_edge < 0) throw std::logic_error("extract_cycle: broken assignment");
            v = g_.edge(next_edge).other(v);
            prev_edge = next_edge;
            if (v != 0) seq.push_back(v);
        } while (v != 0);
        return seq;
    }

    const std::vector<char>& edge_states() const { return state_; }

private:
    static constexpr char UNDECIDED = 0, IN = 1, OUT = 2;

    bool assign(int e, char s) {
        if (state_[e] == s) return true;
        if (state_[e] != UNDECIDED) return false;
        const auto& r = g_.edge(e);
        if (s == IN) {
            if (r.is_loop()) return false;
            if (deg_in_[r.u] >= 2 || deg_in_[r.v] >= 2) return false;
            int a = end_of_[r.u], b = end_of_[r.v];
            if (a == r.v) {
                // Closes the path through u and v into a cycle.
                if (in_count_ + 1 != n_) return false;
            } else {
                end_of_[a] = b;
                end_of_[b] = a;
            }
            ++deg_in_[r.u];
            ++deg_in_[r.v];
            ++in_count_;
        } else {
            ++deg_out_[r.u];
            ++deg_out_[r.v];
        }
        state_[e] = s;
        return true;
    }

    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < n_; ++v) {
                int deg = g_.degree(v);
                int free = deg - deg_in_[v] - deg_out_[v];
                if (deg_in_[v] > 2) return false;
                if (deg_in_[v] + free < 2) return false;
                if (deg_in_[v] == 2 && free > 0) {
                    for (int e : g_.incident(v))
                        if (state_[e] == UNDECIDED) {
                            if (!assign(e, OUT)) return false;
                            changed = true;
                        }
                } else if (deg_in_[v] < 2 && deg_in_[v] + free == 2) {
                    for (int e : g_.incident(v))
                        if (state_[e] == UNDECIDED) {
                            if (!assign(e, IN)) return false;
                            changed = true;
                        }
                }
            }
            // An undecided edge joining the two ends of one short path would
            // close a subcycle.
            if (in_count_ + 1 < n_) {
                for (int e = 0; e < m_; ++e) {
                    if (state_[e] != UNDECIDED) continue;
                    const auto& r = g_.edge(e);
                    if (deg_in_[r.u] == 1 && deg_in_[r.v] == 1 && end_of_[r.u] == r.v) {
                        if (!assign(e, OUT)) return false;
                        changed = true;
                    }
                }
            }
            for (auto [a, b] : xor_pairs_) {
                char sa = state_[a], sb = state_[b];
                if (sa == IN && sb == IN) return false;
                if (sa == OUT && sb == OUT) return false;
                if (sa != UNDECIDED && sb == UNDECIDED) {
                    if (!assign(b, sa == IN ? OUT : IN)) return false;
                    changed = true;
                } else if (sb != UNDECIDED && sa == UNDECIDED) {
                    if (!assign(a, sb == IN ? OUT : IN)) return false;
                    changed = true;
                }
            }
            for (const auto& s : or_sets_) {
                bool sat = false;
                int free = 0, last_free = -1;
                for (int e : s) {
                    if (state_[e] == IN) sat = true;
                    if (state_[e] == UNDECIDED) {
                        ++free;
                        last_free = e;
                    }
                }
                if (sat) continue;
                if (free == 0) return false;
                if (free == 1) {
                    if (!assign(last_free, IN)) return false;
                    changed = true;
                }
            }
        }
        // Not enough assignable edges left for a spanning cycle.
        int undecided = 0;
        for (char s : state_)
            if (s == UNDECIDED) ++undecided;
        if (in_count_ + undecided < n_) return false;
        return connected_on_usable();
    }

    bool connected_on_usable() const {
        if (n_ == 0) return true;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g_.incident(v)) {
                if (state_[e] == OUT) continue;
                int w = g_.edge(e).other(v);
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
            }
        }
        return cnt == n_;
    }

    int pick_branch_edge() const {
        // Extend an open path end when possible; deterministic tie-break by
        // vertex index then edge id.
        for (int v = 0; v < n_; ++v) {
            if (deg_in_[v] != 1) continue;
            for (int e : g_.incident(v))
                if (state_[e] == UNDECIDED) return e;
        }
        for (int v = 0; v < n_; ++v)
            for (int e : g_.incident(v))
                if (state_[e] == UNDECIDED) return e;
        return -1;
    }

    struct snapshot {
        std::vector<char> state;
        std::vector<int> deg_in, deg_out, end_of;
        int in_count;
    };

    snapshot save() const { return {state_, deg_in_, deg_out_, end_of_, in_count_}; }
    void restore(const snapshot& s) {
        state_ = s.state;
        deg_in_ = s.deg_in;
        deg_out_ = s.deg_out;
        end_of_ = s.end_of;
        in_count_ = s.in_count;
    }

    template <typename Callback>
    void dfs(Callback&& on_cycle) {
        if (stopped_ || out_of_budget_) return;
        if (++nodes_ > budget_.max_nodes ||
            (nodes_ % 4096 == 0 && elapsed_seconds() > budget_.max_seconds)) {
            out_of_budget_ = true;
            return;
        }
        int e = pick_branch_edge();
        if (e < 0) {
            if (in_count_ == n_) {
                for (int v = 0; v < n_; ++v)
                    if (deg_in_[v] != 2) return;
                found_any_ = true;
                if (!on_cycle(*this)) stopped_ = true;
            }
            return;
        }
        snapshot snap = save();
        for (char s : {IN, OUT}) {
            if (assign(e, s) && propagate()) dfs(on_cycle);
            restore(snap);
            if (stopped_ || out_of_budget_) return;
        }
    }

    const graph& g_;
    search_budget budget_;
    int n_, m_;
    std::vector<char> state_;
    std::vector<int> deg_in_, deg_out_, end_of_;
    int in_count_ = 0;
    std::vector<std::pair<int, int>> xor_pairs_;
    std::vector<std::vector<int>> or_sets_;
    std::vector<std::pair<int, char>> preset_;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false, out_of_budget_ = false, found_any_ = false;
    std::chrono::steady_clock::time_point start_;
};

// Cycle as set of edge ids from a vertex sequence; throws when a hop has no
// edge in g.
inline std::vector<int> cycle_edge_ids(const graph& g, const std::vector<int>& cycle) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        ids.push_back(g.require_edge(u, v));
    }
    return ids;
}

}  // namespace detail

// Do the constraints hold for this exact edge set?
inline bool constraints_satisfied(const constraint_set& c, const std::set<int>& on) {
    for (int e : c.required)
        if (!on.count(e)) return false;
    for (int e : c.forbidden)
        if (on.count(e)) return false;
    for (auto [a, b] : c.xor_pairs)
        if (on.count(a) + on.count(b) != 1) return false;
    for (const auto& s : c.or_sets) {
        bool sat = false;
        for (int e : s) sat = sat || on.count(e);
        if (!sat) return false;
    }
    return true;
}

// Edge-id set forming one spanning cycle; the parallel-safe validation.
inline bool validate_cycle_edges(const graph& g, const std::vector<int>& edge_ids,
                                 const constraint_set& c = {}) {
    int n = g.vertex_count();
    if (static_cast<int>(edge_ids.size()) != n || n < 2) return false;
    std::set<int> on(edge_ids.begin(), edge_ids.end());
    if (static_cast<int>(on.size()) != n) return false;
    std::vector<int> deg(n, 0);
    for (int e : on) {
        if (e < 0 || e >= g.edge_count() || g.edge(e).is_loop()) return false;
        ++deg[g.edge(e).u];
        ++deg[g.edge(e).v];
    }
    for (int v = 0; v < n; ++v)
        if (deg[v] != 2) return false;
    // Single cycle: walk from vertex 0 and count.
    int prev_edge = -1, v = 0, visited = 0;
    do {
        int next_edge = -1;
        for (int e : g.incident(v))
            if (on.count(e) && e != prev_edge) {
                next_edge = e;
                break;
            }
        if (next_edge < 0) return false;
        v = g.edge(next_edge).other(v);
        prev_edge = next_edge;
        ++visited;
    } while (v != 0 && visited <= n);
    if (v != 0 || visited != n) return false;
    return constraints_satisfied(c, on);
}

// Independent re-validation of a claimed constrained Hamiltonian cycle.
inline bool validate_ham_cycle(const graph& g, const std::vector<int>& cycle,
                               const constraint_set& c = {}) {
    if (static_cast<int>(cycle.size()) != g.vertex_count() || cycle.size() < 2) return false;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : cycle) {
        if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
        seen[v] = 1;
    }
    std::vector<int> ids;
    try {
        ids = detail::cycle_edge_ids(g, cycle);
    } catch (const std::invalid_argument&) {
        return false;
    }
    std::set<int> on(ids.begin(), ids.end());
    if (on.size() != cycle.size()) return false;
    return constraints_satisfied(c, on);
}

inline bool validate_ham_path(const graph& g, const std::vector<int>& path) {
    if (static_cast<int>(path.size()) != g.vertex_count() || path.empty()) return false;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : path) {
        if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1])) return false;
    return true;
}

inline ham_result find_ham_cycle(const graph& g, const constraint_set& c = {},
                                 search_budget budget = {}) {
    detail::ham_solver solver(g, c, budget);
    ham_result res;
    res.status = solver.enumerate([&](const detail::ham_solver& s) {
        res.cycle_or_path = s.extract_cycle();
        res.used_edges.clear();
        for (int e = 0; e < g.edge_count(); ++e)
            if (s.edge_states()[e] == 1) res.used_edges.push_back(e);
        return false;  // first witness wins
    });
    res.nodes_expanded = solver.nodes_expanded();
    res.elapsed_seconds = solver.elapsed_seconds();
    if (res.status == ham_status::found && !validate_cycle_edges(g, res.used_edges, c))
        throw std::logic_error("find_ham_cycle: solver produced an invalid cycle");
    return res;
}

// Open path, endpoints free: searched as a cycle through an apex vertex made
// adjacent to every vertex.
inline ham_result find_ham_path(const graph& g, const constraint_set& c = {},
                                search_budget budget = {}) {
    int n = g.vertex_count();
    ham_result res;
    if (n == 0) {
        res.status = ham_status::none;
        return res;
    }
    if (n == 1) {
        res.status = ham_status::found;
        res.cycle_or_path = {0};
        return res;
    }
    auto bp = bipartition(g);
    if (bp.coloring) {
        long balance = 0;
        for (char col : bp.coloring->color) balance += col ? 1 : -1;
        if (std::abs(balance) >= 2) {
            res.status = ham_status::none;  // parity: a path alternates colors
            return res;
        }
    }
    graph h(n + 1);
    for (const auto& r : g.edges()) h.add_edge(r.u, r.v);
    for (int v = 0; v < n; ++v) h.add_edge(v, n);
    detail::ham_solver solver(h, c, budget);
    std::vector<int> apex_cycle;
    res.status = solver.enumerate([&](const detail::ham_solver& s) {
        apex_cycle = s.extract_cycle();
        res.used_edges.clear();
        for (int e = 0; e < g.edge_count(); ++e)  // apex edges have higher ids
            if (s.edge_states()[e] == 1) res.used_edges.push_back(e);
        return false;
    });
    res.nodes_expanded = solver.nodes_expanded();
    res.elapsed_seconds = solver.elapsed_seconds();
    if (res.status == ham_status::found) {
        auto it = std::find(apex_cycle.begin(), apex_cycle.end(), n);
        std::vector<int> path(it + 1, apex_cycle.end());
        path.insert(path.end(), apex_cycle.begin(), it);
        res.cycle_or_path = std::move(path);
        if (!validate_ham_path(g, res.cycle_or_path))
            throw std::logic_error("find_ham_path: solver produced an invalid path");
        std::set<int> on(res.used_edges.begin(), res.used_edges.end());
        if (!constraints_satisfied(c, on))
            throw std::logic_error("find_ham_path: constraints violated");
    }
    return res;
}

struct ham_count {
    std::uint64_t total = 0;
    std::vector<std::uint64_t> per_edge;
    bool exhaustive = false;  // false: budget ran out, counts are partial
    std::uint64_t nodes_expanded = 0;
};

inline ham_count count_ham_cycles(const graph& g, search_budget budget = {}) {
    detail::ham_solver solver(g, {}, budget);
    ham_count out;
    out.per_edge.assign(g.edge_count(), 0);
    auto status = solver.enumerate([&](const detail::ham_solver& s) {
        ++out.total;
        const auto& st = s.edge_states();
        for (int e = 0; e < g.edge_count(); ++e)
            if (st[e] == 1) ++out.per_edge[e];
        return true;  // keep enumerating
    });
    out.exhaustive = status != ham_status::inconclusive;
    out.nodes_expanded = solver.nodes_expanded();
    return out;
}

// Enumerates all Hamiltonian cycles (as sorted edge-id sets). Only for small
// hosts; exhaustive unless the budget interferes, in which case it throws.
inline std::vector<std::vector<int>> all_ham_cycles(const graph& g, search_budget budget = {}) {
    detail::ham_solver solver(g, {}, budget);
    std::vector<std::vector<int>> cycles;
    auto status = solver.enumerate([&](const detail::ham_solver& s) {
        std::vector<int> ids;
        const auto& st = s.edge_states();
        for (int e = 0; e < g.edge_count(); ++e)
            if (st[e] == 1) ids.push_back(e);
        cycles.push_back(std::move(ids));
        return true;
    });
    if (status == ham_status::inconclusive)
        throw std::runtime_error("all_ham_cycles: budget exhausted");
    return cycles;
}

struct ham_classification {
    bool h = false, h_plus = false, h_minus = false, h_plus_minus = false;
    bool complete = true;  // false: budget ran out, flags are partial
    // h_star is intentionally not computed; its defining quantification is
    // ambiguous, so it stays a documented placeholder.
    std::vector<std::pair<std::vector<int>, std::string>> witness_failures;
};

inline ham_classification classify(const graph& g, search_budget budget = {}) {
    if (!is_cubic(g)) throw std::invalid_argument("classify: graph must be cubic");
    ham_classification out;
    auto run = [&](const constraint_set& c, const std::vector<int>& spec,
                   const char* marker) -> bool {
        auto r = find_ham_cycle(g, c, budget);
        if (r.status == ham_status::inconclusive) {
            out.complete = false;
            out.witness_failures.push_back({spec, "inconclusive"});
            return false;
        }
        if (r.status == ham_status::none) {
            out.witness_failures.push_back({spec, marker});
            return false;
        }
        return true;
    };
    out.h = run({}, {}, "no-cycle");
    if (!out.h) return out;
    out.h_plus = true;
    out.h_minus = true;
    for (int e = 0; e < g.edge_count() && out.complete; ++e) {
        constraint_set use, avoid;
        use.required = {e};
        avoid.forbidden = {e};
        if (!run(use, {e}, "no-cycle-through")) out.h_plus = false;
        if (!run(avoid, {e}, "no-cycle-avoiding")) out.h_minus = false;
    }
    out.h_plus_minus = out.h_plus && out.h_minus;
    for (int e1 = 0; e1 < g.edge_count() && out.h_plus_minus && out.complete; ++e1)
        for (int e2 = 0; e2 < g.edge_count() && out.h_plus_minus && out.complete; ++e2) {
            if (e1 == e2) continue;
            constraint_set c;
            c.required = {e1};
            c.forbidden = {e2};
            if (!run(c, {e1, e2}, "no-cycle-through-avoiding")) out.h_plus_minus = false;
        }
    return out;
}

// Non-cycle edges of a Hamiltonian cycle in a cubic graph form a perfect
// matching.
inline std::vector<int> matching_complement(const graph& g, const std::vector<int>& cycle) {
    if (!is_cubic(g)) throw std::invalid_argument("matching_complement: graph must be cubic");
    if (!validate_ham_cycle(g, cycle))
        throw std::invalid_argument("matching_complement: not a Hamiltonian cycle of g");
    auto ids = detail::cycle_edge_ids(g, cycle);
    std::set<int> on(ids.begin(), ids.end());
    std::vector<int> matching;
    std::vector<int> matched(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (on.count(e)) continue;
        matching.push_back(e);
        ++matched[g.edge(e).u];
        ++matched[g.edge(e).v];
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (matched[v] != 1) throw std::logic_error("matching_complement: not a perfect matching");
    return matching;
}

}  // namespace barnette
