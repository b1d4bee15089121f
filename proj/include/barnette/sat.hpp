#pragma once
// Reduction from width-3 CNF satisfiability to constrained Hamiltonicity.
// The skeleton is one long cycle with a doubled rung per variable polarity
// and per clause literal; xor/or constraints over those rungs carry the
// logic. The or-module and crossing internals stay abstract constraints;
// only the xor module has a concrete cubic expansion.
#include "barnette/fragments.hpp"
#include "barnette/hamiltonicity.hpp"

namespace barnette {

struct literal {
    int var = 0;
    bool negated = false;
};

struct sat_formula {
    int variable_count = 0;
    std::vector<std::array<literal, 3>> clauses;

    void check_well_formed() const {
        for (const auto& cl : clauses)
            for (const auto& l : cl)
                if (l.var < 0 || l.var >= variable_count)
                    throw std::invalid_argument("sat_formula: literal variable out of range");
    }

    bool evaluate(const std::vector<bool>& assignment) const {
        for (const auto& cl : clauses) {
            bool sat = false;
            for (const auto& l : cl) sat = sat || (assignment[l.var] != l.negated);
            if (!sat) return false;
        }
        return true;
    }
};

enum class edge_role : char {
    variable_rail_labeled,    // the copy paired in the per-variable xor
    variable_rail_connected,  // the copy the clause xors attach to
    literal_labeled,          // clause-pair copy paired with the variable
    literal_or,               // clause-pair copy feeding the 3-input or
    chain,
    connector
};

enum class reduction_mode { cycle, path };

struct reduction_instance {
    sat_formula formula;
    reduction_mode mode = reduction_mode::cycle;
    graph skeleton;
    constraint_set constraints;
    std::vector<edge_role> roles;  // per edge id
    // Bookkeeping for encode/decode.
    std::vector<std::array<int, 2>> var_rail_true;   // per var: {labeled, connected} of x-rail
    std::vector<std::array<int, 2>> var_rail_false;  // per var: same for the negated rail
    std::vector<std::array<std::pair<int, int>, 3>> clause_pairs;  // per clause: {labeled, or}
    std::array<int, 2> connectors{-1, -1};
};

// Vertices: 4 per variable then 6 per clause. Each adjacent pair on a rail
// is doubled; chains stitch rails together and two connectors close the big
// cycle through the clause side.
inline reduction_instance build_instance(const sat_formula& f,
                                         reduction_mode mode = reduction_mode::cycle) {
    f.check_well_formed();
    int n = f.variable_count, m = static_cast<int>(f.clauses.size());
    reduction_instance ri;
    ri.formula = f;
    ri.mode = mode;
    graph g(4 * n + 6 * m);
    auto vv = [&](int i, int k) { return 4 * i + k; };          // v_{i,k+1}
    auto ww = [&](int j, int k) { return 4 * n + 6 * j + k; };  // w_{j,k+1}
    std::vector<edge_role> roles;
    auto add = [&](int u, int v, edge_role r) {
        int e = g.add_edge(u, v);
        roles.push_back(r);
        return e;
    };
    ri.var_rail_true.resize(n);
    ri.var_rail_false.resize(n);
    for (int i = 0; i < n; ++i) {
        ri.var_rail_true[i] = {add(vv(i, 0), vv(i, 1), edge_role::variable_rail_labeled),
                               add(vv(i, 0), vv(i, 1), edge_role::variable_rail_connected)};
        add(vv(i, 1), vv(i, 2), edge_role::chain);
        ri.var_rail_false[i] = {add(vv(i, 2), vv(i, 3), edge_role::variable_rail_labeled),
                                add(vv(i, 2), vv(i, 3), edge_role::variable_rail_connected)};
        if (i + 1 < n) add(vv(i, 3), vv(i + 1, 0), edge_role::chain);
    }
    ri.clause_pairs.resize(m);
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < 3; ++k) {
            ri.clause_pairs[j][k] = {add(ww(j, 2 * k), ww(j, 2 * k + 1), edge_role::literal_labeled),
                                     add(ww(j, 2 * k), ww(j, 2 * k + 1), edge_role::literal_or)};
            if (k < 2) add(ww(j, 2 * k + 1), ww(j, 2 * k + 2), edge_role::chain);
        }
        if (j + 1 < m) add(ww(j, 5), ww(j + 1, 0), edge_role::chain);
    }
    if (n > 0 && m > 0) {
        ri.connectors = {add(vv(0, 0), ww(0, 0), edge_role::connector),
                         add(vv(n - 1, 3), ww(m - 1, 5), edge_role::connector)};
    }
    // Per variable: exactly one labeled rail copy on any cycle.
    for (int i = 0; i < n; ++i)
        ri.constraints.xor_pairs.push_back({ri.var_rail_true[i][0], ri.var_rail_false[i][0]});
    // Per literal occurrence: clause labeled copy against the matching
    // connected variable copy.
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < 3; ++k) {
            const literal& l = f.clauses[j][k];
            int var_edge =
                l.negated ? ri.var_rail_false[l.var][1] : ri.var_rail_true[l.var][1];
            ri.constraints.xor_pairs.push_back({var_edge, ri.clause_pairs[j][k].first});
        }
    // Per clause: at least one or-copy used.
    for (int j = 0; j < m; ++j)
        ri.constraints.or_sets.push_back({ri.clause_pairs[j][0].second,
                                          ri.clause_pairs[j][1].second,
                                          ri.clause_pairs[j][2].second});
    if (ri.connectors[0] >= 0) {
        if (mode == reduction_mode::cycle)
            ri.constraints.or_sets.push_back({ri.connectors[0], ri.connectors[1]});
        else
            ri.constraints.xor_pairs.push_back({ri.connectors[0], ri.connectors[1]});
    }
    ri.skeleton = std::move(g);
    ri.roles = std::move(roles);
    return ri;
}

struct encoded_traversal {
    std::vector<int> vertices;
    std::vector<int> edge_ids;  // the exact copies used; rails are doubled
};

// Constructive traversal for a satisfying assignment: rails pick the copy
// their truth value dictates, clause pairs pick the or-copy exactly when the
// literal is true, chains and connectors fill in the rest.
inline encoded_traversal encode_assignment(const reduction_instance& ri,
                                           const std::vector<bool>& assignment) {
    const sat_formula& f = ri.formula;
    if (static_cast<int>(assignment.size()) != f.variable_count)
        throw std::invalid_argument("encode_assignment: wrong assignment size");
    if (!f.evaluate(assignment))
        throw std::invalid_argument("encode_assignment: assignment does not satisfy the formula");
    if (f.variable_count == 0 || f.clauses.empty())
        throw std::invalid_argument("encode_assignment: degenerate instance has no cycle");
    const graph& g = ri.skeleton;
    std::set<int> chosen;
    for (int e = 0; e < g.edge_count(); ++e)
        if (ri.roles[e] == edge_role::chain) chosen.insert(e);
    for (int i = 0; i < f.variable_count; ++i) {
        chosen.insert(assignment[i] ? ri.var_rail_true[i][1] : ri.var_rail_true[i][0]);
        chosen.insert(assignment[i] ? ri.var_rail_false[i][0] : ri.var_rail_false[i][1]);
    }
    for (std::size_t j = 0; j < f.clauses.size(); ++j)
        for (int k = 0; k < 3; ++k) {
            const literal& l = f.clauses[j][k];
            bool lit_true = assignment[l.var] != l.negated;
            chosen.insert(lit_true ? ri.clause_pairs[j][k].second : ri.clause_pairs[j][k].first);
        }
    chosen.insert(ri.connectors[1]);
    bool path_mode = ri.mode == reduction_mode::path;
    if (!path_mode) chosen.insert(ri.connectors[0]);
    // Stitch the chosen edges into a vertex sequence; vertex 0 is a path
    // endpoint in path mode.
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (int e : chosen) {
        adj[g.edge(e).u].push_back(e);
        adj[g.edge(e).v].push_back(e);
    }
    std::vector<int> seq{0};
    int prev_edge = -1, v = 0;
    for (int steps = 0; steps + 1 < g.vertex_count(); ++steps) {
        int next_edge = -1;
        for (int e : adj[v])
            if (e != prev_edge) next_edge = e;
        if (next_edge < 0) throw std::logic_error("encode_assignment: traversal broke");
        v = g.edge(next_edge).other(v);
        prev_edge = next_edge;
        seq.push_back(v);
    }
    encoded_traversal out{std::move(seq), {chosen.begin(), chosen.end()}};
    bool ok = path_mode ? validate_ham_path(g, out.vertices) &&
                              constraints_satisfied(ri.constraints, chosen)
                        : validate_cycle_edges(g, out.edge_ids, ri.constraints);
    if (!ok) throw std::logic_error("encode_assignment: constructed traversal is invalid");
    return out;
}

// A variable is true exactly when the clause-connected copy of its positive
// rail is used. Takes the exact edge-id set: vertex sequences cannot tell
// parallel rail copies apart.
inline std::vector<bool> decode_assignment(const reduction_instance& ri,
                                           const std::vector<int>& edge_ids) {
    const graph& g = ri.skeleton;
    std::set<int> on(edge_ids.begin(), edge_ids.end());
    bool ok;
    if (ri.mode == reduction_mode::cycle) {
        ok = validate_cycle_edges(g, edge_ids, ri.constraints);
    } else {
        // Spanning open path with the constraints.
        std::vector<int> deg(g.vertex_count(), 0);
        int ends = 0;
        ok = static_cast<int>(on.size()) == g.vertex_count() - 1;
        for (int e : on) {
            ++deg[g.edge(e).u];
            ++deg[g.edge(e).v];
        }
        for (int v = 0; v < g.vertex_count() && ok; ++v) {
            if (deg[v] == 1)
                ++ends;
            else if (deg[v] != 2)
                ok = false;
        }
        ok = ok && ends == 2 && constraints_satisfied(ri.constraints, on);
    }
    if (!ok) throw std::invalid_argument("decode_assignment: traversal violates the constraints");
    std::vector<bool> assignment(ri.formula.variable_count);
    for (int i = 0; i < ri.formula.variable_count; ++i)
        assignment[i] = on.count(ri.var_rail_true[i][1]) > 0;
    if (!ri.formula.evaluate(assignment))
        throw std::logic_error("decode_assignment: decoded assignment does not satisfy");
    return assignment;
}

struct solve_outcome {
    ham_status status = ham_status::none;
    std::vector<bool> assignment;
    std::vector<int> traversal;
    std::vector<int> used_edges;
};

inline solve_outcome solve_instance(const reduction_instance& ri, search_budget budget = {}) {
    solve_outcome out;
    if (ri.formula.clauses.empty()) {
        // Empty conjunction: trivially satisfiable, nothing to traverse.
        out.status = ham_status::found;
        out.assignment.assign(ri.formula.variable_count, false);
        return out;
    }
    auto res = ri.mode == reduction_mode::cycle
                   ? find_ham_cycle(ri.skeleton, ri.constraints, budget)
                   : find_ham_path(ri.skeleton, ri.constraints, budget);
    out.status = res.status;
    if (res.status == ham_status::found) {
        out.traversal = res.cycle_or_path;
        out.used_edges = res.used_edges;
        out.assignment = decode_assignment(ri, res.used_edges);
    }
    return out;
}

// Vertex budget of the fully concrete construction: skeleton, one xor module
// per variable, per literal occurrence and for the connector pair, one
// or-module per clause, one crossing module per edge crossing.
inline long long size_estimate(const sat_formula& f, long long crossings = 0) {
    long long n = f.variable_count, m = static_cast<long long>(f.clauses.size());
    long long occurrences = 3 * m;
    return 4 * n + 6 * m + 36 * (n + occurrences + 1) + 510 * m + 152 * crossings;
}

enum class xor_variant { tait, tutte_conj };

// Concrete xor module replacing two vertex-disjoint edges: two 4-rung rails
// with a required-edge fragment spliced into the lower rail under each outer
// rung. tait uses the 15-vertex planar fragments (module adds 36 vertices),
// tutte_conj the 31-vertex bipartite ones.
inline graph expand_xor_concrete(const graph& g, std::pair<int, int> pair_edges,
                                 xor_variant variant = xor_variant::tait) {
    auto [e1, e2] = pair_edges;
    if (e1 == e2) throw std::invalid_argument("expand_xor_concrete: need two distinct edges");
    {
        const auto &a = g.edge(e1), &b = g.edge(e2);
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
            throw std::invalid_argument("expand_xor_concrete: edges must be vertex-disjoint");
    }
    fragment frag =
        variant == xor_variant::tait ? named::tutte_fragment() : named::horton_fragment();
    const int fsz = frag.g.vertex_count();
    int u1 = g.edge(e1).u, u1p = g.edge(e1).v;
    int u2 = g.edge(e2).u, u2p = g.edge(e2).v;
    if (variant == xor_variant::tutte_conj) {
        // The module forces its two entry vertices onto opposite sides; on a
        // bipartite host, orient the second edge accordingly.
        auto bp = bipartition(g);
        if (bp.coloring && bp.coloring->color[u1] == bp.coloring->color[u2]) std::swap(u2, u2p);
    }
    int n = g.vertex_count();
    // New vertices: top rail B1 C1 D1 E1, bottom C2 D2, then two fragments.
    int B1 = n, C1 = n + 1, D1 = n + 2, E1 = n + 3, C2 = n + 4, D2 = n + 5;
    int f1 = n + 6, f2 = n + 6 + fsz;
    graph out(n + 6 + 2 * fsz);
    for (int e = 0; e < g.edge_count(); ++e)
        if (e != e1 && e != e2) out.add_edge(g.edge(e).u, g.edge(e).v);
    for (int base : {f1, f2})
        for (const auto& e : frag.g.edges()) out.add_edge(base + e.u, base + e.v);
    char req = frag.required_label.value();
    char sb = 'b', sc = 'c';
    // Top rail.
    out.add_edge(u1, B1);
    out.add_edge(B1, C1);
    out.add_edge(C1, D1);
    out.add_edge(D1, E1);
    out.add_edge(E1, u1p);
    // Bottom rail through the fragments.
    out.add_edge(u2, f1 + frag.stub(sb));
    out.add_edge(f1 + frag.stub(sc), C2);
    out.add_edge(C2, D2);
    out.add_edge(D2, f2 + frag.stub(sb));
    out.add_edge(f2 + frag.stub(sc), u2p);
    // Rungs; the outer two meet the required stubs.
    out.add_edge(B1, f1 + frag.stub(req));
    out.add_edge(C1, C2);
    out.add_edge(D1, D2);
    out.add_edge(E1, f2 + frag.stub(req));
    if (variant == xor_variant::tait && out.vertex_count() - n != 36)
        throw std::logic_error("expand_xor_concrete: module size is off");
    return out;
}

// DIMACS-style parser restricted to width 3: "p cnf <vars> <clauses>" then
// three nonzero literals and a 0 per clause line; 'c' lines are comments.
inline sat_formula parse_dimacs3(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    sat_formula f;
    int expected_clauses = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c") continue;
        if (first == "p") {
            std::string kind;
            long long nv = -1, nc = -1;
            if (!(ls >> kind >> nv >> nc) || kind != "cnf" || nv < 0 || nc < 0)
                throw parse_error(lineno, "bad problem line, expected 'p cnf <vars> <clauses>'");
            f.variable_count = static_cast<int>(nv);
            expected_clauses = static_cast<int>(nc);
            continue;
        }
        std::vector<long long> lits;
        try {
            lits.push_back(std::stoll(first));
        } catch (const std::exception&) {
            throw parse_error(lineno, "expected a literal, got '" + first + "'");
        }
        long long x;
        while (ls >> x) lits.push_back(x);
        if (lits.empty() || lits.back() != 0)
            throw parse_error(lineno, "clause line must end with 0");
        lits.pop_back();
        if (lits.size() != 3) throw parse_error(lineno, "exactly 3 literals per clause");
        std::array<literal, 3> cl;
        for (int k = 0; k < 3; ++k) {
            long long v = lits[k];
            if (v == 0 || std::abs(v) > f.variable_count)
                throw parse_error(lineno, "literal out of range");
            cl[k] = {static_cast<int>(std::abs(v)) - 1, v < 0};
        }
        f.clauses.push_back(cl);
    }
    if (expected_clauses >= 0 && expected_clauses != static_cast<int>(f.clauses.size()))
        throw parse_error(lineno, "clause count does not match the problem line");
    return f;
}

// Instance text: edge list then one line per constraint.
inline std::string export_instance(const reduction_instance& ri) {
    std::ostringstream os;
    os << export_graph(ri.skeleton, export_format::edge_list);
    for (auto [a, b] : ri.constraints.xor_pairs) os << "XOR " << a + 1 << ' ' << b + 1 << '\n';
    for (const auto& s : ri.constraints.or_sets) {
        os << "OR";
        for (int e : s) os << ' ' << e + 1;
        os << '\n';
    }
    return os.str();
}

}  // namespace barnette
