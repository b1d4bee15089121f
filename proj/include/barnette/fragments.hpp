#pragma once
// Constructors for the named graphs and three-stub fragments of the
// counterexample zoo, plus brute-force verification of their defining
// traversal properties. Adjacency data is spelled out per constructor;
// cheap structural assertions run at construction time.
#include <array>

#include "barnette/checkers.hpp"
#include "barnette/hamiltonicity.hpp"

namespace barnette {

// A fragment is a graph with three degree-2 boundary vertices ("stubs"),
// labeled a/b/c; attaching an outside edge restores degree 3. At most one
// label is marked required: every spanning traversal must enter there.
struct fragment {
    graph g;
    std::array<std::pair<int, char>, 3> stubs;  // (vertex, label)
    std::optional<char> required_label;

    int stub(char label) const {
        for (auto [v, l] : stubs)
            if (l == label) return v;
        throw std::invalid_argument("fragment: unknown stub label");
    }

    void check() const {
        for (auto [v, l] : stubs) {
            (void)l;
            if (g.degree(v) != 2)
                throw std::logic_error("fragment: stub vertex is not degree 2");
        }
    }
};

namespace named {

inline graph cube_c1() {
    // Outer square 0..3, inner square 4..7, spokes.
    return from_edge_list(8,
                          {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
                           {0, 4}, {1, 5}, {2, 6}, {3, 7}},
                          false);
}

// One Hamiltonian cycle of the cube, as drawn.
inline std::vector<int> cube_ham_cycle() { return {0, 1, 5, 6, 2, 3, 7, 4}; }

inline graph k4() {
    return from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, false);
}

inline graph k33() {
    graph g(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) g.add_edge(u, v);
    return g;
}

// Inner pentagon A..E = 0..4, outer pentagon F..J = 5..9.
inline graph pentagonal_prism() {
    return from_edge_list(10,
                          {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},   // A-B-C-D-E-A
                           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},   // spokes
                           {9, 8}, {8, 7}, {7, 6}, {6, 5}, {5, 9}},  // J-I-H-G-F-J
                          false);
}

// The drawn Hamiltonian cycle A-B-G-F-J-I-H-C-D-E.
inline std::vector<int> pentagonal_prism_ham_cycle() { return {0, 1, 6, 5, 9, 8, 7, 2, 3, 4}; }

inline graph grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid: dimensions must be positive");
    graph g(rows * cols);
    auto at = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(at(r, c), at(r, c + 1));
            if (r + 1 < rows) g.add_edge(at(r, c), at(r + 1, c));
        }
    return g;
}

// Ladders: rails 0..cols-1 and cols..2cols-1 plus rungs.
inline graph ladder(int cols) {
    graph g(2 * cols);
    for (int c = 0; c + 1 < cols; ++c) {
        g.add_edge(c, c + 1);
        g.add_edge(cols + c, cols + c + 1);
    }
    for (int c = 0; c < cols; ++c) g.add_edge(c, cols + c);
    return g;
}

inline graph r1() { return ladder(3); }
inline graph r2() { return ladder(4); }

// 15 vertices A B C D E G I J K L M N O P Q = 0..14; stubs Q (required), M, K.
inline fragment tutte_fragment() {
    constexpr int A = 0, B = 1, C = 2, D = 3, E = 4, G = 5, I = 6, J = 7, K = 8, L = 9, M = 10,
                  N = 11, O = 12, P = 13, Q = 14;
    graph g = from_edge_list(15,
                             {{A, B}, {B, C}, {C, D}, {D, E}, {E, A}, {A, L}, {B, G},
                              {C, O}, {D, I}, {E, J}, {O, P}, {O, N}, {M, J}, {J, I},
                              {I, P}, {P, Q}, {Q, N}, {N, G}, {G, K}, {K, L}, {L, M}},
                             false);
    fragment f{std::move(g), {{{Q, 'a'}, {M, 'b'}, {K, 'c'}}}, 'a'};
    f.check();
    return f;
}

// Three Tutte fragments, tops joined in a hub, bottoms chained in a ring.
inline graph tutte_46() {
    auto frag = tutte_fragment();
    const int sz = frag.g.vertex_count();
    graph g(3 * sz + 1);
    int hub = 3 * sz;
    for (int copy = 0; copy < 3; ++copy) {
        int base = copy * sz;
        for (const auto& e : frag.g.edges()) g.add_edge(base + e.u, base + e.v);
        g.add_edge(base + frag.stub('a'), hub);
    }
    for (int copy = 0; copy < 3; ++copy)
        g.add_edge(copy * sz + frag.stub('c'), ((copy + 1) % 3) * sz + frag.stub('b'));
    if (g.vertex_count() != 46 || g.edge_count() != 69 || !is_cubic(g))
        throw std::logic_error("tutte_46: transcription is inconsistent");
    return g;
}

inline graph bbl_38() {
    static const std::vector<std::pair<int, int>> lines = {
        {1, 2},   {1, 4},   {1, 18},  {2, 3},   {2, 6},   {3, 8},   {3, 20},  {4, 5},
        {4, 11},  {5, 6},   {5, 9},   {6, 7},   {7, 8},   {7, 10},  {8, 14},  {9, 10},
        {9, 11},  {10, 13}, {11, 12}, {12, 13}, {12, 15}, {13, 14}, {14, 15}, {15, 16},
        {16, 17}, {16, 19}, {17, 18}, {17, 22}, {18, 21}, {19, 20}, {19, 23}, {20, 38},
        {21, 22}, {21, 36}, {22, 23}, {23, 24}, {24, 25}, {24, 27}, {25, 26}, {25, 28},
        {26, 27}, {26, 30}, {27, 32}, {28, 29}, {28, 33}, {29, 30}, {29, 34}, {30, 31},
        {31, 32}, {31, 35}, {32, 38}, {33, 34}, {33, 36}, {34, 35}, {35, 37}, {36, 37},
        {37, 38}};
    graph g = from_edge_list(38, lines, true);
    if (g.edge_count() != 57 || !is_cubic(g)) throw std::logic_error("bbl_38: bad transcription");
    return g;
}

// 16-cycle A..P = 0..15 with eight chords; the two special edges A-P and H-I
// are appended last.
inline graph horton_circle() {
    constexpr int A = 0, B = 1, C = 2, D = 3, E = 4, F = 5, G = 6, H = 7, I = 8, J = 9, K = 10,
                  L = 11, M = 12, N = 13, O = 14, P = 15;
    graph g = from_edge_list(
        16, {{A, B}, {B, C}, {C, D}, {D, E}, {E, F}, {F, G}, {G, H},          // right arc
             {I, J}, {J, K}, {K, L}, {L, M}, {M, N}, {N, O}, {O, P},          // left arc
             {A, F}, {B, M}, {C, H}, {D, O}, {E, J}, {G, L}, {I, N}, {K, P},  // chords
             {A, P}, {H, I}},                                                 // e1, e2
        false);
    if (!is_cubic(g)) throw std::logic_error("horton_circle: bad transcription");
    return g;
}

inline std::pair<int, int> horton_circle_special_edges(const graph& g) {
    return {g.require_edge(0, 15), g.require_edge(7, 8)};
}

// Two Horton circles joined by three edges after removing their special
// edges; the second circle loses its vertex A, whose three former edges
// become the stubs. Circle 1 is 0..15 (A1..P1), circle 2 is 16..30 (B2..P2).
inline fragment horton_fragment() {
    constexpr int A1 = 0, H1 = 7, I1 = 8, P1 = 15;
    constexpr int B2 = 16, E2 = 19, F2 = 20, G2 = 21, H2 = 22, I2 = 23, P2 = 30;
    (void)E2;
    (void)G2;
    std::vector<std::pair<int, int>> edges;
    auto arc = [&](int base) {
        for (int i = 0; i < 7; ++i) edges.push_back({base + i, base + i + 1});        // A..H
        for (int i = 8; i < 15; ++i) edges.push_back({base + i, base + i + 1});       // I..P
        int chords[8][2] = {{0, 5}, {1, 12}, {2, 7}, {3, 14}, {4, 9}, {6, 11}, {8, 13}, {10, 15}};
        for (auto& ch : chords) edges.push_back({base + ch[0], base + ch[1]});
    };
    arc(0);
    std::size_t before = edges.size();
    arc(16);  // circle 2 with A2 at index 16, deleted below
    std::vector<std::pair<int, int>> kept(edges.begin(), edges.begin() + before);
    for (std::size_t i = before; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u == 16 || v == 16) continue;  // A2's edges vanish with it
        kept.push_back({u > 16 ? u - 1 : u, v > 16 ? v - 1 : v});
    }
    kept.push_back({A1, H2});  // a
    kept.push_back({I1, P2});  // b
    kept.push_back({H1, I2});  // c
    graph g = from_edge_list(31, kept, false);
    fragment f{std::move(g), {{{P1, 'a'}, {F2, 'b'}, {B2, 'c'}}}, 'a'};
    if (f.g.edge_count() != 45) throw std::logic_error("horton_fragment: bad transcription");
    f.check();
    return f;
}

enum class triple_style { hub_ring, three_hubs };

// Three copies of a fragment, joined. hub_ring: required stubs meet one hub
// vertex and the b/c stubs chain in a ring. three_hubs: one hub per label.
inline graph compose_triple(const fragment& f, triple_style style = triple_style::hub_ring) {
    f.check();
    const int sz = f.g.vertex_count();
    char req = f.required_label.value_or('a');
    char other1 = 'a', other2 = 'b';
    if (req == 'a') {
        other1 = 'b';
        other2 = 'c';
    } else if (req == 'b') {
        other2 = 'c';
    }
    int hubs = style == triple_style::hub_ring ? 1 : 3;
    graph g(3 * sz + hubs);
    for (int copy = 0; copy < 3; ++copy) {
        int base = copy * sz;
        for (const auto& e : f.g.edges()) g.add_edge(base + e.u, base + e.v);
    }
    if (style == triple_style::hub_ring) {
        int hub = 3 * sz;
        for (int copy = 0; copy < 3; ++copy) g.add_edge(copy * sz + f.stub(req), hub);
        for (int copy = 0; copy < 3; ++copy)
            g.add_edge(copy * sz + f.stub(other2), ((copy + 1) % 3) * sz + f.stub(other1));
    } else {
        int hx = 3 * sz, hy = 3 * sz + 1, hz = 3 * sz + 2;
        for (int copy = 0; copy < 3; ++copy) {
            g.add_edge(copy * sz + f.stub(req), hx);
            g.add_edge(copy * sz + f.stub(other1), hy);
            g.add_edge(copy * sz + f.stub(other2), hz);
        }
    }
    if (!is_cubic(g)) throw std::logic_error("compose_triple: result is not cubic");
    return g;
}

inline graph horton_96() {
    graph g = compose_triple(horton_fragment(), triple_style::three_hubs);
    if (g.vertex_count() != 96) throw std::logic_error("horton_96: wrong size");
    return g;
}

// Three Horton fragments without extra hub vertices: one fragment flips its
// two-coloring, one loses its b stub (the deleted vertex), whose interior
// neighbors become two extra attachment points.
inline graph horton_92() {
    fragment f = horton_fragment();
    const int sz = f.g.vertex_count();  // 31
    int aP1 = 0 * sz + f.stub('a'), aF2 = 0 * sz + f.stub('b'), aB2 = 0 * sz + f.stub('c');
    int bP1 = 1 * sz + f.stub('a'), bF2 = 1 * sz + f.stub('b'), bB2 = 1 * sz + f.stub('c');
    // Copy c drops its F2 stub; its neighbors E2, G2 are the new attachment
    // points. In fragment coordinates: F2 = 20, E2 = 19, G2 = 21.
    auto del = delete_vertices(f.g, {f.stub('b')});
    int cbase = 2 * sz;
    int cP1 = cbase + del.old_to_new[f.stub('a')];
    int cB2 = cbase + del.old_to_new[f.stub('c')];
    int cQ = cbase + del.old_to_new[19];  // E2
    int cR = cbase + del.old_to_new[21];  // G2
    graph g(2 * sz + del.g.vertex_count());
    for (int copy = 0; copy < 2; ++copy)
        for (const auto& e : f.g.edges()) g.add_edge(copy * sz + e.u, copy * sz + e.v);
    for (const auto& e : del.g.edges()) g.add_edge(cbase + e.u, cbase + e.v);
    g.add_edge(aP1, cB2);
    g.add_edge(bB2, cQ);
    g.add_edge(bF2, cR);
    g.add_edge(aF2, bP1);
    g.add_edge(aB2, cP1);
    if (g.vertex_count() != 92 || !is_cubic(g)) throw std::logic_error("horton_92: bad wiring");
    return g;
}

// 18 vertices A..R = 0..17; the two special edges G-H and K-J carry the
// fragment's exclusion property.
inline graph ellingham_fragment() {
    constexpr int A = 0, B = 1, C = 2, D = 3, E = 4, F = 5, G = 6, H = 7, I = 8, J = 9, K = 10,
                  L = 11, M = 12, N = 13, O = 14, P = 15, Q = 16, R = 17;
    graph g = from_edge_list(18,
                             {{B, C}, {C, D}, {D, E}, {E, F}, {F, A},  // outer shell
                              {N, O}, {O, P}, {P, Q}, {Q, R}, {R, M},  // inner shell
                              {A, G}, {G, M}, {B, H}, {H, N}, {C, I}, {I, O},
                              {D, J}, {J, P}, {E, K}, {K, Q}, {F, L}, {L, R},
                              {K, J}, {A, N}, {B, M}, {G, H}, {L, I}},
                             false);
    if (!is_cubic(g)) throw std::logic_error("ellingham_fragment: bad transcription");
    return g;
}

inline std::pair<int, int> ellingham_special_edges(const graph& g) {
    return {g.require_edge(6, 7), g.require_edge(10, 9)};  // GH, KJ
}

// Two Ellingham fragments with both special edges twice subdivided
// (G-S-T-H, K-U-V-J), joined through a 6-vertex tree P Q X Y R S.
inline graph georges_50() {
    graph frag = ellingham_fragment();
    auto [gh, kj] = ellingham_special_edges(frag);
    constexpr int G = 6, H = 7, J = 9, K = 10;
    constexpr int S = 18, T = 19, U = 20, V = 21;  // per-copy subdivision points
    const int csz = 22;
    graph g(2 * csz + 6);
    int tP = 44, tQ = 45, tX = 46, tY = 47, tR = 48, tS = 49;
    for (int copy = 0; copy < 2; ++copy) {
        int base = copy * csz;
        for (int e = 0; e < frag.edge_count(); ++e) {
            if (e == gh || e == kj) continue;
            g.add_edge(base + frag.edge(e).u, base + frag.edge(e).v);
        }
        g.add_edge(base + G, base + S);
        g.add_edge(base + S, base + T);
        g.add_edge(base + T, base + H);
        g.add_edge(base + K, base + U);
        g.add_edge(base + U, base + V);
        g.add_edge(base + V, base + J);
    }
    g.add_edge(tP, tX);
    g.add_edge(tQ, tX);
    g.add_edge(tX, tY);
    g.add_edge(tY, tR);
    g.add_edge(tY, tS);
    // Tree-to-fragment wiring as drawn.
    g.add_edge(0 * csz + T, tP);
    g.add_edge(1 * csz + V, tP);
    g.add_edge(0 * csz + V, tQ);
    g.add_edge(1 * csz + T, tQ);
    g.add_edge(0 * csz + U, tR);
    g.add_edge(1 * csz + U, tR);
    g.add_edge(0 * csz + S, tS);
    g.add_edge(1 * csz + S, tS);
    if (g.vertex_count() != 50 || g.edge_count() != 75 || !is_cubic(g))
        throw std::logic_error("georges_50: bad wiring");
    return g;
}

}  // namespace named

using named_object = std::variant<graph, fragment>;

// Name registry for the CLI; grid takes its dimensions inline: "grid(3,4)".
inline named_object named_graph(const std::string& name) {
    using namespace named;
    if (name == "cube_c1") return cube_c1();
    if (name == "k4") return k4();
    if (name == "k33") return k33();
    if (name == "pentagonal_prism") return pentagonal_prism();
    if (name == "r1") return r1();
    if (name == "r2") return r2();
    if (name == "tutte_fragment") return tutte_fragment();
    if (name == "tutte_46") return tutte_46();
    if (name == "bbl_38") return bbl_38();
    if (name == "horton_circle") return horton_circle();
    if (name == "horton_fragment") return horton_fragment();
    if (name == "horton_96") return horton_96();
    if (name == "horton_92") return horton_92();
    if (name == "ellingham_fragment") return ellingham_fragment();
    if (name == "georges_50") return georges_50();
    if (name.rfind("grid(", 0) == 0 && name.back() == ')') {
        auto body = name.substr(5, name.size() - 6);
        auto comma = body.find(',');
        if (comma != std::string::npos) {
            int m = std::stoi(body.substr(0, comma));
            int n = std::stoi(body.substr(comma + 1));
            return grid(m, n);
        }
    }
    throw std::invalid_argument("unknown graph name: " + name);
}

enum class verdict { yes, no, inconclusive };

// Spanning path with both endpoints fixed, via a cycle through a two-edge
// apex.
inline ham_result spanning_path_between(const graph& g, int x, int y, search_budget budget = {}) {
    if (x == y) throw std::invalid_argument("spanning_path_between: endpoints must differ");
    int n = g.vertex_count();
    graph h(n + 1);
    for (const auto& r : g.edges()) h.add_edge(r.u, r.v);
    h.add_edge(x, n);
    h.add_edge(y, n);
    auto res = find_ham_cycle(h, {}, budget);
    if (res.status == ham_status::found) {
        auto& cyc = res.cycle_or_path;
        auto it = std::find(cyc.begin(), cyc.end(), n);
        std::vector<int> path(it + 1, cyc.end());
        path.insert(path.end(), cyc.begin(), it);
        if (path.front() != x && path.front() != y) throw std::logic_error("apex path broken");
        res.cycle_or_path = std::move(path);
    }
    return res;
}

struct required_edge_verdict {
    verdict result = verdict::inconclusive;
    std::string reason;
    std::vector<int> counterexample;  // spanning b-c traversal when that is the failure
};

// (i) spanning through-paths from the required stub to each other stub
// exist; (ii) no spanning through-path joins the two other stubs.
inline required_edge_verdict verify_required_edge(const fragment& f, search_budget budget = {}) {
    f.check();
    if (!f.required_label) throw std::invalid_argument("fragment has no required stub");
    int r = f.stub(*f.required_label);
    std::vector<int> others;
    for (auto [v, l] : f.stubs)
        if (l != *f.required_label) others.push_back(v);
    required_edge_verdict out;
    for (int s : others) {
        auto res = spanning_path_between(f.g, r, s, budget);
        if (res.status == ham_status::inconclusive) {
            out.reason = "budget exhausted";
            return out;
        }
        if (res.status == ham_status::none) {
            out.result = verdict::no;
            out.reason = "no spanning through-path from the required stub";
            return out;
        }
    }
    auto res = spanning_path_between(f.g, others[0], others[1], budget);
    if (res.status == ham_status::inconclusive) {
        out.reason = "budget exhausted";
        return out;
    }
    if (res.status == ham_status::found) {
        out.result = verdict::no;
        out.reason = "spanning through-path avoids the required stub";
        out.counterexample = res.cycle_or_path;
        return out;
    }
    out.result = verdict::yes;
    return out;
}

// No Hamiltonian cycle of g uses exactly one of {e1, e2}.
inline verdict verify_xor_parity(const graph& g, int e1, int e2, search_budget budget = {}) {
    for (auto [use, avoid] : {std::pair{e1, e2}, std::pair{e2, e1}}) {
        constraint_set c;
        c.required = {use};
        c.forbidden = {avoid};
        auto r = find_ham_cycle(g, c, budget);
        if (r.status == ham_status::inconclusive) return verdict::inconclusive;
        if (r.status == ham_status::found) return verdict::no;
    }
    return verdict::yes;
}

// No Hamiltonian cycle of g contains both e1 and e2.
inline verdict verify_forbidden_pair(const graph& g, int e1, int e2, search_budget budget = {}) {
    constraint_set c;
    c.required = {e1, e2};
    auto r = find_ham_cycle(g, c, budget);
    if (r.status == ham_status::inconclusive) return verdict::inconclusive;
    return r.status == ham_status::found ? verdict::no : verdict::yes;
}

}  // namespace barnette
