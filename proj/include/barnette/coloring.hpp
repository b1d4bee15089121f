#pragma once
// Edge 3-coloring of a cubic graph from a Hamiltonian cycle (alternate two
// colors along the cycle, third color on the complement matching) and the
// induced proper 4-coloring of faces, encoded as two independent parity bits.
#include "barnette/embedding.hpp"
#include "barnette/hamiltonicity.hpp"

namespace barnette {

enum class edge_color : char { blue, purple, red };

struct edge_coloring {
    std::vector<edge_color> color;  // per edge id
};

enum class face_color : char { white = 0, red = 1, blue = 2, purple = 3 };

struct face_coloring {
    // bit1 = inside the Hamiltonian cycle, bit2 = inside the curves left
    // after deleting the blue class; color = (bit1<<1) | bit2.
    std::vector<char> bit1, bit2;  // per face index
    std::vector<face_color> color;
};

inline bool validate_edge_coloring(const graph& g, const edge_coloring& ec) {
    if (ec.color.size() != static_cast<std::size_t>(g.edge_count())) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                if (inc[i] != inc[j] && ec.color[inc[i]] == ec.color[inc[j]]) return false;
    }
    return true;
}

// Cycle edges alternate blue/purple, starting blue at the smallest cycle edge
// id; everything else red.
inline edge_coloring tait_edge_coloring(const graph& g, const std::vector<int>& cycle) {
    if (!is_cubic(g)) throw std::invalid_argument("tait_edge_coloring: graph must be cubic");
    if (!validate_ham_cycle(g, cycle))
        throw std::invalid_argument("tait_edge_coloring: not a Hamiltonian cycle");
    if (cycle.size() % 2 != 0)
        throw std::invalid_argument("tait_edge_coloring: odd cycle cannot be 2-colored");
    auto ids = detail::cycle_edge_ids(g, cycle);
    std::size_t start = 0;
    for (std::size_t i = 1; i < ids.size(); ++i)
        if (ids[i] < ids[start]) start = i;
    edge_coloring ec;
    ec.color.assign(g.edge_count(), edge_color::red);
    for (std::size_t k = 0; k < ids.size(); ++k)
        ec.color[ids[(start + k) % ids.size()]] = k % 2 ? edge_color::purple : edge_color::blue;
    if (!validate_edge_coloring(g, ec))
        throw std::logic_error("tait_edge_coloring: construction not proper");
    return ec;
}

inline bool validate_face_coloring(const graph& g, const embedding& emb, const face_coloring& fc) {
    auto fl = trace_faces(g, emb);
    if (fc.color.size() != fl.faces.size()) return false;
    std::vector<int> face_of(2 * g.edge_count(), -1);
    for (std::size_t f = 0; f < fl.faces.size(); ++f)
        for (int d : fl.faces[f]) face_of[d] = static_cast<int>(f);
    for (int e = 0; e < g.edge_count(); ++e) {
        int f1 = face_of[2 * e], f2 = face_of[2 * e + 1];
        if (f1 == f2 || fc.color[f1] == fc.color[f2]) return false;
    }
    return true;
}

// Faces two ways: parity of cycle edges crossed from the outer face (bit1)
// and parity of non-blue edges crossed (bit2). The outer face is the face
// orbit containing dart 0. Overlay is proper: a blue edge flips bit1, purple
// flips both, red flips bit2.
inline face_coloring face_four_coloring(const graph& g, const embedding& emb,
                                        const std::vector<int>& cycle) {
    if (!is_cubic(g)) throw std::invalid_argument("face_four_coloring: graph must be cubic");
    if (!emb.valid_for(g) || !euler_certificate(g, emb))
        throw std::invalid_argument("face_four_coloring: invalid embedding");
    edge_coloring ec = tait_edge_coloring(g, cycle);

    auto fl = trace_faces(g, emb);
    int nf = fl.count();
    std::vector<int> face_of(2 * g.edge_count(), -1);
    for (int f = 0; f < nf; ++f)
        for (int d : fl.faces[f]) face_of[d] = f;

    face_coloring fc;
    fc.bit1.assign(nf, -1);
    fc.bit2.assign(nf, -1);
    auto spread = [&](std::vector<char>& bit, auto crosses) {
        bit[0] = 0;  // outer face
        std::vector<int> stack{0};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int d : fl.faces[f]) {
                int e = dart_edge(d);
                int f2 = face_of[dart_rev(d)];
                char want = crosses(e) ? static_cast<char>(1 - bit[f]) : bit[f];
                if (bit[f2] == -1) {
                    bit[f2] = want;
                    stack.push_back(f2);
                } else if (bit[f2] != want) {
                    throw std::logic_error("face_four_coloring: inconsistent curve parity");
                }
            }
        }
    };
    spread(fc.bit1, [&](int e) { return ec.color[e] != edge_color::red; });
    spread(fc.bit2, [&](int e) { return ec.color[e] != edge_color::blue; });
    fc.color.resize(nf);
    for (int f = 0; f < nf; ++f)
        fc.color[f] = static_cast<face_color>((fc.bit1[f] << 1) | fc.bit2[f]);
    if (!validate_face_coloring(g, emb, fc))
        throw std::logic_error("face_four_coloring: overlay not proper");
    return fc;
}

// DOT text with edge colors, for eyeballing colorings.
inline std::string export_colored_dot(const graph& g, const edge_coloring& ec) {
    auto name = [](edge_color c) {
        switch (c) {
            case edge_color::blue: return "blue";
            case edge_color::purple: return "purple";
            default: return "red";
        }
    };
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) os << "  v" << v + 1 << ";\n";
    for (int e = 0; e < g.edge_count(); ++e)
        os << "  v" << g.edge(e).u + 1 << " -- v" << g.edge(e).v + 1 << " [color="
           << name(ec.color[e]) << "];\n";
    os << "}\n";
    return os.str();
}

}  // namespace barnette
