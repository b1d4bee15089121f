#include <catch2/catch_amalgamated.hpp>

#include "barnette/generation.hpp"
#include "oracles.hpp"

using namespace barnette;

namespace {

// Brute-force census of the family at a given vertex count, independent of
// the expansion machinery: every cubic bipartite graph arises from a 0/1
// biadjacency matrix with all row and column sums 3; fixing the first row
// loses no isomorphism class. Survivors of the family checks are
// deduplicated pairwise by brute-force isomorphism.
std::vector<graph> census(int n) {
    REQUIRE(n % 2 == 0);
    int half = n / 2;
    std::vector<graph> out;
    if (half < 3) return out;
    std::vector<std::vector<int>> rows;
    std::vector<int> colsum(half, 0);
    std::function<void(int)> place_rows = [&](int r) {
        if (r == half) {
            for (int c = 0; c < half; ++c)
                if (colsum[c] != 3) return;
            graph g(n);
            for (int i = 0; i < half; ++i)
                for (int c : rows[i]) g.add_edge(i, half + c);
            if (!g.is_connected()) return;
            if (!check_c3cbp(g).ok()) return;
            for (const auto& prev : out)
                if (oracles::isomorphic_brute_force(prev, g)) return;
            out.push_back(std::move(g));
            return;
        }
        // Choose this row's 3 columns; one fresh row buffer per level.
        std::vector<int> row;
        std::function<void(int)> choose = [&](int from) {
            if (row.size() == 3) {
                rows.push_back(row);
                place_rows(r + 1);
                rows.pop_back();
                return;
            }
            for (int c = from; c < half; ++c) {
                if (colsum[c] >= 3) continue;
                colsum[c]++;
                row.push_back(c);
                choose(c + 1);
                row.pop_back();
                colsum[c]--;
            }
        };
        choose(0);
    };
    // First row fixed to columns 0,1,2 up to isomorphism.
    rows.push_back({0, 1, 2});
    for (int c : {0, 1, 2}) colsum[c] = 1;
    place_rows(1);
    return out;
}

std::set<std::string> key_hexes(const std::vector<graph>& graphs) {
    std::set<std::string> keys;
    for (const auto& g : graphs) {
        auto emb = std::get<embedding>(is_planar(g));
        keys.insert(canonical_key_embedding(g, emb).hex());
    }
    return keys;
}

std::set<std::string> level_hexes(const catalog& cat, int n) {
    std::set<std::string> keys;
    auto it = cat.by_n.find(n);
    if (it != cat.by_n.end())
        for (const auto& [k, e] : it->second) keys.insert(k.hex());
    return keys;
}

}  // namespace

TEST_CASE("expand_r0 on the cube gives a 12-vertex family member") {
    graph cube = named::cube_c1();
    auto emb = std::get<embedding>(is_planar(cube));
    auto sites = r0_sites(cube, emb);
    REQUIRE_FALSE(sites.empty());
    int good = 0;
    for (const auto& site : sites) {
        auto res = expand_r0(cube, emb, site);
        if (!res) continue;
        CHECK(res->g.vertex_count() == 12);
        if (check_c3cbp(res->g).ok()) ++good;
    }
    CHECK(good > 0);
}

TEST_CASE("expand_r0 rejects sites sharing a vertex") {
    graph cube = named::cube_c1();
    auto emb = std::get<embedding>(is_planar(cube));
    expansion_site bad{expansion_site::kind_t::r0, 0, 1, false, -1};  // edges share vertex 1
    CHECK_THROWS_AS(expand_r0(cube, emb, bad), std::invalid_argument);
}

TEST_CASE("expand_r0 then reduce_r0 at the new face is the identity up to isomorphism") {
    graph cube = named::cube_c1();
    auto emb = std::get<embedding>(is_planar(cube));
    auto cube_key = canonical_key_embedding(cube, emb).hex();
    int round_trips = 0;
    for (const auto& site : r0_sites(cube, emb)) {
        auto res = expand_r0(cube, emb, site);
        if (!res || !check_c3cbp(res->g).ok()) continue;
        auto [w, x, y, z] = res->r0_new;
        std::vector<int> quad{w, x, z, y};  // boundary order of the new face
        bool restored = false;
        for (bool orient : {false, true}) {
            auto red = reduce_r0(res->g, quad, orient);
            if (!red) continue;
            auto key = canonical_key_embedding(red->first, red->second).hex();
            if (key == cube_key) restored = true;
        }
        CHECK(restored);
        ++round_trips;
    }
    CHECK(round_trips > 0);
}

TEST_CASE("reducing the cube itself below the family minimum fails") {
    graph cube = named::cube_c1();
    auto emb = std::get<embedding>(is_planar(cube));
    auto inv = faces(cube, emb);
    for (const auto& f : inv.face_darts) {
        std::vector<int> quad;
        for (int d : f) quad.push_back(dart_tail(cube, d));
        for (bool orient : {false, true}) CHECK_FALSE(reduce_r0(cube, quad, orient).has_value());
    }
}

TEST_CASE("expand_r4 on the cube gives a 14-vertex family member") {
    graph cube = named::cube_c1();
    auto res = expand_r4(cube, 0);
    CHECK(res.g.vertex_count() == 14);
    CHECK(check_c3cbp(res.g).ok());
}

TEST_CASE("expand_r4 then reduce_r4 at the created cut restores the input") {
    graph cube = named::cube_c1();
    auto emb = std::get<embedding>(is_planar(cube));
    auto cube_key = canonical_key_embedding(cube, emb).hex();
    auto res = expand_r4(cube, 3);
    auto cut = find_edge_3cut(res.g);
    REQUIRE(cut);
    auto red = reduce_r4(res.g, cut->members);
    REQUIRE(red);
    CHECK(canonical_key_embedding(red->first, red->second).hex() == cube_key);
}

TEST_CASE("reduce_r4 refuses a side that is not the 8-vertex seed") {
    // Expand once, then expand again inside the gadget: the old 3-cut now
    // has sides of 13 and 11 vertices and must be refused.
    graph hexprism(12);
    for (int i = 0; i < 6; ++i) {
        hexprism.add_edge(i, (i + 1) % 6);
        hexprism.add_edge(6 + i, 6 + (i + 1) % 6);
        hexprism.add_edge(i, 6 + i);
    }
    auto first = expand_r4(hexprism, 0);
    auto second = expand_r4(first.g, first.r4_base + 6);  // the gadget's hub
    const graph& g = second.g;
    REQUIRE(g.vertex_count() == 24);
    bool refused = false, accepted = false;
    int m = g.edge_count();
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                auto sides = barnette::detail::two_sides(g, {a, b, c});
                if (!sides) continue;
                bool has7 = (*sides)[0].size() == 7 || (*sides)[1].size() == 7;
                auto red = reduce_r4(g, {a, b, c});
                if (!has7) {
                    CHECK_FALSE(red.has_value());
                    refused = true;
                } else if (red) {
                    accepted = true;
                }
            }
    CHECK(refused);
    CHECK(accepted);
}

TEST_CASE("two stacked r4 expansions still pass the family checks") {
    auto g = expand_r4(expand_r4(named::cube_c1(), 0).g, 0).g;
    CHECK(g.vertex_count() == 20);
    CHECK(check_c3cbp(g).ok());
}

TEST_CASE("catalog: exactly one graph at n=8, none at n=10") {
    auto cat = enumerate_catalog(8);
    REQUIRE(cat.by_n.count(8));
    CHECK(cat.by_n.at(8).size() == 1);
    auto cat10 = enumerate_catalog(10);
    CHECK(level_hexes(cat10, 10).empty());
}

TEST_CASE("catalog matches the brute-force census at n=10 and n=12") {
    auto cat = enumerate_catalog(12);
    CHECK(level_hexes(cat, 10) == key_hexes(census(10)));
    CHECK(level_hexes(cat, 12) == key_hexes(census(12)));
    CHECK_FALSE(level_hexes(cat, 12).empty());
}

TEST_CASE("every catalog graph above the minimum reduces back into the catalog") {
    auto cat = enumerate_catalog(14);
    for (const auto& [n, level] : cat.by_n) {
        if (n == 8) continue;
        for (const auto& [key, entry] : level) {
            bool reduced = false;
            // Try r0 on every 4-face, both orientations.
            auto inv = faces(entry.g, entry.emb);
            for (const auto& f : inv.face_darts) {
                if (f.size() != 4) continue;
                std::vector<int> quad;
                for (int d : f) quad.push_back(dart_tail(entry.g, d));
                std::set<int> qs(quad.begin(), quad.end());
                if (qs.size() != 4) continue;
                bool leaves = true;
                for (int i = 0; i < 4 && leaves; ++i) {
                    int third = -1;
                    for (int e : entry.g.incident(quad[i])) {
                        int w = entry.g.edge(e).other(quad[i]);
                        if (w != quad[(i + 1) % 4] && w != quad[(i + 3) % 4]) third = w;
                    }
                    if (third < 0 || qs.count(third)) leaves = false;
                }
                if (!leaves) continue;
                for (bool orient : {false, true}) {
                    auto red = reduce_r0(entry.g, quad, orient);
                    if (red) {
                        int rn = red->first.vertex_count();
                        auto rkey = canonical_key_embedding(red->first, red->second);
                        if (cat.by_n.count(rn) && cat.by_n.at(rn).count(rkey)) reduced = true;
                    }
                }
            }
            // Try r4 on every 3-cut.
            if (!reduced) {
                auto cut = find_edge_3cut(entry.g);
                if (cut) {
                    auto red = reduce_r4(entry.g, cut->members);
                    if (red) {
                        int rn = red->first.vertex_count();
                        auto rkey = canonical_key_embedding(red->first, red->second);
                        if (cat.by_n.count(rn) && cat.by_n.at(rn).count(rkey)) reduced = true;
                    }
                }
            }
            INFO("n=" << n << " key=" << key.hex());
            CHECK(reduced);
        }
    }
}

TEST_CASE("every catalog graph has at least six 4-faces and a Hamiltonian cycle") {
    auto cat = enumerate_catalog(14);
    for (const auto& [n, level] : cat.by_n)
        for (const auto& [key, entry] : level) {
            auto inv = faces(entry.g, entry.emb);
            INFO("n=" << n << " key=" << key.hex());
            CHECK(inv.size_histogram.at(4) >= 6);
            CHECK(find_ham_cycle(entry.g).status == ham_status::found);
            // A 3-cut or cyclic 4-edge-connectivity, one of the two.
            bool has3 = find_edge_3cut(entry.g).has_value();
            bool cyc4 = cyclically_4_edge_connected(entry.g);
            CHECK((has3 || cyc4));
        }
}

TEST_CASE("the enumerator reports no lemma findings on clean input") {
    auto cat = enumerate_catalog(14);
    CHECK(cat.findings.empty());
}

TEST_CASE("catalogs are reproducible and worker-count independent") {
    auto c1 = enumerate_catalog(12, 1);
    auto c2 = enumerate_catalog(12, 3);
    REQUIRE(c1.total() == c2.total());
    for (const auto& [n, level] : c1.by_n) {
        for (const auto& [key, entry] : level) {
            REQUIRE(c2.by_n.at(n).count(key));
            const auto& other = c2.by_n.at(n).at(key);
            CHECK(entry.parent_key_hex == other.parent_key_hex);
            CHECK(entry.site == other.site);
            CHECK(export_graph(entry.g, export_format::edge_list) ==
                  export_graph(other.g, export_format::edge_list));
        }
    }
}

TEST_CASE("extend_ham_r4 produces validating cycles for all entry cases") {
    graph cube = named::cube_c1();
    auto cycle_edge_sets = all_ham_cycles(cube);
    REQUIRE(cycle_edge_sets.size() == 6);
    auto to_sequence = [&](const std::vector<int>& ids) {
        std::set<int> on(ids.begin(), ids.end());
        std::vector<int> seq{0};
        int prev = -1, v = 0;
        do {
            int next = -1;
            for (int e : cube.incident(v))
                if (on.count(e) && e != prev) {
                    next = e;
                    break;
                }
            v = cube.edge(next).other(v);
            prev = next;
            if (v != 0) seq.push_back(v);
        } while (v != 0);
        return seq;
    };
    // Across all cycles and all inflation points, every stub-pair template
    // gets exercised.
    std::set<std::pair<int, int>> case_pairs;
    for (const auto& ids : cycle_edge_sets) {
        auto base_cycle = to_sequence(ids);
        REQUIRE(validate_ham_cycle(cube, base_cycle));
        for (int v = 0; v < cube.vertex_count(); ++v) {
            auto exp = expand_r4(cube, v);
            auto extended = extend_ham_r4(cube, base_cycle, v, exp);
            CHECK(validate_ham_cycle(exp.g, extended));
            int len = static_cast<int>(base_cycle.size());
            int pos = static_cast<int>(std::find(base_cycle.begin(), base_cycle.end(), v) -
                                       base_cycle.begin());
            auto nb = cube.neighbors(v);
            auto stub_of = [&](int w) {
                return static_cast<int>(std::find(nb.begin(), nb.end(), w) - nb.begin());
            };
            int s1 = stub_of(base_cycle[(pos + len - 1) % len]);
            int s2 = stub_of(base_cycle[(pos + 1) % len]);
            case_pairs.insert({std::min(s1, s2), std::max(s1, s2)});
        }
    }
    CHECK(case_pairs.size() == 3);  // all three templates exercised
}

TEST_CASE("extend_ham_r4 rejects a non-cycle") {
    graph cube = named::cube_c1();
    auto exp = expand_r4(cube, 0);
    CHECK_THROWS_AS(extend_ham_r4(cube, {0, 1, 2, 3, 4, 5, 6, 7}, 0, exp),
                    std::invalid_argument);
}

TEST_CASE("classify_r0_case covers all four cases on the cube") {
    graph cube = named::cube_c1();
    auto emb = std::get<embedding>(is_planar(cube));
    auto cycle = named::cube_ham_cycle();
    std::set<int> seen_cases;
    for (const auto& site : r0_sites(cube, emb)) {
        auto exp = expand_r0(cube, emb, site);
        if (!exp || !check_c3cbp(exp->g).ok()) continue;
        auto rep = classify_r0_case(cube, cycle, site, *exp);
        seen_cases.insert(rep.case_id);
        if (rep.case_id <= 3) {
            CHECK(validate_ham_cycle(exp->g, rep.extended_cycle));
        } else {
            CHECK(rep.matching.size() == 4);
            // Both site edges sit in the matching complement.
            CHECK(std::count(rep.matching.begin(), rep.matching.end(), site.e1) == 1);
            CHECK(std::count(rep.matching.begin(), rep.matching.end(), site.e2) == 1);
            CHECK(rep.second_cycle != ham_status::inconclusive);
        }
    }
    CHECK(seen_cases == std::set<int>{1, 2, 3, 4});
}
