// Command-line workbench: structural checks, constrained Hamiltonicity,
// family generation, named graphs, fragment lemma verification, colorings,
// delta-wye reduction and the satisfiability reduction.
//
// Exit codes: 0 verdicts computed, 2 parse/usage error, 3 budget ran out.
// Verdicts and witnesses go to stdout (deterministic for fixed inputs);
// timings go to stderr.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "barnette/coloring.hpp"
#include "barnette/fragments.hpp"
#include "barnette/generation.hpp"
#include "barnette/sat.hpp"
#include "barnette/steinitz.hpp"

using namespace barnette;

namespace {

constexpr int exit_ok = 0, exit_parse = 2, exit_budget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

graph load_graph(const std::string& path) { return parse_edge_list(read_file(path)); }

const char* verdict_word(bool b) { return b ? "yes" : "no"; }

std::string join_vertices(const std::vector<int>& vs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " - " : "") << vs[i] + 1;
    return os.str();
}

std::string join_edges(const graph& g, const std::vector<int>& es) {
    std::ostringstream os;
    for (std::size_t i = 0; i < es.size(); ++i)
        os << (i ? ", " : "") << "e" << es[i] + 1 << "(" << g.edge(es[i]).u + 1 << "-"
           << g.edge(es[i]).v + 1 << ")";
    return os.str();
}

struct run_clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    ~run_clock() {
        std::cerr << "elapsed: "
                  << std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count()
                  << " s\n";
    }
};

int check_edge_id(const graph& g, int one_based) {
    if (one_based < 1 || one_based > g.edge_count())
        throw std::runtime_error("edge id out of range: " + std::to_string(one_based));
    return one_based - 1;
}

int cmd_check(const std::string& path, bool cubic, bool bipartite_f, int connectivity,
              bool planar, bool cuts, const std::string& output) {
    run_clock clock;
    graph g = load_graph(path);
    std::ostringstream report;
    report << "graph: " << path << " (" << g.vertex_count() << " vertices, " << g.edge_count()
           << " edges)\n";
    bool all = !cubic && !bipartite_f && connectivity == 0 && !planar && !cuts;
    if (cubic || all) report << "cubic: " << verdict_word(is_cubic(g)) << '\n';
    if (bipartite_f || all) {
        auto out = bipartition(g);
        if (out.coloring) {
            int black = 0;
            for (char c : out.coloring->color)
                if (!c) ++black;
            for (const auto& e : g.edges())
                if (!e.is_loop() && out.coloring->color[e.u] == out.coloring->color[e.v])
                    throw std::logic_error("bipartition witness failed re-validation");
            report << "bipartite: yes (" << black << " black / " << g.vertex_count() - black
                   << " white)\n";
        } else {
            const auto& w = out.odd_walk;
            bool valid = w.size() >= 2 && w.front() == w.back() && (w.size() - 1) % 2 == 1;
            for (std::size_t i = 0; i + 1 < w.size() && valid; ++i)
                valid = g.has_edge(w[i], w[i + 1]);
            if (!valid) throw std::logic_error("odd-walk witness failed re-validation");
            report << "bipartite: no (odd closed walk: " << join_vertices(w) << ")\n";
        }
    }
    int k = connectivity == 0 && all ? 3 : connectivity;
    if (k > 0) {
        auto v = vertex_connectivity_at_least(g, k);
        report << k << "-connected: " << verdict_word(v.at_least);
        if (!v.at_least && !v.separator.empty())
            report << " (separator: " << join_vertices(v.separator) << ")";
        report << '\n';
    }
    std::optional<embedding> emb;
    if (planar || all || cuts) {
        auto res = is_planar(g);
        if (auto* e = std::get_if<embedding>(&res)) {
            emb = *e;
            auto inv = faces(g, *e);
            report << "planar: yes (" << inv.faces.size() << " faces:";
            for (auto& [sz, cnt] : inv.size_histogram) report << ' ' << cnt << "x" << sz;
            report << ")\n";
        } else {
            auto& w = std::get<kuratowski_witness>(res);
            report << "planar: no ("
                   << (w.kind == kuratowski_witness::kind_t::k5 ? "K5" : "K3,3")
                   << " subdivision on branch vertices " << join_vertices(w.branch_vertices)
                   << ")\n";
        }
    }
    if (cuts) {
        auto c3 = find_edge_3cut(g);
        if (c3)
            report << "3-cut: " << join_edges(g, c3->members) << " (sides "
                   << c3->sides[0].size() << "/" << c3->sides[1].size() << ")\n";
        else
            report << "3-cut: none\n";
        if (emb) {
            auto reports = classify_4cuts(g, *emb);
            int plain = 0, essential = 0, major = 0;
            for (const auto& r : reports) {
                if (r.classification == cut_class::plain) ++plain;
                if (r.classification == cut_class::essential_4) ++essential;
                if (r.classification == cut_class::major_4) ++major;
            }
            report << "4-cuts: " << reports.size() << " (" << plain << " plain, " << essential
                   << " essential, " << major << " major)\n";
            for (const auto& r : reports)
                if (r.classification != cut_class::plain)
                    report << "  "
                           << (r.classification == cut_class::major_4 ? "major" : "essential")
                           << ": " << join_edges(g, r.members) << '\n';
        }
        if (is_cubic(g) && vertex_connectivity_at_least(g, 3).at_least)
            report << "cyclically-4-edge-connected: "
                   << verdict_word(cyclically_4_edge_connected(g)) << '\n';
    }
    std::cout << report.str();
    if (!output.empty()) {
        std::ofstream out(output, std::ios::binary);
        out << report.str();
        if (!out) throw std::runtime_error("cannot write " + output);
    }
    return exit_ok;
}

int cmd_ham(const std::string& path, const std::string& mode, std::vector<int> require,
            std::vector<int> forbid, std::vector<std::string> xors, std::vector<std::string> ors,
            std::uint64_t max_nodes, double max_seconds) {
    run_clock clock;
    graph g = load_graph(path);
    constraint_set c;
    for (int e : require) c.required.push_back(check_edge_id(g, e));
    for (int e : forbid) c.forbidden.push_back(check_edge_id(g, e));
    auto parse_list = [&](const std::string& s) {
        std::vector<int> out;
        std::istringstream in(s);
        std::string tok;
        while (std::getline(in, tok, ',')) out.push_back(check_edge_id(g, std::stoi(tok)));
        return out;
    };
    for (const auto& s : xors) {
        auto v = parse_list(s);
        if (v.size() != 2) throw std::runtime_error("--xor wants exactly two edge ids");
        c.xor_pairs.push_back({v[0], v[1]});
    }
    for (const auto& s : ors) {
        auto v = parse_list(s);
        if (v.size() < 2) throw std::runtime_error("--or wants at least two edge ids");
        c.or_sets.push_back(v);
    }
    search_budget budget{max_nodes, max_seconds};
    ham_result r = mode == "path" ? find_ham_path(g, c, budget) : find_ham_cycle(g, c, budget);
    std::cerr << "nodes expanded: " << r.nodes_expanded << '\n';
    if (r.status == ham_status::inconclusive) {
        std::cout << "hamiltonian " << mode << ": inconclusive (budget exhausted)\n";
        return exit_budget;
    }
    if (r.status == ham_status::none) {
        std::cout << "hamiltonian " << mode << ": no (exhaustive)\n";
        return exit_ok;
    }
    bool valid = mode == "path" ? validate_ham_path(g, r.cycle_or_path)
                                : validate_ham_cycle(g, r.cycle_or_path, c);
    if (!valid) throw std::logic_error("witness failed re-validation");
    std::cout << "hamiltonian " << mode << ": yes\n" << join_vertices(r.cycle_or_path) << '\n';
    return exit_ok;
}

int cmd_gen(int max_n, const std::string& out_dir, int jobs, bool resume) {
    run_clock clock;
    namespace fs = std::filesystem;
    fs::path dir(out_dir);
    if (fs::exists(dir / "manifest.txt") && !resume)
        throw std::runtime_error(out_dir + " already holds a catalog (use --resume to redo)");
    std::set<std::string> previous;
    if (resume && fs::exists(dir / "manifest.txt")) {
        std::istringstream in(read_file((dir / "manifest.txt").string()));
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) previous.insert(line);
    }
    catalog cat = enumerate_catalog(max_n, jobs);
    write_catalog(cat, dir);
    if (!previous.empty()) {
        std::istringstream in(read_file((dir / "manifest.txt").string()));
        std::set<std::string> now;
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) now.insert(line);
        for (const auto& old : previous)
            if (!now.count(old))
                std::cout << "note: stale manifest line replaced: " << old << '\n';
    }
    for (const auto& [n, level] : cat.by_n)
        std::cout << "n=" << n << ": " << level.size() << " graph"
                  << (level.size() == 1 ? "" : "s") << '\n';
    std::cout << "total: " << cat.total() << '\n';
    for (const auto& finding : cat.findings) std::cout << "FINDING: " << finding << '\n';
    return exit_ok;
}

int cmd_named(const std::string& name, const std::string& format) {
    auto obj = named_graph(name);
    const graph& g = std::holds_alternative<graph>(obj) ? std::get<graph>(obj)
                                                        : std::get<fragment>(obj).g;
    if (format == "dot")
        std::cout << export_graph(g, export_format::dot);
    else
        std::cout << export_graph(g, export_format::edge_list);
    if (auto* f = std::get_if<fragment>(&obj)) {
        for (auto [v, l] : f->stubs)
            std::cout << "# stub " << l << ": vertex " << v + 1
                      << (f->required_label == l ? " (required)" : "") << '\n';
    }
    return exit_ok;
}

int cmd_fragment_verify(const std::string& name) {
    run_clock clock;
    auto obj = named_graph(name);
    auto word = [](verdict v) {
        return v == verdict::yes ? "yes" : v == verdict::no ? "no" : "inconclusive";
    };
    verdict v;
    if (auto* f = std::get_if<fragment>(&obj)) {
        auto res = verify_required_edge(*f);
        v = res.result;
        std::cout << "required-edge property: " << word(v);
        if (!res.reason.empty()) std::cout << " (" << res.reason << ")";
        std::cout << '\n';
    } else if (name == "horton_circle") {
        const graph& g = std::get<graph>(obj);
        auto [e1, e2] = named::horton_circle_special_edges(g);
        v = verify_xor_parity(g, e1, e2);
        std::cout << "never exactly one of the two special edges: " << word(v) << '\n';
    } else if (name == "ellingham_fragment") {
        const graph& g = std::get<graph>(obj);
        auto [gh, kj] = named::ellingham_special_edges(g);
        v = verify_forbidden_pair(g, gh, kj);
        std::cout << "never both special edges: " << word(v) << '\n';
    } else if (name == "pentagonal_prism") {
        const graph& g = std::get<graph>(obj);
        v = verify_forbidden_pair(g, g.require_edge(0, 5), g.require_edge(2, 7));
        std::cout << "never both AF and CH: " << word(v) << '\n';
    } else {
        throw std::runtime_error("no lemma registered for " + name);
    }
    return v == verdict::inconclusive ? exit_budget : exit_ok;
}

int cmd_color(const std::string& path) {
    run_clock clock;
    graph g = load_graph(path);
    auto pr = is_planar(g);
    auto* emb = std::get_if<embedding>(&pr);
    if (!emb) {
        std::cout << "coloring: no (graph is not planar)\n";
        return exit_ok;
    }
    auto r = find_ham_cycle(g);
    if (r.status == ham_status::inconclusive) {
        std::cout << "coloring: inconclusive (cycle search budget exhausted)\n";
        return exit_budget;
    }
    if (r.status == ham_status::none) {
        std::cout << "coloring: no (graph has no Hamiltonian cycle)\n";
        return exit_ok;
    }
    auto ec = tait_edge_coloring(g, r.cycle_or_path);
    auto fc = face_four_coloring(g, *emb, r.cycle_or_path);
    if (!validate_edge_coloring(g, ec) || !validate_face_coloring(g, *emb, fc))
        throw std::logic_error("coloring failed re-validation");
    std::cout << "cycle: " << join_vertices(r.cycle_or_path) << '\n';
    std::cout << export_colored_dot(g, ec);
    static const char* names[] = {"white", "red", "blue", "purple"};
    std::cout << "# face colors:";
    for (std::size_t f = 0; f < fc.color.size(); ++f)
        std::cout << " f" << f + 1 << "=" << names[static_cast<int>(fc.color[f])];
    std::cout << '\n';
    return exit_ok;
}

int cmd_steinitz(const std::string& path_or_name) {
    run_clock clock;
    graph g;
    try {
        auto obj = named_graph(path_or_name);
        g = std::holds_alternative<graph>(obj) ? std::get<graph>(obj)
                                               : std::get<fragment>(obj).g;
    } catch (const std::invalid_argument&) {
        g = load_graph(path_or_name);
    }
    auto t = reduce_to_k4(g);
    std::cout << format_trace(t);
    std::cout << "reduced-to-k4: " << verdict_word(t.reached_k4) << '\n';
    return exit_ok;
}

int cmd_sat(const std::string& path, const std::string& mode,
            const std::string& emit_instance, std::uint64_t max_nodes, double max_seconds) {
    run_clock clock;
    sat_formula f = parse_dimacs3(read_file(path));
    auto ri = build_instance(
        f, mode == "path" ? reduction_mode::path : reduction_mode::cycle);
    if (!emit_instance.empty()) {
        std::ofstream out(emit_instance, std::ios::binary);
        out << export_instance(ri);
        if (!out) throw std::runtime_error("cannot write " + emit_instance);
    }
    std::cout << "skeleton: " << ri.skeleton.vertex_count() << " vertices, "
              << ri.skeleton.edge_count() << " edges, " << ri.constraints.xor_pairs.size()
              << " xor, " << ri.constraints.or_sets.size() << " or\n";
    std::cout << "size-estimate: " << size_estimate(f) << '\n';
    auto out = solve_instance(ri, {max_nodes, max_seconds});
    if (out.status == ham_status::inconclusive) {
        std::cout << "result: inconclusive (budget exhausted)\n";
        return exit_budget;
    }
    if (out.status == ham_status::none) {
        std::cout << "result: UNSAT (exhaustive)\n";
        return exit_ok;
    }
    std::cout << "result: SAT\nassignment:";
    for (int i = 0; i < f.variable_count; ++i)
        std::cout << ' ' << "x" << i + 1 << "=" << (out.assignment[i] ? 1 : 0);
    std::cout << '\n';
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for cubic 3-connected bipartite planar graphs"};
    app.require_subcommand(1);

    std::string path, mode = "cycle", format = "edge-list", out_dir, emit_instance, name;
    std::string report_out;
    bool cubic = false, bip = false, planar = false, cuts = false, resume = false;
    bool cycle_from_search = false;
    int connectivity = 0, max_n = 12, jobs = 1;
    std::uint64_t max_nodes = 1'000'000'000;
    double max_seconds = 600.0;
    std::vector<int> require, forbid;
    std::vector<std::string> xors, ors;

    auto* check = app.add_subcommand("check", "structural checks on an edge-list file");
    check->add_option("path", path)->required();
    check->add_flag("--cubic", cubic);
    check->add_flag("--bipartite", bip);
    check->add_option("--connectivity", connectivity)->check(CLI::Range(1, 4));
    check->add_flag("--planar", planar);
    check->add_flag("--cuts", cuts);
    check->add_option("--output", report_out, "also write the report to a file");

    auto* ham = app.add_subcommand("ham", "constrained Hamiltonian cycle/path search");
    ham->add_option("path", path)->required();
    ham->add_option("--mode", mode)->check(CLI::IsMember({"cycle", "path"}));
    ham->add_option("--require", require, "edge id (1-based) that must be used");
    ham->add_option("--forbid", forbid, "edge id (1-based) that must be avoided");
    ham->add_option("--xor", xors, "pair e1,e2: exactly one used");
    ham->add_option("--or", ors, "set e1,e2[,e3,...]: at least one used");
    ham->add_option("--max-nodes", max_nodes);
    ham->add_option("--max-seconds", max_seconds);

    auto* gen = app.add_subcommand("gen", "enumerate the family from the 8-vertex seed");
    gen->add_option("--max-n", max_n)->required();
    gen->add_option("--out", out_dir)->required();
    gen->add_option("--jobs", jobs)->check(CLI::Range(1, 64));
    gen->add_flag("--resume", resume);

    auto* named_cmd = app.add_subcommand("named", "print a named graph");
    named_cmd->add_option("name", name)->required();
    named_cmd->add_option("--format", format)->check(CLI::IsMember({"edge-list", "dot"}));

    auto* fv = app.add_subcommand("fragment-verify", "verify a fragment lemma exhaustively");
    fv->add_option("name", name)->required();

    auto* color = app.add_subcommand("color", "edge/face colorings from a found cycle");
    color->add_option("path", path)->required();
    color->add_flag("--cycle-from-search", cycle_from_search,
                    "search for the cycle (default and only mode)");

    auto* steinitz = app.add_subcommand("steinitz", "reduce to K4 by delta-wye steps");
    steinitz->add_option("path", path, "edge-list file or a named graph")->required();

    auto* sat = app.add_subcommand("sat", "satisfiability via constrained Hamiltonicity");
    sat->add_option("path", path)->required();
    sat->add_option("--mode", mode)->check(CLI::IsMember({"cycle", "path"}));
    sat->add_option("--emit-instance", emit_instance, "write skeleton + constraints to a file");
    sat->add_option("--max-nodes", max_nodes);
    sat->add_option("--max-seconds", max_seconds);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return cmd_check(path, cubic, bip, connectivity, planar, cuts, report_out);
        if (ham->parsed())
            return cmd_ham(path, mode, require, forbid, xors, ors, max_nodes, max_seconds);
        if (gen->parsed()) return cmd_gen(max_n, out_dir, jobs, resume);
        if (named_cmd->parsed()) return cmd_named(name, format);
        if (fv->parsed()) return cmd_fragment_verify(name);
        if (color->parsed()) return cmd_color(path);
        if (steinitz->parsed()) return cmd_steinitz(path);
        if (sat->parsed()) return cmd_sat(path, mode, emit_instance, max_nodes, max_seconds);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_parse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    }
    return exit_ok;
}
