#include "isokit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "isokit/construction.hpp"
#include "isokit/exact.hpp"
#include "isokit/harness.hpp"
#include "isokit/io.hpp"
#include "isokit/proof.hpp"

namespace isokit {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violations = 1;
constexpr int exit_usage = 2;
constexpr int exit_invariant = 3;

Pattern load_pattern(const std::string& selector) {
    const auto& names = builtin_pattern_names();
    if (std::find(names.begin(), names.end(), selector) != names.end())
        return builtin_pattern(selector);
    Graph f = read_edge_list_file(selector);
    return make_pattern(f, selector);
}

int default_workers() {
    if (const char* env = std::getenv("ISOLATION_KIT_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;  // let the harness pick hardware concurrency
}

nlohmann::json trace_json(const std::vector<CaseStep>& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const CaseStep& s : trace) {
        nlohmann::json step;
        step["tag"] = std::string(to_string(s.tag));
        step["depth"] = s.depth;
        step["center"] = s.center;
        nlohmann::json locals = nlohmann::json::object();
        for (const auto& [key, value] : s.locals) locals[key] = value;
        step["locals"] = locals;
        steps.push_back(step);
    }
    return steps;
}

void print_trace(std::ostream& out, const std::vector<CaseStep>& trace) {
    for (const CaseStep& s : trace) {
        out << "  ";
        for (int i = 0; i < s.depth; ++i) out << "  ";
        out << to_string(s.tag);
        if (s.center >= 0) out << " v=" << s.center;
        for (const auto& [key, value] : s.locals) out << ' ' << key << '=' << value;
        out << '\n';
    }
}

struct VerifySource {
    int exhaustive_n = 0;
    bool random = false;
    int n = 0, m = 0, count = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> files;
};

Corpus build_corpus(const VerifySource& src) {
    int chosen = (src.exhaustive_n > 0 ? 1 : 0) + (src.random ? 1 : 0) +
                 (src.files.empty() ? 0 : 1);
    if (chosen != 1)
        throw ValidationError("choose exactly one corpus: --exhaustive, --random or --graphs");
    if (src.exhaustive_n > 0) return enumerate_connected(src.exhaustive_n);
    if (src.random) return random_corpus(src.n, src.m, src.count, src.seed);
    return corpus_from_files(src.files);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw ValidationError(path + ": cannot open file for writing");
    f << text;
    if (!f) throw ValidationError(path + ": write failed");
}

int cmd_bound(std::ostream& out, int m, int k) {
    out << bound(m, k) << '\n';
    return exit_ok;
}

int cmd_patterns(std::ostream& out) {
    for (const std::string& name : builtin_pattern_names()) {
        Pattern p = builtin_pattern(name);
        out << name << "  k=" << p.k << " ell=" << p.ell << " dominators=";
        VertexSet d;
        for (Vertex v : p.dominators) d.add(v);
        out << d.to_string() << '\n';
    }
    return exit_ok;
}

int cmd_solve_exact(std::ostream& out, const std::string& pattern, const std::string& graph_file,
                    const std::string& json_out) {
    Pattern f = load_pattern(pattern);
    Graph g = read_edge_list_file(graph_file);
    ExactResult res = iota_exact(g, f);
    out << "pattern: " << f.name << " (k=" << f.k << ", ell=" << f.ell << ")\n";
    out << "graph: n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
    out << "iota: " << res.iota << '\n';
    out << "witness: " << res.witness.to_string() << '\n';
    out << "explored: " << res.explored << '\n';
    if (!json_out.empty()) {
        nlohmann::json j;
        j["pattern"] = f.name;
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        j["iota"] = res.iota;
        j["witness"] = res.witness.to_vector();
        j["explored"] = res.explored;
        write_text_file(json_out, j.dump(2) + "\n");
    }
    return exit_ok;
}

int cmd_solve(std::ostream& out, std::ostream& err, const std::string& pattern,
              const std::string& graph_file, bool fallback_exact, const std::string& json_out) {
    Pattern f = load_pattern(pattern);
    Graph g = read_edge_list_file(graph_file);
    const int b = bound(g.edge_count(), f.k);

    auto print_oracle = [&](int iota, VertexSet witness) {
        out << "pattern: " << f.name << " (k=" << f.k << ")\n";
        out << "graph: n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
        out << "iota: " << iota << " (oracle)\n";
        out << "witness: " << witness.to_string() << '\n';
        if (!json_out.empty()) {
            nlohmann::json j;
            j["pattern"] = f.name;
            j["mode"] = "oracle";
            j["iota"] = iota;
            j["set"] = witness.to_vector();
            j["bound"] = b;
            write_text_file(json_out, j.dump(2) + "\n");
        }
        return exit_ok;
    };

    if (f.k <= 1) {
        ExactResult res = iota_exact(g, f);
        return print_oracle(res.iota, res.witness);
    }
    try {
        Certificate cert = isolate(g, f);
        bool sound = is_isolating(g, f, cert.set);
        out << "pattern: " << f.name << " (k=" << f.k << ")\n";
        out << "graph: n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
        out << "D: " << cert.set.to_string() << " (size " << cert.size() << ")\n";
        out << "bound: " << cert.bound << '\n';
        out << "isolating: " << (sound ? "yes" : "no") << '\n';
        if (!cert.special_components.empty()) {
            out << "special components:";
            for (const VertexSet& c : cert.special_components) out << ' ' << c.to_string();
            out << '\n';
        }
        out << "trace:\n";
        print_trace(out, cert.trace);
        if (!json_out.empty()) {
            nlohmann::json j;
            j["pattern"] = f.name;
            j["mode"] = "constructive";
            j["set"] = cert.set.to_vector();
            j["size"] = cert.size();
            j["bound"] = cert.bound;
            j["isolating"] = sound;
            j["trace"] = trace_json(cert.trace);
            write_text_file(json_out, j.dump(2) + "\n");
        }
        return sound ? exit_ok : exit_invariant;
    } catch (const SolverError& e) {
        if (e.kind() == SolverErrorKind::SpecialPairInput) {
            if (fallback_exact) {
                ExactResult res = iota_exact(g, f);
                return print_oracle(res.iota, res.witness);
            }
            err << e.what() << " (rerun with --fallback-exact for the oracle value)\n";
            return exit_usage;
        }
        err << "proof invariant violated: " << e.what() << '\n';
        print_trace(err, e.context());
        if (fallback_exact) {
            ExactResult res = iota_exact(g, f);
            return print_oracle(res.iota, res.witness);
        }
        return exit_invariant;
    }
}

int cmd_generate(std::ostream& out, const std::string& pattern, int m, const std::string& tree,
                 std::uint64_t seed, const std::string& attach, const std::string& remainder,
                 bool pure, const std::string& out_path) {
    Pattern f = load_pattern(pattern);
    BuildOptions opts;
    if (tree == "path")
        opts.tree = TreeShape::Path;
    else if (tree == "star")
        opts.tree = TreeShape::Star;
    else if (tree == "random")
        opts.tree = TreeShape::Random;
    else
        throw ValidationError("unknown tree shape \"" + tree + "\"");
    opts.seed = seed;
    if (attach == "random")
        opts.attach_random = true;
    else if (attach != "dominator")
        throw ValidationError("unknown attach mode \"" + attach + "\"");
    if (!remainder.empty() && remainder != "edgeless")
        opts.remainder = read_edge_list_file(remainder);

    BuiltSpecial built = build_special(f, m, opts);
    if (pure && !built.spec.pure)
        throw ValidationError("--pure requested but m+1 is not divisible by k+2");
    bool verified = verify_special(built, f);

    if (out_path.empty()) {
        write_edge_list(out, built.graph);
    } else {
        write_edge_list_file(out_path, built.graph);
        nlohmann::json j;
        j["pattern"] = f.name;
        j["k"] = f.k;
        j["ell"] = f.ell;
        j["m"] = built.spec.m;
        j["q"] = built.spec.q;
        j["r"] = built.spec.r;
        j["pure"] = built.spec.pure;
        j["tree"] = tree;
        j["seed"] = seed;
        nlohmann::json tree_edges = nlohmann::json::array();
        for (auto [u, v] : built.spec.tree_edges) tree_edges.push_back({u, v});
        j["tree_edges"] = tree_edges;
        nlohmann::json rem_edges = nlohmann::json::array();
        for (auto [u, v] : built.spec.remainder.edges()) rem_edges.push_back({u, v});
        j["remainder_edges"] = rem_edges;
        j["attach"] = built.spec.attach;
        j["connections"] = built.connections;
        nlohmann::json constituents = nlohmann::json::array();
        for (const VertexSet& c : built.constituent_vertex_sets)
            constituents.push_back(c.to_vector());
        j["constituents"] = constituents;
        j["special_pair"] = built.special_pair;
        j["verified"] = verified;
        write_text_file(out_path + ".json", j.dump(2) + "\n");
        out << "wrote " << out_path << " (n=" << built.graph.vertex_count()
            << " m=" << built.graph.edge_count() << ", q=" << built.spec.q
            << ", r=" << built.spec.r << ")\n";
    }
    if (built.special_pair)
        out << "note: the built graph itself forms a special pair with " << f.name << '\n';
    out << "verified: " << (verified ? "yes" : "no") << '\n';
    return exit_ok;
}

int cmd_verify(std::ostream& out, const VerifySource& src,
               const std::vector<std::string>& pattern_names, bool use_exact, bool fail_fast,
               int workers, const std::string& out_path) {
    Corpus corpus = build_corpus(src);
    std::vector<Pattern> patterns;
    for (const std::string& name : pattern_names) patterns.push_back(load_pattern(name));
    VerifyOptions opts;
    opts.use_exact = use_exact;
    opts.fail_fast = fail_fast;
    opts.workers = workers;
    VerificationReport report = verify_corpus(corpus, patterns, opts);

    out << "source: " << report.source << '\n';
    out << "rows: " << report.rows.size() << '\n';
    out << "violations: " << report.violations << '\n';
    out << "equality rows: " << report.equality_count << '\n';
    if (!report.case_histogram.empty()) {
        out << "case histogram:\n";
        for (const auto& [tag, count] : report.case_histogram)
            out << "  " << tag << ": " << count << '\n';
    }
    if (!out_path.empty()) {
        write_text_file(out_path, report.to_csv());
        write_text_file(out_path + ".summary.json", report.summary_json() + "\n");
        out << "report: " << out_path << '\n';
    }
    return report.violations == 0 ? exit_ok : exit_violations;
}

int cmd_find_extremal(std::ostream& out, const VerifySource& src, const std::string& pattern,
                      const std::string& out_path) {
    Corpus corpus = build_corpus(src);
    Pattern f = load_pattern(pattern);
    std::vector<Graph> found = find_extremal(f, corpus);
    std::ostringstream text;
    for (std::size_t i = 0; i < found.size(); ++i) {
        const Graph& g = found[i];
        text << "# extremal " << i << ": n=" << g.vertex_count() << " m=" << g.edge_count()
             << " bound=" << bound(g.edge_count(), f.k);
        if (g.vertex_count() <= canonical_form_limit)
            text << " canon=" << hex_encode(canonical_form(g));
        text << '\n';
        write_edge_list(text, g);
    }
    out << "extremal graphs: " << found.size() << " of " << corpus.graphs.size() << '\n';
    if (out_path.empty())
        out << text.str();
    else
        write_text_file(out_path, text.str());
    return exit_ok;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"F-isolation toolkit: exact and bound-certified isolating sets, "
                 "extremal graph generation, and exhaustive verification"};
    app.require_subcommand(1);

    // bound
    auto* sc_bound = app.add_subcommand("bound", "print floor((m+1)/(k+2))");
    int opt_m = 0, opt_k = 0;
    sc_bound->add_option("--m", opt_m, "edge count of the host graph")->required();
    sc_bound->add_option("--k", opt_k, "edge count of the pattern")->required();

    // patterns
    auto* sc_patterns = app.add_subcommand("patterns", "list the built-in pattern library");

    // solve-exact
    auto* sc_exact = app.add_subcommand("solve-exact", "exact isolation number by brute force");
    std::string ex_pattern, ex_graph, ex_json;
    sc_exact->add_option("--pattern", ex_pattern, "built-in name or edge-list file")->required();
    sc_exact->add_option("--graph", ex_graph, "edge-list file")->required();
    sc_exact->add_option("--json", ex_json, "write the result as JSON");

    // solve
    auto* sc_solve = app.add_subcommand("solve", "bound-certified isolating set");
    std::string so_pattern, so_graph, so_json;
    bool so_fallback = false;
    sc_solve->add_option("--pattern", so_pattern, "built-in name or edge-list file")->required();
    sc_solve->add_option("--graph", so_graph, "edge-list file")->required();
    sc_solve->add_flag("--fallback-exact", so_fallback,
                       "fall back to the exact solver on special pairs or invariant failures");
    sc_solve->add_option("--json", so_json, "write the certificate as JSON");

    // generate-special
    auto* sc_gen = app.add_subcommand("generate-special", "build an extremal (m,F)-special graph");
    std::string ge_pattern, ge_tree = "path", ge_attach = "dominator", ge_rem, ge_out;
    int ge_m = 0;
    std::uint64_t ge_seed = 0;
    bool ge_pure = false;
    sc_gen->add_option("--pattern", ge_pattern, "built-in name or edge-list file")->required();
    sc_gen->add_option("--m", ge_m, "target edge count")->required();
    sc_gen->add_option("--tree", ge_tree, "tree shape: path|star|random");
    sc_gen->add_option("--seed", ge_seed, "seed for random tree/attachment");
    sc_gen->add_option("--attach", ge_attach, "attachment choice: dominator|random");
    sc_gen->add_option("--remainder", ge_rem, "edge-list file or \"edgeless\"");
    sc_gen->add_flag("--pure", ge_pure, "require an edgeless remainder");
    sc_gen->add_option("--out", ge_out, "output edge-list path (JSON sidecar at <out>.json)");

    // verify
    auto* sc_verify = app.add_subcommand("verify", "run the solvers over a corpus");
    std::vector<std::string> ve_patterns;
    VerifySource ve_src;
    bool ve_exact = false, ve_fail_fast = false;
    int ve_workers = default_workers();
    std::string ve_out;
    sc_verify->add_option("--pattern", ve_patterns, "pattern (repeatable)")->required();
    sc_verify->add_option("--exhaustive", ve_src.exhaustive_n,
                          "all connected graphs on n vertices (n <= 8)");
    sc_verify->add_flag("--random", ve_src.random, "random connected corpus");
    sc_verify->add_option("--n", ve_src.n, "random corpus: vertex count");
    sc_verify->add_option("--m", ve_src.m, "random corpus: edge count");
    sc_verify->add_option("--count", ve_src.count, "random corpus: number of graphs");
    sc_verify->add_option("--seed", ve_src.seed, "random corpus: seed");
    sc_verify->add_option("--graphs", ve_src.files, "edge-list files");
    sc_verify->add_flag("--exact", ve_exact, "also compute the exact isolation number");
    sc_verify->add_flag("--fail-fast", ve_fail_fast, "abort on the first solver error");
    sc_verify->add_option("--workers", ve_workers, "worker threads (default: cores)");
    sc_verify->add_option("--out", ve_out, "CSV path (summary at <out>.summary.json)");

    // find-extremal
    auto* sc_find = app.add_subcommand("find-extremal", "graphs attaining the bound exactly");
    std::string fe_pattern, fe_out;
    VerifySource fe_src;
    sc_find->add_option("--pattern", fe_pattern, "built-in name or edge-list file")->required();
    sc_find->add_option("--exhaustive", fe_src.exhaustive_n,
                        "all connected graphs on n vertices (n <= 8)");
    sc_find->add_flag("--random", fe_src.random, "random connected corpus");
    sc_find->add_option("--n", fe_src.n, "random corpus: vertex count");
    sc_find->add_option("--m", fe_src.m, "random corpus: edge count");
    sc_find->add_option("--count", fe_src.count, "random corpus: number of graphs");
    sc_find->add_option("--seed", fe_src.seed, "random corpus: seed");
    sc_find->add_option("--graphs", fe_src.files, "edge-list files");
    sc_find->add_option("--out", fe_out, "output path");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (sc_bound->parsed()) return cmd_bound(out, opt_m, opt_k);
        if (sc_patterns->parsed()) return cmd_patterns(out);
        if (sc_exact->parsed()) return cmd_solve_exact(out, ex_pattern, ex_graph, ex_json);
        if (sc_solve->parsed())
            return cmd_solve(out, err, so_pattern, so_graph, so_fallback, so_json);
        if (sc_gen->parsed())
            return cmd_generate(out, ge_pattern, ge_m, ge_tree, ge_seed, ge_attach, ge_rem,
                                ge_pure, ge_out);
        if (sc_verify->parsed())
            return cmd_verify(out, ve_src, ve_patterns, ve_exact, ve_fail_fast, ve_workers,
                              ve_out);
        if (sc_find->parsed()) return cmd_find_extremal(out, fe_src, fe_pattern, fe_out);
        err << "no subcommand selected\n";
        return exit_usage;
    } catch (const SolverError& e) {
        if (e.kind() == SolverErrorKind::ProofInvariantViolated) {
            err << "proof invariant violated: " << e.what() << '\n';
            print_trace(err, e.context());
            return exit_invariant;
        }
        err << e.what() << '\n';
        return exit_usage;
    } catch (const ValidationError& e) {
        err << e.what() << '\n';
        return exit_usage;
    } catch (const UnsupportedError& e) {
        err << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace isokit
