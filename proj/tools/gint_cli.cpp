// gint: exact computations for G-intersecting k-uniform hypergraphs.
//
// Commands: bound, construct, verify, tau, solve, sweep. Graphs come from
// builtin names (empty:n, cycle:n, path:n, complete:n) or edge-list files;
// hypergraphs from the "n m k" text format. Output is text, JSON, or (for
// sweeps) CSV with the fixed header n,k,formula,construction,exact,ratio,
// k_over_n,status.
//
// Exit status: 0 success (verification verdicts live in the payload),
// 2 bad input, 3 capacity exceeded, 4 internal invariant failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gint/gint.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInternal = 4;

struct GraphSpec {
    std::string builtin;  // "empty:8" etc.
    std::string file;
};

gint::Graph load_graph(const GraphSpec& spec) {
    if (!spec.file.empty()) {
        std::ifstream in(spec.file);
        if (!in) throw gint::ParseError("cannot open graph file " + spec.file);
        return gint::read_graph(in);
    }
    auto colon = spec.builtin.find(':');
    if (colon == std::string::npos)
        throw gint::ParseError("graph must be name:n (empty, cycle, path, complete)");
    std::string name = spec.builtin.substr(0, colon);
    int n = 0;
    try {
        n = std::stoi(spec.builtin.substr(colon + 1));
    } catch (const std::exception&) {
        throw gint::ParseError("bad vertex count in graph spec " + spec.builtin);
    }
    if (name == "empty") return gint::empty_graph(n);
    if (name == "cycle") return gint::cycle_graph(n);
    if (name == "path") return gint::path_graph(n);
    if (name == "complete") return gint::complete_graph(n);
    throw gint::ParseError("unknown builtin graph " + name);
}

gint::Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gint::ParseError("cannot open hypergraph file " + path);
    return gint::read_hypergraph(in);
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw gint::ParseError("cannot open output file " + path);
    return file;
}

std::size_t env_or(const char* name, std::size_t fallback) {
    const char* s = std::getenv(name);
    if (!s) return fallback;
    try {
        return static_cast<std::size_t>(std::stoull(s));
    } catch (const std::exception&) {
        throw gint::ParseError(std::string("bad value in environment variable ") + name);
    }
}

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
    auto colon = s.find(':');
    try {
        if (colon == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
    } catch (const std::exception&) {
        throw gint::ParseError("bad range " + s + " (expected lo:hi)");
    }
}

void check_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (fmt == a) return;
    throw gint::ParseError("format " + fmt + " is not supported by this command");
}

// ---------------------------------------------------------------------------

int cmd_bound(const GraphSpec& gs, int k, const std::string& fmt, const std::string& out_path) {
    check_format(fmt, {"text", "json"});
    gint::Graph g = load_graph(gs);
    gint::BoundReport rep = gint::compute_bounds(g, k);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    if (fmt == "json")
        out << gint::to_json(rep).dump(2) << '\n';
    else
        out << gint::format_bound_table(rep);
    return kExitOk;
}

int cmd_construct(const std::string& family, GraphSpec gs, int n, int k,
                  const std::string& clique_str, std::size_t budget, const std::string& fmt,
                  const std::string& out_path) {
    check_format(fmt, {"text", "json"});
    std::unique_ptr<gint::Graph> g;
    std::unique_ptr<gint::Hypergraph> h;
    auto guard_enumeration = [budget](int nn, int kk) {
        gint::BigInt total = gint::binomial(nn, kk);
        if (total > budget)
            throw gint::CapacityError("C(" + std::to_string(nn) + "," + std::to_string(kk) + ")=" +
                                      total.str() + " k-subsets exceed the construct budget " +
                                      std::to_string(budget));
    };
    if (family == "cycle-extremal") {
        if (n == 0) throw gint::ParseError("--family cycle-extremal requires --n");
        guard_enumeration(n, k);
        g = std::make_unique<gint::Graph>(gint::cycle_graph(n));
        h = std::make_unique<gint::Hypergraph>(gint::build_cycle_extremal(n, k));
    } else if (family == "clique" || family == "augmented") {
        if (gs.builtin.empty() && gs.file.empty())
            throw gint::ParseError("--family " + family + " requires --graph or --graph-file");
        g = std::make_unique<gint::Graph>(load_graph(gs));
        guard_enumeration(g->vertex_count(), k);
        gint::VertexSet clique;
        if (!clique_str.empty()) {
            std::istringstream cs(clique_str);
            std::string tok;
            while (std::getline(cs, tok, ',')) clique.add(std::stoi(tok));
        } else {
            clique = gint::clique_number(*g).maximum_cliques.front();
        }
        h = std::make_unique<gint::Hypergraph>(family == "clique"
                                                   ? gint::build_clique_family(*g, clique, k)
                                                   : gint::augment_clique_family(*g, clique, k));
    } else {
        throw gint::ParseError("unknown family " + family +
                               " (expected clique, cycle-extremal, or augmented)");
    }

    bool ok = gint::is_g_intersecting(*g, *h);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    gint::write_hypergraph(out, *h);
    std::ostream& meta = out_path.empty() ? std::cerr : std::cout;
    if (fmt == "json")
        meta << gint::json{{"size", std::to_string(h->size())}, {"g_intersecting", ok}}.dump()
             << '\n';
    else
        meta << "edges: " << h->size() << "\nG-intersecting: " << (ok ? "yes" : "no") << '\n';
    return kExitOk;
}

int cmd_verify(const GraphSpec& gs, const std::string& hg_path, const std::string& fmt,
               const std::string& out_path) {
    check_format(fmt, {"text", "json"});
    gint::Graph g = load_graph(gs);
    gint::Hypergraph h = load_hypergraph(hg_path);
    if (h.ground_size() != g.vertex_count())
        throw gint::ParseError("hypergraph ground set does not match graph vertex count");
    bool ok = gint::is_g_intersecting(g, h);
    bool cross = gint::check_cross_condition(g, h);
    gint::CoverResult tau = gint::cover_number(gint::neighborhood_hypergraph(g, h));

    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    int k = h.uniform_k().value_or(0);
    gint::json j{{"g_intersecting", ok},
                 {"cross_condition", cross},
                 {"size", std::to_string(h.size())},
                 {"tau_of_neighborhood", tau.tau}};
    if (k >= 1) {
        j["ekr"] = gint::ekr_bound(g.vertex_count(), k).str();
        gint::BoundReport rep = gint::compute_bounds(g, k);
        j["theorem2"] = rep.theorem2.str();
        j["within_theorem2"] = gint::BigInt(h.size()) <= rep.theorem2;
    }
    if (fmt == "json") {
        out << j.dump(2) << '\n';
    } else {
        out << "G-intersecting: " << (ok ? "yes" : "no") << '\n'
            << "size: " << h.size() << '\n'
            << "cross condition (h meets every N(h')): " << (cross ? "yes" : "no") << '\n'
            << "tau of neighborhood hypergraph: " << tau.tau << '\n';
        if (k >= 1)
            out << "ekr bound: " << j["ekr"].get<std::string>() << '\n'
                << "theorem2 bound: " << j["theorem2"].get<std::string>() << " (size within: "
                << (j["within_theorem2"].get<bool>() ? "yes" : "no") << ")\n";
    }
    return kExitOk;
}

int cmd_tau(const std::string& hg_path, const std::string& fmt, const std::string& out_path) {
    check_format(fmt, {"text", "json"});
    gint::Hypergraph h = load_hypergraph(hg_path);
    gint::CoverResult r = gint::cover_number(h);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    if (fmt == "json")
        out << gint::json{{"tau", r.tau}, {"cover", r.cover.elements()}}.dump() << '\n';
    else
        out << "tau: " << r.tau << "\ncover: " << r.cover.to_string() << '\n';
    return kExitOk;
}

int cmd_solve(const GraphSpec& gs, int k, const gint::SolveOptions& opt, const std::string& fmt,
              const std::string& out_path) {
    check_format(fmt, {"text", "json", "csv"});
    gint::Graph g = load_graph(gs);
    gint::SolveResult res = gint::solve_exact(g, k, opt);
    gint::StructureReport structure = gint::verify_extremal_structure(g, k, res);

    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    if (fmt == "json") {
        out << gint::to_json(res, structure).dump(2) << '\n';
    } else if (fmt == "csv") {
        gint::SweepRow row;
        row.n = g.vertex_count();
        row.k = k;
        row.formula = gint::is_cycle_graph(g) && k >= 2 ? gint::cycle_formula(g.vertex_count(), k)
                                                        : gint::BigInt(0);
        row.construction = row.formula;
        row.exact = gint::BigInt(res.value);
        row.ratio = gint::big_ratio(*row.exact, gint::binomial(g.vertex_count(), k));
        row.k_over_n = static_cast<double>(k) / g.vertex_count();
        out << gint::kSweepCsvHeader << '\n' << gint::to_csv(row) << '\n';
    } else {
        out << "value: " << res.value << '\n'
            << "witness size: " << res.witness.size() << '\n'
            << "nodes: " << res.stats.nodes << '\n'
            << "wall seconds: " << res.stats.wall_seconds << '\n'
            << "delta: " << structure.delta << "  omega: " << structure.omega << '\n'
            << "theorem2 bound: " << structure.theorem2.str()
            << " (value within: " << (structure.within_theorem2 ? "yes" : "no") << ")\n"
            << "lemma1 threshold: " << (structure.lemma1_ok ? "holds" : "fails") << '\n'
            << "lemma2 threshold: "
            << (structure.lemma2_ok ? (*structure.lemma2_ok ? "holds" : "fails") : "n/a (edgeless)")
            << '\n'
            << "maximum cliques: " << structure.maximum_clique_count
            << "  qualifying (full H_K in witness): " << structure.qualifying_cliques.size()
            << '\n';
    }
    return kExitOk;
}

int cmd_sweep(const Range& nr, const Range& kr, const std::string& mode_str,
              const gint::SolveOptions& opt, const std::string& fmt, const std::string& out_path) {
    check_format(fmt, {"text", "json", "csv"});
    gint::SweepMode mode;
    if (mode_str == "exact")
        mode = gint::SweepMode::exact;
    else if (mode_str == "bounds-only")
        mode = gint::SweepMode::bounds_only;
    else
        throw gint::ParseError("mode must be exact or bounds-only");

    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    if (fmt == "csv") out << gint::kSweepCsvHeader << '\n';
    if (fmt == "text")
        out << "cycle sweep, mode=" << mode_str
            << ", reference constant c(delta=2)=" << gint::format_double(gint::conjecture_constant(2))
            << '\n';
    gint::sweep_cycle(
        nr.lo, nr.hi, kr.lo, kr.hi, mode,
        [&](const gint::SweepRow& row) {
            if (fmt == "json")
                out << gint::to_json(row).dump() << '\n';
            else if (fmt == "csv")
                out << gint::to_csv(row) << '\n';
            else
                out << "n=" << row.n << " k=" << row.k << " formula=" << row.formula.str()
                    << " construction=" << row.construction.str()
                    << " exact=" << (row.exact ? row.exact->str() : "-")
                    << " ratio=" << gint::format_double(row.ratio) << " k/n="
                    << gint::format_double(row.k_over_n) << " status=" << row.status << '\n';
            out.flush();  // rows stream as produced
        },
        opt);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for G-intersecting k-uniform hypergraphs"};
    app.require_subcommand(1);

    GraphSpec gs;
    int k = 0, n = 0;
    std::string fmt = "text", out_path, family = "cycle-extremal", clique_str, hg_path;
    std::string n_range_str, k_range_str, mode_str = "bounds-only";
    gint::SolveOptions opt;

    auto add_graph_opts = [&](CLI::App* cmd, bool required) {
        auto* g1 = cmd->add_option("--graph", gs.builtin, "builtin graph name:n");
        auto* g2 = cmd->add_option("--graph-file", gs.file, "edge-list file (\"n m\" header)");
        g1->excludes(g2);
        if (required) {
            // exactly one graph source
            cmd->callback([cmd]() {
                if (cmd->count("--graph") + cmd->count("--graph-file") != 1)
                    throw CLI::ValidationError("graph", "exactly one of --graph/--graph-file required");
            });
        }
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", fmt, "text | json | csv");
        cmd->add_option("--output", out_path, "write to file instead of stdout");
    };

    auto* bound = app.add_subcommand("bound", "evaluate every closed-form bound for (G,k)");
    add_graph_opts(bound, true);
    bound->add_option("--k", k, "set size")->required();
    add_common(bound);

    std::size_t construct_budget = 10000000;  // enumeration guard, not the solver budget
    auto* construct = app.add_subcommand("construct", "build an extremal family and write it");
    construct->add_option("--family", family, "clique | cycle-extremal | augmented");
    add_graph_opts(construct, false);
    construct->add_option("--n", n, "cycle length (cycle-extremal)");
    construct->add_option("--k", k, "set size")->required();
    construct->add_option("--clique", clique_str, "comma-separated clique vertices");
    construct->add_option("--budget", construct_budget, "max number of k-subsets to enumerate");
    add_common(construct);

    auto* verify = app.add_subcommand("verify", "check a hypergraph file against a graph");
    add_graph_opts(verify, true);
    verify->add_option("--hypergraph", hg_path, "hypergraph file")->required();
    add_common(verify);

    auto* tau = app.add_subcommand("tau", "cover number of a hypergraph file");
    tau->add_option("--hypergraph", hg_path, "hypergraph file")->required();
    add_common(tau);

    auto* solve = app.add_subcommand("solve", "exact N(G,k) by conflict-graph search");
    add_graph_opts(solve, true);
    solve->add_option("--k", k, "set size")->required();
    solve->add_option("--workers", opt.workers, "parallel workers (value stays deterministic)");
    solve->add_option("--budget", opt.vertex_budget, "max number of k-subsets");
    add_common(solve);

    auto* sweep = app.add_subcommand("sweep", "cycle conjecture exploration over (n,k) ranges");
    sweep->add_option("--n-range", n_range_str, "n range lo:hi")->required();
    sweep->add_option("--k-range", k_range_str, "k range lo:hi")->required();
    sweep->add_option("--mode", mode_str, "exact | bounds-only");
    sweep->add_option("--workers", opt.workers, "parallel workers (exact mode)");
    sweep->add_option("--budget", opt.vertex_budget, "max number of k-subsets per cell");
    add_common(sweep);

    try {
        // env overrides mirror the flags; flags take precedence
        opt.vertex_budget = env_or("GINT_VERTEX_BUDGET", opt.vertex_budget);
        opt.workers = static_cast<int>(env_or("GINT_WORKERS", static_cast<std::size_t>(opt.workers)));

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0) return app.exit(e);  // --help
            std::cerr << "error: bad_input: " << e.what() << '\n';
            return kExitBadInput;
        }
        if (opt.workers < 1) throw gint::ParseError("worker count must be >= 1");

        if (*bound) return cmd_bound(gs, k, fmt, out_path);
        if (*construct)
            return cmd_construct(family, gs, n, k, clique_str, construct_budget, fmt, out_path);
        if (*verify) return cmd_verify(gs, hg_path, fmt, out_path);
        if (*tau) return cmd_tau(hg_path, fmt, out_path);
        if (*solve) return cmd_solve(gs, k, opt, fmt, out_path);
        if (*sweep) return cmd_sweep(parse_range(n_range_str), parse_range(k_range_str), mode_str,
                                     opt, fmt, out_path);
        return kExitBadInput;
    } catch (const gint::CapacityError& e) {
        std::cerr << "error: capacity_exceeded: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const gint::ParseError& e) {
        std::cerr << "error: bad_input: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: bad_input: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::logic_error& e) {
        std::cerr << "error: internal_error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: internal_error: " << e.what() << '\n';
        return kExitInternal;
    }
}
