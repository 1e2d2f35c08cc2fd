#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gint/bounds.hpp"
#include "gint/errors.hpp"
#include "gint/graph.hpp"
#include "gint/hypergraph.hpp"
#include "gint/solver.hpp"
#include "gint/sweep.hpp"

namespace gint {

namespace detail {

// Next content line: strips '#' comments and blank lines.
inline bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) return true;
    }
    return false;
}

}  // namespace detail

/// Graph text format: first line "n m", then m lines "u v" with
/// 0 <= u < v < n; '#' starts a comment.
inline Graph read_graph(std::istream& in) {
    std::string line;
    if (!detail::next_line(in, line)) throw ParseError("graph: missing header line");
    std::istringstream hdr(line);
    long long n = 0, m = 0;
    if (!(hdr >> n >> m) || n < 1 || m < 0)
        throw ParseError("graph: header must be \"n m\" with n >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!detail::next_line(in, line))
            throw ParseError("graph: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        std::istringstream es(line);
        long long u = 0, v = 0;
        if (!(es >> u >> v)) throw ParseError("graph: bad edge line \"" + line + "\"");
        if (!(0 <= u && u < v && v < n))
            throw ParseError("graph: edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") violates 0 <= u < v < n");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return Graph(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("graph: ") + e.what());
    }
}

inline void write_graph(std::ostream& out, const Graph& g) {
    auto edges = g.edges();
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

/// Hypergraph text format: first line "n m k" (k = 0 for non-uniform),
/// then m lines of space-separated vertex ids per edge.
inline Hypergraph read_hypergraph(std::istream& in) {
    std::string line;
    if (!detail::next_line(in, line)) throw ParseError("hypergraph: missing header line");
    std::istringstream hdr(line);
    long long n = 0, m = 0, k = 0;
    if (!(hdr >> n >> m >> k) || n < 1 || m < 0 || k < 0)
        throw ParseError("hypergraph: header must be \"n m k\"");
    std::vector<VertexSet> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!detail::next_line(in, line))
            throw ParseError("hypergraph: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        std::istringstream es(line);
        VertexSet e;
        long long v = 0;
        int sz = 0;
        while (es >> v) {
            if (v < 0 || v >= n)
                throw ParseError("hypergraph: vertex " + std::to_string(v) + " out of range");
            if (e.contains(static_cast<int>(v)))
                throw ParseError("hypergraph: repeated vertex in edge \"" + line + "\"");
            e.add(static_cast<int>(v));
            ++sz;
        }
        if (k > 0 && sz != k)
            throw ParseError("hypergraph: edge \"" + line + "\" is not " + std::to_string(k) +
                             "-uniform");
        edges.push_back(e);
    }
    try {
        return Hypergraph(static_cast<int>(n), std::move(edges),
                          k > 0 ? std::optional<int>(static_cast<int>(k)) : std::nullopt);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("hypergraph: ") + e.what());
    }
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << h.ground_size() << ' ' << h.size() << ' ' << h.uniform_k().value_or(0) << '\n';
    for (const auto& e : h.edges()) {
        bool sep = false;
        for (int v = e.first(); v >= 0; v = e.next(v)) {
            if (sep) out << ' ';
            out << v;
            sep = true;
        }
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// JSON / CSV emission. All counts are decimal strings so consumers never
// truncate on integer width.
// ---------------------------------------------------------------------------

using json = nlohmann::json;

inline json to_json(const BoundReport& r) {
    json j{{"n", r.n},
           {"k", r.k},
           {"delta", r.delta},
           {"omega", r.omega},
           {"ekr", r.ekr.str()},
           {"theorem2", r.theorem2.str()},
           {"lemma1_ok", r.lemma1_ok},
           {"clique_separation_ok", r.clique_sep_ok}};
    j["cycle_formula"] = r.cycle ? json(r.cycle->str()) : json(nullptr);
    j["lemma2_ok"] = r.lemma2_ok ? json(*r.lemma2_ok) : json(nullptr);
    json taus = json::array();
    for (const auto& [tau, value] : r.tau_expr)
        taus.push_back({{"tau", tau}, {"value", value.str()}});
    j["tau_expression"] = taus;
    return j;
}

inline std::string format_bound_table(const BoundReport& r) {
    std::ostringstream out;
    auto line = [&](const std::string& name, const std::string& value) {
        out << "  " << name;
        for (std::size_t i = name.size(); i < 22; ++i) out << ' ';
        out << value << '\n';
    };
    out << "bound report (n=" << r.n << ", k=" << r.k << ")\n";
    line("max degree", std::to_string(r.delta));
    line("clique number", std::to_string(r.omega));
    line("ekr", r.ekr.str());
    line("theorem2", r.theorem2.str());
    if (r.cycle) line("cycle_formula", r.cycle->str());
    line("lemma1 threshold", r.lemma1_ok ? "holds" : "fails");
    line("lemma2 threshold", r.lemma2_ok ? (*r.lemma2_ok ? "holds" : "fails") : "n/a (edgeless)");
    line("n > (delta+2)k", r.clique_sep_ok ? "holds" : "fails");
    for (const auto& [tau, value] : r.tau_expr)
        line("tau_expression(" + std::to_string(tau) + ")", value.str());
    return out.str();
}

inline json to_json(const StructureReport& r) {
    json cliques = json::array();
    for (const auto& c : r.qualifying_cliques) cliques.push_back(c.elements());
    return json{{"n", r.n},
                {"k", r.k},
                {"delta", r.delta},
                {"omega", r.omega},
                {"value", r.value.str()},
                {"theorem2", r.theorem2.str()},
                {"within_theorem2", r.within_theorem2},
                {"lemma1_ok", r.lemma1_ok},
                {"lemma2_ok", r.lemma2_ok ? json(*r.lemma2_ok) : json(nullptr)},
                {"maximum_clique_count", r.maximum_clique_count},
                {"qualifying_cliques", cliques},
                {"any_clique_qualifies", r.any_clique_qualifies}};
}

inline json to_json(const SolveResult& r, const StructureReport& structure) {
    json witness = json::array();
    for (const auto& e : r.witness.edges()) witness.push_back(e.elements());
    return json{{"value", std::to_string(r.value)},
                {"witness_size", std::to_string(r.witness.size())},
                {"witness", witness},
                {"nodes", r.stats.nodes},
                {"wall_seconds", r.stats.wall_seconds},
                {"structure", to_json(structure)}};
}

inline constexpr const char* kSweepCsvHeader = "n,k,formula,construction,exact,ratio,k_over_n,status";

inline std::string format_double(double x) {
    std::ostringstream out;
    out.precision(12);
    out << x;
    return out.str();
}

inline std::string to_csv(const SweepRow& r) {
    std::string status = r.status;
    for (auto& c : status)
        if (c == ',') c = ';';  // keep the row single-record
    std::ostringstream out;
    out << r.n << ',' << r.k << ',' << r.formula.str() << ',' << r.construction.str() << ','
        << (r.exact ? r.exact->str() : "") << ',' << format_double(r.ratio) << ','
        << format_double(r.k_over_n) << ',' << status;
    return out.str();
}

inline json to_json(const SweepRow& r) {
    return json{{"n", r.n},
                {"k", r.k},
                {"formula", r.formula.str()},
                {"construction", r.construction.str()},
                {"exact", r.exact ? json(r.exact->str()) : json(nullptr)},
                {"ratio", r.ratio},
                {"k_over_n", r.k_over_n},
                {"c_ref", conjecture_constant(2)},
                {"status", r.status}};
}

}  // namespace gint
