// Command-line front end. Four subcommands:
//
//   gen      build a named family member and emit it as graph6
//   analyze  full clique/spectral/srg report for a graph6 input
//   predict  parameter-only clique-graph spectrum prediction for an srg
//   verify   run a named theorem check and report pass/fail
//
// Reports are JSON on stdout with a fixed field order; identical inputs give
// byte-identical output (--timestamp adds a clock field and is off by
// default). Exit codes: 0 success, 1 internal failure or failed verify,
// 2 usage/validation, 3 I/O, 4 resource limit.

#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliquegraph/cliques.hpp"
#include "cliquegraph/corpus.hpp"
#include "cliquegraph/errors.hpp"
#include "cliquegraph/generators.hpp"
#include "cliquegraph/graph.hpp"
#include "cliquegraph/graph6.hpp"
#include "cliquegraph/isomorphism.hpp"
#include "cliquegraph/report.hpp"
#include "cliquegraph/spectral.hpp"
#include "cliquegraph/spectrum.hpp"
#include "cliquegraph/srg.hpp"

using namespace cliquegraph;

namespace {

int exact_limit() {
    if (const char* s = std::getenv("CLIQUEGRAPH_EXACT_LIMIT")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end == s || *end != '\0' || v < 1)
            throw invalid_argument_error("CLIQUEGRAPH_EXACT_LIMIT must be a positive integer");
        return static_cast<int>(v);
    }
    return default_exact_limit();
}

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        if (std::cin.bad()) throw io_error("failed to read stdin");
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw io_error("failed to read " + path);
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!std::cout) throw io_error("failed to write stdout");
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw io_error("cannot open " + out_path + " for writing");
    out << text;
    out.flush();
    if (!out) throw io_error("failed to write " + out_path);
}

long long parse_ll(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw invalid_argument_error(what + " must be an integer, got '" + s + "'");
    }
}

// ---------------------------------------------------------------- rendering

// YAML-ish plain-text view of a report. Spectrum-shaped arrays (objects with
// value and multiplicity) render compactly as "v^m v^m ...".
bool is_spectrum_array(const ordered_json& j) {
    if (!j.is_array() || j.empty()) return false;
    for (const auto& e : j)
        if (!e.is_object() || !e.contains("value") || !e.contains("multiplicity")) return false;
    return true;
}

std::string spectrum_line(const ordered_json& j) {
    std::string out;
    for (const auto& e : j) {
        if (!out.empty()) out += "  ";
        if (e["value"].is_string()) out += e["value"].get<std::string>();
        else out += e["value"].dump();
        out += "^" + e["multiplicity"].dump();
    }
    return out;
}

void render_text(const ordered_json& j, std::ostream& os, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, val] : j.items()) {
            if (is_spectrum_array(val)) {
                os << pad << key << ": " << spectrum_line(val) << "\n";
            } else if (val.is_object() || (val.is_array() && !val.empty() && val.front().is_structured())) {
                os << pad << key << ":\n";
                render_text(val, os, indent + 2);
            } else {
                os << pad << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& val : j) {
            os << pad << "-\n";
            render_text(val, os, indent + 2);
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit_report(const ordered_json& rep, bool pretty, const std::string& out_path) {
    if (pretty) {
        std::ostringstream os;
        render_text(rep, os, 0);
        emit(os.str(), out_path);
    } else {
        emit(rep.dump() + "\n", out_path);
    }
}

ordered_json report_header(const std::string& command, bool timestamp) {
    ordered_json rep;
    rep["schema_version"] = report_schema_version;
    rep["command"] = command;
    if (timestamp) {
        char buf[32];
        std::time_t now = std::time(nullptr);
        std::tm tm{};
        gmtime_r(&now, &tm);
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        rep["generated_at"] = buf;
    }
    return rep;
}

// ---------------------------------------------------------------- families

Graph make_family(const std::string& family, const std::vector<std::string>& params) {
    auto arity = [&](std::size_t want, const char* usage) {
        if (params.size() != want)
            throw invalid_argument_error("family '" + family + "' expects: " + usage);
    };
    auto num = [&](std::size_t i, const char* what) { return parse_ll(params[i], what); };
    if (family == "rook") {
        arity(1, "rook <n>");
        return rook_graph(static_cast<int>(num(0, "n")));
    }
    if (family == "triangular") {
        arity(1, "triangular <n>");
        return triangular_graph(static_cast<int>(num(0, "n")));
    }
    if (family == "oa-block") {
        arity(2, "oa-block <n> <m>");
        return oa_block_graph(
            orthogonal_array(static_cast<int>(num(0, "n")), static_cast<int>(num(1, "m"))));
    }
    if (family == "gq-symplectic") {
        arity(1, "gq-symplectic <q>");
        return gq_collinearity_graph(gq_symplectic(static_cast<int>(num(0, "q"))));
    }
    if (family == "gq-elliptic") {
        arity(1, "gq-elliptic <q>");
        return gq_collinearity_graph(gq_elliptic(static_cast<int>(num(0, "q"))));
    }
    if (family == "gq-dual-collinearity") {
        arity(2, "gq-dual-collinearity <symplectic|elliptic> <q>");
        int q = static_cast<int>(num(1, "q"));
        IncidenceStructure s;
        if (params[0] == "symplectic") s = gq_symplectic(q);
        else if (params[0] == "elliptic") s = gq_elliptic(q);
        else throw invalid_argument_error("unknown quadrangle kind '" + params[0] + "'");
        return gq_collinearity_graph(gq_dual(s));
    }
    if (family == "golay") {
        arity(0, "golay");
        return golay_coset_graph();
    }
    if (family == "complete") {
        arity(1, "complete <n>");
        long long n = num(0, "n");
        if (n < 0 || n > 100000) throw invalid_argument_error("vertex count out of range");
        return complete_graph(static_cast<int>(n));
    }
    if (family == "complete-multipartite") {
        if (params.empty())
            throw invalid_argument_error("family 'complete-multipartite' expects: <part sizes...>");
        std::vector<int> parts;
        for (const auto& p : params) parts.push_back(static_cast<int>(parse_ll(p, "part size")));
        return complete_multipartite(parts);
    }
    throw invalid_argument_error("unknown family '" + family + "'");
}

// ---------------------------------------------------------------- spectra

struct SpectrumBundle {
    Spectrum spec;
    std::optional<IntPolynomial> charpoly;
};

// Exact when the graph fits under the size cap (the spectrum is then refined
// against the characteristic polynomial), numeric otherwise. --exact refuses
// the numeric fallback.
SpectrumBundle graph_spectrum(const Graph& g, bool force_exact, double tol) {
    int cap = exact_limit();
    if (g.vertex_count() > cap) {
        if (force_exact)
            throw resource_limit_error("graph has " + std::to_string(g.vertex_count()) +
                                       " vertices, above the exact cap of " + std::to_string(cap) +
                                       "; drop --exact or raise CLIQUEGRAPH_EXACT_LIMIT");
        return {spectrum_numeric(g, tol), std::nullopt};
    }
    IntPolynomial cp = char_poly_exact(g, cap);
    return {refine_spectrum_exact(cp, spectrum_numeric(g, tol)), cp};
}

std::vector<double> entry_values(const Spectrum& s) {
    std::vector<double> v;
    v.reserve(s.entries.size());
    for (const auto& e : s.entries) v.push_back(e.value);
    return v;
}

// Numeric transfer cross-check: shift the input spectrum, adjust the
// (-omega) multiplicity by m-n, and compare against the clique-graph
// spectrum value-by-value with multiplicity.
bool numeric_transfer_matches(const Spectrum& gspec, const Spectrum& cspec, long long k,
                              int omega, double tol) {
    long long n = gspec.total();
    long long m = cspec.total();
    std::vector<double> expected;
    for (const auto& e : gspec.entries)
        expected.insert(expected.end(), static_cast<std::size_t>(e.multiplicity),
                        e.value + static_cast<double>(k) / (omega - 1) - omega);
    for (long long i = 0; i < m - n; ++i) expected.push_back(-omega);
    if (m < n) {
        // exact division case: n-m copies of -omega must cancel
        for (long long i = 0; i < n - m; ++i) {
            bool removed = false;
            for (std::size_t j = 0; j < expected.size(); ++j)
                if (std::abs(expected[j] + omega) <= tol) {
                    expected.erase(expected.begin() + static_cast<std::ptrdiff_t>(j));
                    removed = true;
                    break;
                }
            if (!removed) return false;
        }
    }
    std::vector<double> got;
    for (const auto& e : cspec.entries)
        got.insert(got.end(), static_cast<std::size_t>(e.multiplicity), e.value);
    if (expected.size() != got.size()) return false;
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    for (std::size_t i = 0; i < got.size(); ++i)
        if (std::abs(expected[i] - got[i]) > tol) return false;
    return true;
}

// Extreme line-graph eigenvalues, needed for the interlacing window. For a
// k-regular graph (k >= 2) they follow from the graph's own spectrum; other
// graphs get a direct numeric computation on the built line graph.
std::optional<std::pair<double, double>> line_extremes(const Graph& g, const DegreeInfo& di,
                                                       const Spectrum& gspec, double tol) {
    if (g.edge_count() == 0) return std::nullopt;
    long long m = g.edge_count(), n = g.vertex_count();
    if (di.regular && di.k >= 2) {
        double lo = 1e300, hi = -1e300;
        for (const auto& e : gspec.entries) {
            double v = e.value + di.k - 2;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (m > n) {
            lo = std::min(lo, -2.0);
            hi = std::max(hi, -2.0);
        }
        return std::make_pair(lo, hi);
    }
    Spectrum ls = spectrum_numeric(build_line_graph(g).graph, tol);
    return std::make_pair(ls.entries.back().value, ls.entries.front().value);
}

// ---------------------------------------------------------------- commands

struct CommonFlags {
    bool pretty = false;
    bool timestamp = false;
    std::string output;
};

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& out_path) {
    Graph g = make_family(family, params);
    emit(write_graph6(g) + "\n", out_path);
    return 0;
}

int cmd_analyze(const std::string& input, std::vector<int> omegas, bool force_exact, double tol,
                const CommonFlags& flags) {
    Graph g = parse_graph6(read_text(input));
    ordered_json rep = report_header("analyze", flags.timestamp);
    rep["input"] = graph_stats_to_json(g);
    rep["input"]["graph6"] = write_graph6(g);

    DegreeInfo di = degree_info(g);
    SpectrumBundle gb = graph_spectrum(g, force_exact, tol);
    rep["spectrum"] = spectrum_to_json(gb.spec);

    std::vector<int> orders = clique_regular_orders(g);
    rep["clique_regular_orders"] = orders;
    if (omegas.empty()) omegas = orders;
    std::sort(omegas.begin(), omegas.end());
    omegas.erase(std::unique(omegas.begin(), omegas.end()), omegas.end());
    for (int w : omegas)
        if (w < 2) throw invalid_argument_error("clique order must be at least 2");

    auto lx = line_extremes(g, di, gb.spec, tol);

    ordered_json blocks = ordered_json::array();
    for (int omega : omegas) {
        ordered_json o;
        o["omega"] = omega;
        CliqueRegularity cr = check_clique_regular(g, omega);
        o["is_clique_regular"] = cr.regular;
        if (!cr.regular && cr.counterexample && cr.counterexample->first >= 0) {
            o["counterexample_edge"] = {cr.counterexample->first, cr.counterexample->second};
            o["cliques_through_edge"] = cr.counterexample_count;
        }
        o["is_regular_clique_assembly"] = is_regular_clique_assembly(g, omega);

        CliqueGraphResult built = build_clique_graph(g, omega);
        o["clique_count"] = built.cliques.size();
        o["clique_graph"] = graph_stats_to_json(built.graph);
        if (auto parts = complete_multipartite_parts(built.graph))
            o["clique_graph"]["complete_multipartite_parts"] = *parts;
        if (auto cls = classify_srg(built.graph)) {
            o["clique_graph"]["srg"] = srg_params_to_json(cls->params);
            o["clique_graph"]["srg"]["boring"] = cls->boring;
        }

        SpectrumBundle cb{Spectrum{}, std::nullopt};
        if (built.graph.vertex_count() > 0) {
            cb = graph_spectrum(built.graph, force_exact, tol);
            o["clique_graph_spectrum"] = spectrum_to_json(cb.spec);
        }

        if (lx && built.graph.vertex_count() > 0) {
            EigenBounds ib = interlacing_bounds(omega, lx->first, lx->second);
            EigenBounds db = degree_bounds(omega, di.max_degree);
            std::vector<double> vals = entry_values(cb.spec);
            ordered_json bounds;
            bounds["interlacing"] = {{"low", ib.low}, {"high", ib.high},
                                     {"all_within", all_within(vals, ib)}};
            bounds["degree"] = {{"low", db.low}, {"high", db.high},
                                {"all_within", all_within(vals, db)}};
            o["bounds"] = std::move(bounds);
        }

        if (di.regular && cr.regular) {
            ordered_json tc;
            try {
                if (gb.charpoly && cb.charpoly) {
                    IntPolynomial predicted = predicted_clique_charpoly(
                        *gb.charpoly, g.vertex_count(), di.k, omega);
                    tc["mode"] = "exact";
                    tc["status"] = (predicted == *cb.charpoly) ? "pass" : "fail";
                } else {
                    tc["mode"] = "numeric";
                    tc["status"] = numeric_transfer_matches(gb.spec, cb.spec, di.k, omega,
                                                            std::max(tol, 1e-6))
                                       ? "pass"
                                       : "fail";
                }
            } catch (const not_applicable_error& e) {
                tc["status"] = "not-applicable";
                tc["reason"] = e.what();
            }
            o["transfer_check"] = std::move(tc);
        }
        blocks.push_back(std::move(o));
    }
    rep["omegas"] = std::move(blocks);
    emit_report(rep, flags.pretty, flags.output);
    return 0;
}

int cmd_predict(long long n, long long k, long long lambda, long long mu,
                const std::vector<int>& omegas, const CommonFlags& flags) {
    SrgParams p{n, k, lambda, mu};
    ordered_json rep = report_header("predict", flags.timestamp);
    rep["params"] = srg_params_to_json(p);
    rep["input_spectrum"] = spectrum_to_json(srg_spectrum(p));
    ordered_json blocks = ordered_json::array();
    for (int omega : omegas) {
        CliqueGraphSrgClassification c = clique_graph_srg_classification(p, omega);
        ordered_json o;
        o["omega"] = omega;
        o["clique_count"] = c.m;
        o["clique_degree"] = c.k_star;
        o["spectrum"] = spectrum_to_json(c.predicted_spectrum);
        o["is_srg"] = c.is_srg;
        o["same_params"] = c.same_params;
        if (c.predicted_params) o["predicted_params"] = srg_params_to_json(*c.predicted_params);
        try {
            o["rca_necessary_condition"] = rca_necessary_condition(p, omega) ? "holds" : "fails";
        } catch (const not_applicable_error&) {
            o["rca_necessary_condition"] = "not-applicable";
        }
        blocks.push_back(std::move(o));
    }
    rep["omegas"] = std::move(blocks);
    emit_report(rep, flags.pretty, flags.output);
    return 0;
}

// The omega-cliques of a GQ collinearity graph are exactly its lines, so the
// clique -> line correspondence should map the clique graph onto the dual's
// collinearity graph. Verify the map point-by-point and edge-by-edge.
std::optional<std::string> check_gq_duality(const IncidenceStructure& s) {
    Graph col = gq_collinearity_graph(s);
    CliqueGraphResult built = build_clique_graph(col, s.s + 1);
    if (built.cliques.size() != s.lines.size())
        return "clique count " + std::to_string(built.cliques.size()) + " != line count " +
               std::to_string(s.lines.size());
    std::map<std::vector<int>, int> line_index;
    for (std::size_t i = 0; i < s.lines.size(); ++i)
        line_index[s.lines[i]] = static_cast<int>(i);
    std::vector<int> perm(built.cliques.size());
    std::vector<char> hit(s.lines.size(), 0);
    for (std::size_t i = 0; i < built.cliques.size(); ++i) {
        auto it = line_index.find(built.cliques[i]);
        if (it == line_index.end()) return "a clique of order s+1 is not a line";
        if (hit[static_cast<std::size_t>(it->second)]) return "two cliques map to one line";
        hit[static_cast<std::size_t>(it->second)] = 1;
        perm[i] = it->second;
    }
    Graph dual_col = gq_collinearity_graph(gq_dual(s));
    int m = built.graph.vertex_count();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (built.graph.adjacent(i, j) != dual_col.adjacent(perm[i], perm[j]))
                return "clique adjacency disagrees with dual collinearity at pair (" +
                       std::to_string(i) + "," + std::to_string(j) + ")";
    return std::nullopt;
}

int cmd_verify(const std::string& id, const std::string& corpus_name, int q,
               const CommonFlags& flags) {
    ordered_json rep = report_header("verify", flags.timestamp);
    rep["check"] = id;
    ordered_json checks = ordered_json::array();
    ordered_json counterexample;
    bool all_pass = true;

    auto record = [&](const std::string& name, bool pass, const Graph* witness,
                      const std::string& details) {
        ordered_json c;
        c["name"] = name;
        c["status"] = pass ? "pass" : "fail";
        checks.push_back(std::move(c));
        if (!pass) {
            all_pass = false;
            if (counterexample.is_null()) {
                if (witness) counterexample["graph6"] = write_graph6(*witness);
                counterexample["details"] = details;
            }
        }
    };

    if (id == "transfer") {
        if (corpus_name != "standard")
            throw invalid_argument_error("unknown corpus '" + corpus_name + "'");
        // the corpus tops out at 240-vertex clique graphs; keep them exact
        int cap = std::max(exact_limit(), 240);
        for (const CorpusEntry& entry : standard_corpus()) {
            IntPolynomial base = char_poly_exact(entry.graph, cap);
            DegreeInfo di = degree_info(entry.graph);
            for (int omega : clique_regular_orders(entry.graph)) {
                CliqueGraphResult built = build_clique_graph(entry.graph, omega);
                IntPolynomial lhs = char_poly_exact(built.graph, cap);
                IntPolynomial rhs =
                    predicted_clique_charpoly(base, entry.graph.vertex_count(), di.k, omega);
                bool pass = lhs == rhs;
                record("transfer/" + entry.name + "/omega-" + std::to_string(omega), pass,
                       &entry.graph, "characteristic polynomials differ at omega=" +
                                         std::to_string(omega));
            }
        }
    } else if (id == "three-graph-classification") {
        SrgEnumerationResult res = enumerate_srg_locally_linear_with_srg_clique_graph();
        ordered_json accepted = ordered_json::array();
        for (const auto& p : res.accepted) accepted.push_back(srg_params_to_json(p));
        rep["accepted"] = std::move(accepted);
        ordered_json rejected = ordered_json::array();
        for (const auto& r : res.rejected) {
            ordered_json j;
            j["branch"] = r.branch;
            j["params"] = srg_params_to_json(r.params);
            j["reason"] = r.reason;
            rejected.push_back(std::move(j));
        }
        rep["rejected"] = std::move(rejected);
        std::vector<SrgParams> want{{9, 4, 1, 2}, {15, 6, 1, 3}, {27, 10, 1, 5}};
        record("three-graph-classification/accepted-set", res.accepted == want, nullptr,
               "enumeration returned a different set of parameters");
    } else if (id == "gq-duality") {
        {
            IncidenceStructure s = gq_symplectic(q);
            auto why = check_gq_duality(s);
            record("gq-duality/symplectic-" + std::to_string(q), !why, nullptr,
                   why.value_or(""));
        }
        if (q == 2 || q == 3) {
            IncidenceStructure s = gq_elliptic(q);
            auto why = check_gq_duality(s);
            record("gq-duality/elliptic-" + std::to_string(q), !why, nullptr, why.value_or(""));
        }
    } else {
        throw invalid_argument_error("unknown verify id '" + id + "'");
    }

    rep["checks"] = std::move(checks);
    if (!counterexample.is_null()) rep["counterexample"] = std::move(counterexample);
    rep["result"] = all_pass ? "pass" : "fail";
    emit_report(rep, flags.pretty, flags.output);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clique graph toolkit: generate, analyze, predict, verify"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string gen_family;
    std::vector<std::string> gen_params;
    std::string analyze_input = "-";
    std::vector<int> omegas;
    bool force_exact = false;
    double tol = 1e-6;
    std::vector<long long> predict_params;
    std::string verify_id;
    std::string corpus_name = "standard";
    int verify_q = 2;

    CLI::App* gen = app.add_subcommand("gen", "emit a family member as graph6");
    gen->add_option("family", gen_family, "family name")->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("--output", flags.output, "write to a file instead of stdout");

    CLI::App* analyze = app.add_subcommand("analyze", "clique/spectral report for a graph6 input");
    analyze->add_option("input", analyze_input, "graph6 file, or - for stdin");
    analyze->add_option("--omega", omegas, "clique order (repeatable; default: all regular ones)");
    analyze->add_flag("--exact", force_exact, "fail instead of switching to numeric spectra");
    analyze->add_option("--tol", tol, "numeric grouping tolerance")->check(CLI::PositiveNumber);
    analyze->add_flag("--pretty", flags.pretty, "plain-text rendering instead of JSON");
    analyze->add_flag("--timestamp", flags.timestamp, "include a generation timestamp");
    analyze->add_option("--output", flags.output, "write to a file instead of stdout");

    CLI::App* predict = app.add_subcommand("predict", "clique-graph spectrum from srg parameters");
    predict->add_option("params", predict_params, "n k lambda mu")->expected(4)->required();
    predict->add_option("--omega", omegas, "clique order (repeatable)")->required();
    predict->add_flag("--pretty", flags.pretty, "plain-text rendering instead of JSON");
    predict->add_flag("--timestamp", flags.timestamp, "include a generation timestamp");
    predict->add_option("--output", flags.output, "write to a file instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "run a named theorem check");
    verify->add_option("id", verify_id,
                       "one of: transfer, three-graph-classification, gq-duality")
        ->required();
    verify->add_option("--corpus", corpus_name, "corpus for the transfer check");
    verify->add_option("--q", verify_q, "field order for the gq-duality check");
    verify->add_flag("--pretty", flags.pretty, "plain-text rendering instead of JSON");
    verify->add_flag("--timestamp", flags.timestamp, "include a generation timestamp");
    verify->add_option("--output", flags.output, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_family, gen_params, flags.output);
        if (analyze->parsed()) return cmd_analyze(analyze_input, omegas, force_exact, tol, flags);
        if (predict->parsed()) {
            std::vector<int> ws(omegas.begin(), omegas.end());
            return cmd_predict(predict_params[0], predict_params[1], predict_params[2],
                               predict_params[3], ws, flags);
        }
        if (verify->parsed()) return cmd_verify(verify_id, corpus_name, verify_q, flags);
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const invalid_argument_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const infeasible_params_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const not_applicable_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
