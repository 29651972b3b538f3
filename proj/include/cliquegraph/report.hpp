// JSON serialization helpers shared by the command-line tool and its tests.
// Field order is fixed (ordered_json) so identical inputs always produce
// byte-identical documents. Exact quantities are emitted as canonical
// strings; floating-point quantities carry the tolerance they were grouped
// under, so every number in a report states its provenance.
#pragma once

#include <string>

#include <json.hpp>

#include "cliquegraph/exact_value.hpp"
#include "cliquegraph/graph.hpp"
#include "cliquegraph/polynomial.hpp"
#include "cliquegraph/spectrum.hpp"
#include "cliquegraph/srg.hpp"

namespace cliquegraph {

using ordered_json = nlohmann::ordered_json;

inline constexpr int report_schema_version = 1;

inline ordered_json spectrum_to_json(const Spectrum& sp) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : sp.entries) {
        ordered_json j;
        if (e.exact) {
            j["value"] = e.exact->str();
            j["multiplicity"] = e.multiplicity;
            j["provenance"] = "exact";
        } else {
            j["value"] = e.value;
            j["multiplicity"] = e.multiplicity;
            j["provenance"] = "numeric";
            j["tol"] = e.tol.value_or(0.0);
        }
        entries.push_back(std::move(j));
    }
    return entries;
}

inline ordered_json srg_params_to_json(const SrgParams& p) {
    ordered_json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["lambda"] = p.lambda;
    j["mu"] = p.mu;
    return j;
}

inline ordered_json polynomial_to_json(const IntPolynomial& p) {
    ordered_json j;
    j["degree"] = p.degree();
    j["coefficients_ascending"] = p.coeff_strings();
    return j;
}

inline ordered_json graph_stats_to_json(const Graph& g) {
    ordered_json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    DegreeInfo info = degree_info(g);
    j["regular"] = info.regular;
    if (info.regular) j["degree"] = info.k;
    else j["max_degree"] = info.max_degree;
    return j;
}

}  // namespace cliquegraph
